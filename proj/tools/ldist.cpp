#include "ldist/cli_app.hpp"

int main(int argc, char** argv) { return ldist::run_cli(argc, argv); }
