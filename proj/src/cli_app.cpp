#include "ldist/cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ldist/averages.hpp"
#include "ldist/characters.hpp"
#include "ldist/common.hpp"
#include "ldist/fourier.hpp"
#include "ldist/io.hpp"
#include "ldist/lfunc.hpp"
#include "ldist/local_factors.hpp"
#include "ldist/summation.hpp"

namespace ldist {
namespace {

using ordered_json = nlohmann::ordered_json;
using steady_clock = std::chrono::steady_clock;

struct common_opts {
    std::string output_dir = ".";
    int threads = 0;  // 0 = hardware concurrency
};

void check_sigma(double sigma) {
    if (!(sigma > 0.5)) throw validation_error("sigma must exceed 0.5");
}

lambda_mode parse_mode(const std::string& s) {
    if (s == "logl") return lambda_mode::log_l;
    if (s == "logderiv") return lambda_mode::log_deriv;
    throw validation_error("mode must be logl or logderiv");
}

std::string characteristic_csv(const fourier_grid& g) {
    std::string s = "x,re,im\n";
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
        s += format_g17(g.xs[i]);
        s += ',';
        s += format_g17(g.values[i].real());
        s += ',';
        s += format_g17(g.values[i].imag());
        s += '\n';
    }
    return s;
}

std::string density_csv(const density_grid& d) {
    std::string s = "u,density\n";
    for (std::size_t i = 0; i < d.us.size(); ++i) {
        s += format_g17(d.us[i]);
        s += ',';
        s += format_g17(d.values[i]);
        s += '\n';
    }
    return s;
}

// All timing and timestamp output goes to the sidecar file and nowhere else,
// so every other artifact is byte-reproducible.
void emit(const common_opts& c, const std::string& prefix, const ordered_json& report,
          const std::vector<std::pair<std::string, std::string>>& files,
          steady_clock::time_point t0) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(c.output_dir, ec);
    if (ec) throw io_error("cannot create output directory: " + c.output_dir);
    const std::string base = c.output_dir + "/" + prefix + "_";
    for (const auto& [name, content] : files) write_text(base + name, content);
    write_text(base + "report.json", report.dump(2) + "\n");

    const double elapsed =
        std::chrono::duration<double>(steady_clock::now() - t0).count();
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char stamp[64];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    char line[128];
    std::snprintf(line, sizeof(line), "generated_utc: %s\nelapsed_seconds: %.3f\n",
                  stamp, elapsed);
    write_text(base + "sidecar.txt", line);
}

struct density_opts {
    double sigma = 0.0;
    double x_max = 0.0;  // 0 = automatic truncation
    double tol = 1e-8;
    int n_points = 0;  // 0 = alias-safe minimum
    double u_min = -8.0;
    double u_max = 8.0;
    int u_points = 2001;
};

void add_density_opts(CLI::App* sub, density_opts& o) {
    sub->add_option("--sigma", o.sigma, "real part of s (must exceed 0.5)")->required();
    sub->add_option("--x-max", o.x_max,
                    "characteristic-function truncation point (0 = automatic)");
    sub->add_option("--tol", o.tol, "decay tolerance for automatic truncation");
    sub->add_option("--n-points", o.n_points,
                    "characteristic-function samples (0 = alias-safe minimum)");
    sub->add_option("--u-min", o.u_min, "left edge of the density grid");
    sub->add_option("--u-max", o.u_max, "right edge of the density grid");
    sub->add_option("--u-points", o.u_points, "density grid size");
}

struct density_run {
    fourier_grid grid;
    density_grid dens;
    double x_max = 0.0;
    int n_points = 0;
};

density_run run_density(const std::function<cplx(double)>& f, const density_opts& o) {
    check_sigma(o.sigma);
    if (!(o.u_max > o.u_min)) throw validation_error("u-max must exceed u-min");
    if (o.u_points < 3) throw validation_error("u-points must be at least 3");
    density_run r;
    r.x_max = o.x_max > 0.0 ? o.x_max : auto_truncate(f, o.tol);
    r.n_points = alias_safe_points(r.x_max, o.u_min, o.u_max, o.n_points);
    r.grid = sample_characteristic(f, r.x_max, r.n_points);
    r.dens = invert(r.grid, o.u_min, o.u_max, o.u_points);
    return r;
}

ordered_json density_json(const std::string& command, const ordered_json& config,
                          const density_run& r, std::vector<std::string> warnings) {
    if (r.dens.truncation_warning)
        warnings.push_back("density has visible mass at the u window edge; "
                           "widen u-min/u-max");
    if (r.dens.min_value < -1e-6)
        warnings.push_back("density dips below zero beyond rounding level");
    ordered_json j;
    j["command"] = command;
    j["config"] = config;
    j["results"] = {{"mass", r.dens.mass},
                    {"imag_residue", r.dens.imag_residue},
                    {"min_value", r.dens.min_value},
                    {"edge_magnitude", r.dens.edge_magnitude},
                    {"symmetry_defect", r.grid.symmetry_defect}};
    j["warnings"] = warnings;
    return j;
}

void register_mdensity(CLI::App& app, const common_opts& c) {
    auto o = std::make_shared<density_opts>();
    auto y = std::make_shared<double>(13.0);
    auto probe_x = std::make_shared<double>(0.0);
    auto* sub = app.add_subcommand(
        "mdensity", "density of the two-sided log value over the prime torus");
    add_density_opts(sub, *o);
    sub->add_option("--y", *y, "prime cutoff of the finite Euler product");
    auto* probe_opt = sub->add_option(
        "--x", *probe_x, "record the characteristic function at this frequency");
    sub->callback([&c, o, y, probe_x, probe_opt] {
        const auto t0 = steady_clock::now();
        if (!(*y > 2.0)) throw validation_error("y must exceed 2");
        set_max_threads(c.threads);
        const double sigma = o->sigma;
        const double yy = *y;
        auto f = [sigma, yy](double x) { return m_tilde_quad(sigma, x, yy); };
        const auto r = run_density(f, *o);
        ordered_json config = {{"sigma", o->sigma}, {"y", yy},
                               {"x_max", r.x_max},  {"tol", o->tol},
                               {"n_points", r.n_points}, {"u_min", o->u_min},
                               {"u_max", o->u_max}, {"u_points", o->u_points}};
        ordered_json j = density_json("mdensity", config, r, {});
        if (probe_opt->count() > 0) {
            check_sigma(sigma);
            const cplx v = f(*probe_x);
            j["results"]["probe_x"] = *probe_x;
            j["results"]["probe_re"] = v.real();
            j["results"]["probe_im"] = v.imag();
        }
        emit(c, "mdensity", j,
             {{"characteristic.csv", characteristic_csv(r.grid)},
              {"density.csv", density_csv(r.dens)}},
             t0);
    });
}

void register_qdensity(CLI::App& app, const common_opts& c) {
    auto o = std::make_shared<density_opts>();
    auto tail_tol = std::make_shared<double>(1e-8);
    auto mode_str = std::make_shared<std::string>("logl");
    auto check_real = std::make_shared<bool>(false);
    auto* sub = app.add_subcommand(
        "qdensity", "density of the log value averaged over quadratic characters");
    add_density_opts(sub, *o);
    sub->add_option("--tail-tol", *tail_tol, "certified Euler-product tail bound");
    sub->add_option("--mode", *mode_str, "logl or logderiv");
    sub->add_flag("--check-real", *check_real,
                  "print the largest imaginary residue of the inversion");
    sub->callback([&c, o, tail_tol, mode_str, check_real] {
        const auto t0 = steady_clock::now();
        const lambda_mode mode = parse_mode(*mode_str);
        set_max_threads(c.threads);
        std::vector<std::string> warnings;
        if (o->sigma < 0.55 && o->sigma > 0.5)
            warnings.push_back("sigma is close to 0.5; the characteristic function "
                               "decays slowly and runs may be long");
        const double sigma = o->sigma;
        const double tt = *tail_tol;
        auto f = [sigma, tt, mode](double x) {
            return q_tilde_full(sigma, x, tt, mode).value;
        };
        const auto r = run_density(f, *o);
        ordered_json config = {{"sigma", o->sigma}, {"mode", *mode_str},
                               {"tail_tol", tt},    {"x_max", r.x_max},
                               {"tol", o->tol},     {"n_points", r.n_points},
                               {"u_min", o->u_min}, {"u_max", o->u_max},
                               {"u_points", o->u_points}};
        emit(c, "qdensity", density_json("qdensity", config, r, warnings),
             {{"characteristic.csv", characteristic_csv(r.grid)},
              {"density.csv", density_csv(r.dens)}},
             t0);
        if (*check_real)
            std::printf("max imaginary residue: %.6e\n", r.dens.imag_residue);
    });
}

void register_empirical_dirichlet(CLI::App& emp, const common_opts& c) {
    struct opts {
        std::int64_t q = 0;
        double sigma = 1.5;
        double x = 1.0;
        double y = 13.0;
    };
    auto o = std::make_shared<opts>();
    auto* sub = emp.add_subcommand(
        "dirichlet", "average over the characters of a prime modulus");
    sub->add_option("--q", o->q, "prime modulus")->required();
    sub->add_option("--sigma", o->sigma, "real part of s");
    sub->add_option("--x", o->x, "frequency of the test function");
    sub->add_option("--y", o->y, "prime cutoff of the finite Euler product");
    sub->callback([&c, o] {
        const auto t0 = steady_clock::now();
        check_sigma(o->sigma);
        set_max_threads(c.threads);
        const auto tab = build_character_table(o->q);
        const auto avg = dirichlet_average(tab, o->sigma, o->x, o->y);
        const auto plan =
            make_truncation_plan(1e-6, std::max(std::abs(o->x), 1.0), o->y);
        const cplx ref = m_tilde(o->sigma, o->x, plan);
        ordered_json j;
        j["command"] = "empirical_dirichlet";
        j["config"] = {{"q", o->q}, {"sigma", o->sigma}, {"x", o->x}, {"y", o->y}};
        j["results"] = {{"mean_re", avg.mean.real()},
                        {"mean_im", avg.mean.imag()},
                        {"std_error", avg.std_error},
                        {"characters", avg.samples},
                        {"reference_re", ref.real()},
                        {"reference_im", ref.imag()},
                        {"abs_diff", std::abs(avg.mean - ref)}};
        j["warnings"] = ordered_json::array();
        emit(c, "empirical_dirichlet", j, {}, t0);
    });
}

void register_empirical_quadratic(CLI::App& emp, const common_opts& c) {
    struct opts {
        std::int64_t big_y = 0;
        double sigma = 0.0;
        double x = 1.0;
        std::string mode = "logl";
        std::string route = "series";
        double smoothing_x = 0.0;
        double ref_tail_tol = 1e-6;
    };
    auto o = std::make_shared<opts>();
    auto* sub = emp.add_subcommand(
        "quadratic", "average over real characters of fundamental discriminants");
    sub->add_option("--big-y,--Y", o->big_y, "discriminant bound |D| <= big-y")
        ->required();
    sub->add_option("--sigma", o->sigma, "real part of s")->required();
    sub->add_option("--x", o->x, "frequency of the test function");
    sub->add_option("--mode", o->mode, "logl or logderiv");
    sub->add_option("--route", o->route, "series or oracle evaluation per discriminant");
    sub->add_option("--smoothing-x", o->smoothing_x,
                    "series smoothing scale (0 = 20 sqrt(big-y))");
    sub->add_option("--ref-tail-tol", o->ref_tail_tol,
                    "tail bound for the Euler-product reference value");
    sub->callback([&c, o] {
        const auto t0 = steady_clock::now();
        check_sigma(o->sigma);
        const lambda_mode mode = parse_mode(o->mode);
        quad_route route;
        if (o->route == "series") route = quad_route::smoothed_series;
        else if (o->route == "oracle") route = quad_route::oracle;
        else throw validation_error("route must be series or oracle");
        set_max_threads(c.threads);
        const auto res = quadratic_average(o->big_y, o->sigma, o->x, mode, route,
                                           o->smoothing_x);
        const cplx ref = q_tilde_full(o->sigma, o->x, o->ref_tail_tol, mode).value;
        ordered_json j;
        j["command"] = "empirical_quadratic";
        j["config"] = {{"big_y", o->big_y},
                       {"sigma", o->sigma},
                       {"x", o->x},
                       {"mode", o->mode},
                       {"route", o->route},
                       {"smoothing_x", res.smoothing_x},
                       {"cap", res.cap},
                       {"ref_tail_tol", o->ref_tail_tol}};
        j["results"] = {{"value_re", res.value.real()},
                        {"value_im", res.value.imag()},
                        {"reference_re", ref.real()},
                        {"reference_im", ref.imag()},
                        {"abs_diff", std::abs(res.value - ref)},
                        {"considered", res.considered},
                        {"used", res.used},
                        {"excluded", res.excluded},
                        {"inconclusive", res.inconclusive}};
        j["warnings"] = ordered_json::array();
        emit(c, "empirical_quadratic", j, {}, t0);
    });
}

void register_empirical_torus(CLI::App& emp, const common_opts& c) {
    struct opts {
        double sigma = 0.0;
        double y = 13.0;
        double x = 1.0;
        std::int64_t samples = 100000;
        std::uint64_t seed = 12345;
        std::string bins;
    };
    auto o = std::make_shared<opts>();
    auto* sub = emp.add_subcommand(
        "torus", "Monte Carlo average over independent unit-circle angles");
    sub->add_option("--sigma", o->sigma, "real part of s")->required();
    sub->add_option("--y", o->y, "prime cutoff of the finite Euler product");
    sub->add_option("--x", o->x, "frequency of the test function");
    sub->add_option("--samples", o->samples, "Monte Carlo sample count");
    sub->add_option("--seed", o->seed, "random seed");
    sub->add_option("--bins", o->bins,
                    "histogram request lo:hi:n; adds a histogram CSV with the "
                    "model bin masses");
    sub->callback([&c, o] {
        const auto t0 = steady_clock::now();
        check_sigma(o->sigma);
        set_max_threads(c.threads);
        const auto est = torus_mc_psi(o->sigma, o->y, o->x, o->samples, o->seed);
        const cplx ref = m_tilde_quad(o->sigma, o->x, o->y);
        ordered_json j;
        j["command"] = "empirical_torus";
        j["config"] = {{"sigma", o->sigma}, {"y", o->y},       {"x", o->x},
                       {"samples", o->samples}, {"seed", o->seed}};
        j["results"] = {{"mean_re", est.mean.real()},
                        {"mean_im", est.mean.imag()},
                        {"std_error", est.std_error},
                        {"reference_re", ref.real()},
                        {"reference_im", ref.imag()},
                        {"abs_diff", std::abs(est.mean - ref)}};
        j["warnings"] = ordered_json::array();
        std::vector<std::pair<std::string, std::string>> files;
        if (!o->bins.empty()) {
            double lo = 0.0, hi = 0.0;
            long long nb = 0;
            if (std::sscanf(o->bins.c_str(), "%lf:%lf:%lld", &lo, &hi, &nb) != 3 ||
                !(hi > lo) || nb < 1)
                throw validation_error("bins must be lo:hi:n with hi > lo, n >= 1");
            std::vector<double> edges(static_cast<std::size_t>(nb) + 1);
            for (long long b = 0; b <= nb; ++b)
                edges[static_cast<std::size_t>(b)] = lo + (hi - lo) * b / nb;
            const auto hist =
                torus_mc_histogram(o->sigma, o->y, edges, o->samples, o->seed);
            const double sigma = o->sigma;
            const double yy = o->y;
            auto f = [sigma, yy](double x) { return m_tilde_quad(sigma, x, yy); };
            const double x_max = auto_truncate(f, 1e-6);
            const int n_pts = alias_safe_points(x_max, lo - 2.0, hi + 2.0, 0);
            const auto model =
                bin_masses(sample_characteristic(f, x_max, n_pts), edges);
            std::string csv = "lo,hi,freq,model\n";
            for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
                csv += format_g17(edges[b]);
                csv += ',';
                csv += format_g17(edges[b + 1]);
                csv += ',';
                csv += format_g17(hist.freq[b]);
                csv += ',';
                csv += format_g17(model[b]);
                csv += '\n';
            }
            files.emplace_back("histogram.csv", csv);
            j["results"]["histogram_total"] = hist.total;
            j["results"]["histogram_below"] = hist.below;
            j["results"]["histogram_above"] = hist.above;
            j["results"]["max_bin_stderr"] = hist.max_bin_stderr;
        }
        emit(c, "empirical_torus", j, files, t0);
    });
}

std::string trim_copy(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Canonical option name for precedence checks; --Y is an alias of --big-y.
std::string canonical_key(std::string name) {
    if (name == "Y") return "big-y";
    return name;
}

// Reads a flat key=value file into --key=value tokens, keeping the last
// occurrence of a repeated key. Flags passed on the command line win, so keys
// in `given` are dropped.
std::vector<std::string> config_tokens(const std::string& path,
                                       const std::set<std::string>& given) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read config file: " + path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim_copy(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line is not key=value: " + t);
        const std::string key = canonical_key(trim_copy(t.substr(0, eq)));
        const std::string value = trim_copy(t.substr(eq + 1));
        if (key.empty()) throw validation_error("config line has empty key: " + t);
        auto it = std::find_if(pairs.begin(), pairs.end(),
                               [&key](const auto& p) { return p.first == key; });
        if (it != pairs.end()) it->second = value;
        else pairs.emplace_back(key, value);
    }
    std::vector<std::string> tokens;
    for (const auto& [key, value] : pairs) {
        if (given.count(key)) continue;
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

// Pulls --config out of the raw arguments and splices the file's key=value
// pairs in as options, placed after the last subcommand name so they bind in
// subcommand scope (globals still resolve by fallthrough). Precedence is
// defaults < config < explicit flags.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw validation_error("--config requires a file path");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (path.empty()) return args;

    std::set<std::string> given;
    for (const auto& a : args) {
        if (a.rfind("--", 0) != 0 || a.size() <= 2) continue;
        const auto eq = a.find('=');
        given.insert(canonical_key(
            a.substr(2, eq == std::string::npos ? std::string::npos : eq - 2)));
    }
    const std::set<std::string> command_names{"mdensity",  "qdensity", "empirical",
                                              "dirichlet", "quadratic", "torus"};
    std::size_t insert_at = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (command_names.count(args[i])) insert_at = i + 1;
    }
    const auto tokens = config_tokens(path, given);
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(insert_at),
                tokens.begin(), tokens.end());
    return args;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"value-distribution densities for logarithms of L-functions"};
    app.require_subcommand(1);
    app.fallthrough();
    // Handled before parsing (see apply_config); registered so help lists it.
    std::string config_path_doc;
    app.add_option("--config", config_path_doc,
                   "read options from a flat key=value file; explicit flags win");

    common_opts c;
    app.add_option("--output-dir", c.output_dir, "directory for output files")
        ->envname("LDIST_OUTPUT_DIR");
    app.add_option("--threads", c.threads,
                   "worker threads (0 = hardware concurrency); results do not "
                   "depend on this");

    register_mdensity(app, c);
    register_qdensity(app, c);
    auto* emp = app.add_subcommand("empirical", "empirical averages and checks");
    emp->require_subcommand(1);
    register_empirical_dirichlet(*emp, c);
    register_empirical_quadratic(*emp, c);
    register_empirical_torus(*emp, c);

    try {
        auto args = apply_config(std::vector<std::string>(argv + 1, argv + argc));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const numeric_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}

} // namespace ldist
