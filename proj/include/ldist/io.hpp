#pragma once

#include <string>

namespace ldist {

// Shortest exact decimal form used in CSV output (printf %.17g trimmed by the
// round-trip check through %.15g / %.16g).
std::string format_g17(double v);

// Writes content to path, throwing io_error on any failure.
void write_text(const std::string& path, const std::string& content);

} // namespace ldist
