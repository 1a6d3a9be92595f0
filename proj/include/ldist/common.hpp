#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ldist {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double sqrt_two_pi = 2.50662827463100050241576528481104525;

// Parameter errors a caller can fix (CLI exit code 2).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem / output errors (CLI exit code 3).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-convergence or loss of numerical control (CLI exit code 4).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ldist
