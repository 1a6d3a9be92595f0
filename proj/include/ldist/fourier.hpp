#pragma once

#include <functional>
#include <vector>

#include "ldist/common.hpp"

namespace ldist {

// Characteristic function sampled on a symmetric grid [-x_max, x_max].
// Values at negative x are filled by conjugate symmetry; the defect field
// records how far the supplied function is from that symmetry on spot checks.
struct fourier_grid {
    double x_max = 0.0;
    int n_points = 0;  // odd, >= 129
    std::vector<double> xs;
    std::vector<cplx> values;
    double symmetry_defect = 0.0;
};

fourier_grid sample_characteristic(const std::function<cplx(double)>& f,
                                   double x_max, int n_points);

struct density_grid {
    double u_min = 0.0;
    double u_max = 0.0;
    std::vector<double> us;
    std::vector<double> values;   // density w.r.t. the measure du/sqrt(2 pi)
    double mass = 0.0;            // trapezoid of values over the grid / sqrt(2 pi)
    double imag_residue = 0.0;    // largest |imaginary part|, tracked separately
    double min_value = 0.0;       // most negative sample (ringing indicator)
    bool truncation_warning = false;  // |F| at the grid edge above 1e-6
    double edge_magnitude = 0.0;
};

// density(u) = (1/sqrt(2 pi)) int F(x) exp(-iux) dx by composite Simpson over
// the sampled grid, so that mass = int density du/sqrt(2 pi) is near 1 for a
// characteristic function. Negative values are kept as-is; clamping is
// presentation-only.
density_grid invert(const fourier_grid& grid, double u_min, double u_max, int n_u);

// Smallest power-of-two x_max from {1, 2, ..., 8192} such that |f| stays below
// tol at x_max and at eight probe points up to 1.125 x_max; throws
// numeric_error when even the cap fails.
double auto_truncate(const std::function<cplx(double)>& f, double tol);

// Point count for sample_characteristic: keeps the inversion's periodization
// interval 2 pi/dx at least (u_max - u_min) + 4 so alias copies fall outside
// the requested window, with a floor of 4097 points. requested > 0 overrides.
int alias_safe_points(double x_max, double u_min, double u_max, int requested);

// Probability assigned to each [edges[i], edges[i+1]) directly from the
// characteristic grid: (1/2 pi) int F(x) (exp(-iax) - exp(-ibx))/(ix) dx.
std::vector<double> bin_masses(const fourier_grid& grid,
                               const std::vector<double>& edges);

} // namespace ldist
