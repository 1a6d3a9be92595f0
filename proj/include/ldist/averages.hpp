#pragma once

#include <cstdint>
#include <vector>

#include "ldist/characters.hpp"
#include "ldist/coefficients.hpp"
#include "ldist/common.hpp"

namespace ldist {

struct mc_estimate {
    cplx mean{0.0, 0.0};
    double std_error = 0.0;
    std::int64_t samples = 0;
};

// Monte Carlo average of exp(i x u) where u = -sum_{p <= y} log|1 - a_p e^{i
// theta_p}|^2 with independent uniform angles, a_p = p^-sigma. Deterministic
// for a fixed seed regardless of thread count.
mc_estimate torus_mc_psi(double sigma, double y, double x, std::int64_t n_samples,
                         std::uint64_t seed);

struct histogram_result {
    std::vector<double> edges;
    std::vector<double> freq;  // probability mass per bin
    std::int64_t total = 0;
    std::int64_t below = 0;
    std::int64_t above = 0;
    double max_bin_stderr = 0.0;
};
histogram_result torus_mc_histogram(double sigma, double y,
                                    const std::vector<double>& edges,
                                    std::int64_t n_samples, std::uint64_t seed);

// Same u statistic evaluated for every non-principal character of the table's
// prime modulus (angles come from the discrete logarithm instead of random
// draws). Requires y < q so all primes in the product are invertible mod q.
histogram_result dirichlet_histogram(const character_table& tab, double sigma,
                                     double y, const std::vector<double>& edges);
mc_estimate dirichlet_average(const character_table& tab, double sigma, double x,
                              double y);

enum class quad_route { smoothed_series, oracle };

struct quadratic_avg_result {
    cplx value{0.0, 0.0};
    std::int64_t considered = 0;
    std::int64_t used = 0;
    std::int64_t excluded = 0;
    std::int64_t inconclusive = 0;
    double smoothing_x = 0.0;
    std::int64_t cap = 0;
};

// Average of exp(i x log L) (or exp(i x L'/L)) over fundamental discriminants
// |D| <= big_y that pass the positivity screen. The smoothed_series route
// evaluates the Dirichlet-series expansion with weight exp(-n/smoothing_x); the
// oracle route evaluates the L-function directly via Hurwitz zeta values.
// smoothing_x <= 0 selects 20 sqrt(big_y).
quadratic_avg_result quadratic_average(std::int64_t big_y, double sigma, double x,
                                       lambda_mode mode, quad_route via,
                                       double smoothing_x = 0.0);

// Truncation of the Dirichlet series identity for the quadratic average:
// sum_{n <= n_max} v(n) n^-2sigma with v multiplicative and
// v(p^e) = lambda(p^{2e}) p/(p+1).
cplx rhs_series(double sigma, double x, lambda_mode mode, std::int64_t n_max);

struct convergence_row {
    double y = 0.0;
    double mass = 0.0;
    double sup_distance = 0.0;  // sup |density_y - density_prev|; 0 for the first row
};
// Densities of the finite-product statistic for each cutoff y on a shared
// grid (n_points = 0 picks the alias-safe minimum), with the sup distance
// between consecutive rows.
std::vector<convergence_row> uniform_convergence_report(double sigma,
                                                        const std::vector<double>& ys,
                                                        double x_max, int n_points,
                                                        double u_min, double u_max,
                                                        int n_u);

} // namespace ldist
