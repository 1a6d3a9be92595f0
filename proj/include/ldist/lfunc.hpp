#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ldist/coefficients.hpp"
#include "ldist/common.hpp"

namespace ldist {

// Hurwitz zeta(s, a) for s > 1/2, s != 1, 0 < a <= 1 by Euler-Maclaurin.
double hurwitz_zeta(double s, double a);
double digamma(double x);  // x > 0

// L(sigma, chi_D) for the real character kronecker(D, .): the Hurwitz-zeta
// combination q^-sigma sum_a chi(a) zeta(sigma, a/q), and -1/q sum_a chi(a)
// psi(a/q) at sigma = 1 where the zeta combination has a removable pole.
double dirichlet_l_real(double sigma, std::int64_t d);
double hurwitz_log(double sigma, std::int64_t d);  // log L; L must be positive
double l_log_deriv(double sigma, std::int64_t d);  // (L'/L) by Richardson differences

struct euler_log_value {
    cplx value{0.0, 0.0};
    double y = 0.0;
    std::int64_t excluded_q = 0;
};
// Truncated Euler logarithm sum_{p <= y} -log(1 - chi(p) p^-sigma), optionally
// skipping one prime (a ramified modulus, say).
euler_log_value euler_log(double sigma, const std::function<cplx(std::int64_t)>& chi,
                          double y, std::int64_t exclude_q = 0);

// Dirichlet-series weights of the value-distribution test function: the n-th
// coefficient of exp(ix log L) (or exp(ix L'/L)) is multiplicative with
// prime-power values from lambda_prime_power. weights[n] also carries the
// n^-sigma exp(-n/x_smooth) smoothing, so a character dot product gives the
// smoothed test-function value directly.
struct psi_series_tables {
    double sigma = 0.0;
    double x = 0.0;
    double x_smooth = 0.0;
    lambda_mode mode = lambda_mode::log_l;
    std::int64_t cap = 0;
    std::vector<cplx> weights;  // index 0 unused
};
psi_series_tables build_psi_series_tables(double sigma, double x, lambda_mode mode,
                                          double x_smooth, std::int64_t cap);

// chi_D(n) for 0 <= n <= cap by a completely multiplicative sieve; spf must
// cover cap. out is assigned in place.
void chi_d_sieve(std::int64_t d, std::int64_t cap,
                 const std::vector<std::int32_t>& spf, std::vector<std::int8_t>& out);

// Smoothed series value for a single discriminant. cap = 0 uses 10 x_smooth.
cplx smoothed_psi(double sigma, double x, lambda_mode mode, std::int64_t d,
                  double x_smooth, std::int64_t cap = 0);

// Partial sum of L(s, chi_D) over n <= t.
double l_series_truncated(double s, std::int64_t d, std::int64_t t);

// Positivity screen on the sigma-grid {sigma, sigma+step, ..., 2}: a
// discriminant is accepted when every truncated L value is provably positive
// (|partial sum| exceeds the tail bound), rejected when provably negative
// somewhere, and reported uncertified when the escalation budget runs out.
struct dagger_tables {
    double sigma = 0.0;
    double grid_step = 0.0;
    std::vector<double> grid;
    std::int64_t t1 = 0;
    std::vector<std::int32_t> spf;   // to t1, for the stage-1 chi sieve
    std::vector<double> powtab;      // powtab[g*t1 + n-1] = n^-grid[g]
};
dagger_tables build_dagger_tables(double sigma, double grid_step = 0.05,
                                  std::int64_t t1 = 16384);

struct dagger_outcome {
    bool accepted = false;
    bool certified = false;
    double min_value = 0.0;
    double worst_sigma = 0.0;
};
dagger_outcome dagger_filter(std::int64_t d, const dagger_tables& tables);
bool dagger_filter_simple(double sigma, std::int64_t d);

} // namespace ldist
