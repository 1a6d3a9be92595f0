#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ldist/coefficients.hpp"
#include "ldist/common.hpp"

namespace ldist {

// Per-prime series cutoffs N_p for the truncated Euler product of the
// unitary-family characteristic function, valid for all |x| <= big_r with
// total product error budget epsilon.  All thresholds are carried in log
// space because c(R) = exp(R/(sqrt(1.4)-1)) overflows double for big_r
// beyond ~130.
struct truncation_plan {
    double epsilon = 0.0;
    double big_r = 0.0;
    double y = 0.0;
    double log_cr = 0.0;  // log c(R) = big_r/(sqrt(1.4)-1)
    double cr = 0.0;      // exp(log_cr), +inf if it overflows
    double log_c1 = 0.0;  // log of (576 c(R)^8 / ((1-sqrt(0.7))^2 eps^2))^2
    double c1 = 0.0;      // exp(log_c1), +inf if it overflows
    double log_t = 0.0;   // log of T = (1-sqrt(0.7)) eps' / (4 c(R)^2)
    std::vector<std::pair<std::int64_t, int>> cutoffs;  // (p, N_p), p ascending
};

// Chooses each N_p as the unique integer with
// sqrt(1.4/p)^(N_p+1) <= T < sqrt(1.4/p)^(N_p),
// T = (1-sqrt(0.7)) eps'/(4 c(R)^2), eps' = epsilon/(3 (2 c(R)^2)^y).
truncation_plan make_truncation_plan(double epsilon, double big_r, double y);

struct local_factor_value {
    std::int64_t prime = 0;
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
};

// Series form sum_{r=0}^{n_cut} H_r(ix)^2 p^{-2 sigma r} with the dropped
// tail bounded by c(|x|)^2 (1.4 p^{-2 sigma})^{n_cut+1} / (1 - 1.4 p^{-2 sigma}).
// The series loses roughly exp(2|x| atan(1/sqrt(p^{2 sigma}-1))) digits to
// cancellation, so for large |x| use torus_local_factor instead.
local_factor_value m_local_factor(std::int64_t p, double sigma, double x, int n_cut);

// Trapezoid quadrature of (1/2pi) int_0^{2pi} exp(-ix log(1-2 a cos t + a^2)) dt,
// a = p^{-sigma}; the integrand is periodic analytic so the rule converges
// exponentially once the oscillation is resolved.  quad_points = 0 picks the
// point count from the total phase swing.
cplx torus_local_factor(std::int64_t p, double sigma, double x, int quad_points = 0);

// Real-character local factor, closed form
// 1/(p+1) + p/(2(p+1)) ((1-p^-sigma)^-ix + (1+p^-sigma)^-ix).
cplx q_local_factor(std::int64_t p, double sigma, double x);

// Equivalent phase-times-cosine form
// 1/(p+1) + p/(p+1) exp(-ix log(1-p^-2sigma)/2) cos((x/2) log((1-p^-sigma)/(1+p^-sigma))).
cplx q_local_factor_cos_form(std::int64_t p, double sigma, double x);

// Series form 1 + (p/(p+1)) sum_{r=1}^{r_max} lambda(p^{2r}) p^{-2 r sigma}
// for either coefficient mode (H_{2r}(ix) or G_{2r}(-ix log p)).
cplx q_local_factor_series(std::int64_t p, double sigma, double x, int r_max,
                           lambda_mode mode = lambda_mode::log_l);

// Product of m_local_factor over the plan's primes, ascending.
cplx m_tilde(double sigma, double x, const truncation_plan& plan);

// Product of torus_local_factor over p <= y; usable at large |x| where the
// series route cancels catastrophically.
cplx m_tilde_quad(double sigma, double x, double y);

struct q_tilde_result {
    cplx value{0.0, 0.0};
    std::int64_t p_star = 0;   // direct-product cutoff; the tail beyond it is
                               // folded in through prime-zeta sums, not dropped
    double tail_bound = 0.0;   // bound on the neglected part of the tail logs
};

// Full Euler product over all primes: closed-form factors for p <= p_star and
// log-tail corrections for p > p_star expanded to third order in (factor - 1)
// with prime-zeta tail sums; remainder bounded and kept below tail_tol.
q_tilde_result q_tilde_full(double sigma, double x, double tail_tol,
                            lambda_mode mode = lambda_mode::log_l);
cplx q_tilde(double sigma, double x, double tail_tol);

struct sigma_window {
    double p_low = 0.0;    // (3|x|/pi)^(1/sigma)
    double p_high = 0.0;   // 2^(1/sigma) p_low
    std::int64_t count = 0;  // primes p > 16 with p_low < p <= p_high
};
sigma_window s_sigma_window(double sigma, double x);

// Prime zeta P(s) = sum_p p^-s for s > 1, via sum_k mu(k)/k log zeta(k s),
// and its tail over primes p > p0.
double prime_zeta(double s);
double prime_zeta_tail(double s, std::int64_t p0);

// Product of complex factors in the given (ascending-prime) order; switches
// to compensated summation of principal logs when the factor count exceeds
// 10^4 to bound rounding drift.
cplx euler_product(const std::vector<cplx>& factors);

} // namespace ldist
