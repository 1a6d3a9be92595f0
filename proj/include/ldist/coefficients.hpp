#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ldist/common.hpp"

namespace ldist {

using rational = boost::multiprecision::cpp_rational;

// Polynomial with exact rational coefficients; coeffs[k] multiplies x^k.
struct rational_poly {
    std::vector<rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    rational coeff(int k) const;
    cplx eval(cplx z) const;
    double eval(double x) const;
};

// Sum over ordered compositions r = r_1 + ... + r_k of 1/(r_1 ... r_k),
// computed exactly.  delta_weight(0, 0) = 1, delta_weight(0, r) = 0 for r > 0.
rational delta_weight(int k, int r);

// h_poly(r): coefficient of x^k is delta_weight(k, r) / k!.  These satisfy
// (1 - t)^(-x) = sum_{r>=0} h_poly(r)(x) t^r and collapse to the rising
// factorial x (x+1) ... (x+r-1) / r!.
rational_poly h_poly(int r);

// g_poly(r): coefficient of x^k is binomial(r-1, k-1) / k! for 1 <= k <= r.
// These satisfy exp(x t / (1 - t)) = 1 + sum_{r>=1} g_poly(r)(x) t^r.
rational_poly g_poly(int r);

// Values H_r(z) for r = 0..r_max via H_{r+1} = H_r (z + r) / (r + 1).
std::vector<cplx> h_eval_all(int r_max, cplx z);

// Values G_r(z) for r = 0..r_max via
// G_{r+1} = ((2r + z) G_r - (r - 1) G_{r-1}) / (r + 1).
std::vector<cplx> g_eval_all(int r_max, cplx z);

cplx h_eval(int r, cplx z);
cplx g_eval(int r, cplx z);

// log of an upper bound for G_r(v), v >= 0: the minimum over t in (0,1) of
// v t/(1-t) - r log t, using that all series coefficients are nonnegative.
// Also bounds |H_r(i x)| <= H_r(|x|) <= G_r(|x|) for v = |x|.
double log_g_bound(int r, double v);

enum class lambda_mode { log_l, log_deriv };

// Coefficients of the Euler factor expansion of exp(i x V) in powers of
// chi(p) p^{-sigma}: H_r(i x) when V sums -log(1 - chi(p) p^{-sigma}) and
// G_r(-i x log p) when V sums the corresponding logarithmic derivatives.
cplx lambda_prime_power(lambda_mode mode, double x, double p, int r);

} // namespace ldist
