#include "ldist/coefficients.hpp"

#include <cmath>

namespace ldist {

rational rational_poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size()))
        return rational(0);
    return coeffs[static_cast<std::size_t>(k)];
}

cplx rational_poly::eval(cplx z) const {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + cplx(it->convert_to<double>(), 0.0);
    return acc;
}

double rational_poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

rational delta_weight(int k, int r) {
    if (k < 0 || r < 0)
        throw validation_error("delta_weight: negative argument");
    if (k == 0)
        return rational(r == 0 ? 1 : 0);
    if (k > r)
        return rational(0);
    // d[kk][rr] with d[kk][rr] = sum_{j=1}^{rr-kk+1} (1/j) d[kk-1][rr-j].
    std::vector<std::vector<rational>> d(static_cast<std::size_t>(k) + 1,
                                         std::vector<rational>(static_cast<std::size_t>(r) + 1,
                                                               rational(0)));
    d[0][0] = 1;
    for (int kk = 1; kk <= k; ++kk)
        for (int rr = kk; rr <= r; ++rr) {
            rational acc(0);
            for (int j = 1; j <= rr - kk + 1; ++j)
                acc += d[static_cast<std::size_t>(kk - 1)][static_cast<std::size_t>(rr - j)] /
                       rational(j);
            d[static_cast<std::size_t>(kk)][static_cast<std::size_t>(rr)] = acc;
        }
    return d[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
}

rational_poly h_poly(int r) {
    if (r < 0)
        throw validation_error("h_poly: negative order");
    rational_poly p;
    p.coeffs.assign(static_cast<std::size_t>(r) + 1, rational(0));
    if (r == 0) {
        p.coeffs[0] = 1;
        return p;
    }
    rational kfact(1);
    for (int k = 1; k <= r; ++k) {
        kfact *= k;
        p.coeffs[static_cast<std::size_t>(k)] = delta_weight(k, r) / kfact;
    }
    return p;
}

rational_poly g_poly(int r) {
    if (r < 0)
        throw validation_error("g_poly: negative order");
    rational_poly p;
    p.coeffs.assign(static_cast<std::size_t>(r) + 1, rational(0));
    if (r == 0) {
        p.coeffs[0] = 1;
        return p;
    }
    boost::multiprecision::cpp_int binom(1); // binomial(r-1, k-1), starts at k = 1
    boost::multiprecision::cpp_int kfact(1);
    for (int k = 1; k <= r; ++k) {
        kfact *= k;
        p.coeffs[static_cast<std::size_t>(k)] = rational(binom, kfact);
        binom = binom * (r - k) / k;
    }
    return p;
}

std::vector<cplx> h_eval_all(int r_max, cplx z) {
    if (r_max < 0)
        throw validation_error("h_eval_all: negative order");
    std::vector<cplx> h(static_cast<std::size_t>(r_max) + 1);
    h[0] = 1.0;
    for (int r = 0; r < r_max; ++r)
        h[static_cast<std::size_t>(r + 1)] =
            h[static_cast<std::size_t>(r)] * (z + static_cast<double>(r)) /
            static_cast<double>(r + 1);
    return h;
}

std::vector<cplx> g_eval_all(int r_max, cplx z) {
    if (r_max < 0)
        throw validation_error("g_eval_all: negative order");
    std::vector<cplx> g(static_cast<std::size_t>(r_max) + 1);
    g[0] = 1.0;
    if (r_max >= 1)
        g[1] = z;
    for (int r = 1; r < r_max; ++r)
        g[static_cast<std::size_t>(r + 1)] =
            ((2.0 * r + z) * g[static_cast<std::size_t>(r)] -
             static_cast<double>(r - 1) * g[static_cast<std::size_t>(r - 1)]) /
            static_cast<double>(r + 1);
    return g;
}

cplx h_eval(int r, cplx z) {
    return h_eval_all(r, z).back();
}

cplx g_eval(int r, cplx z) {
    return g_eval_all(r, z).back();
}

double log_g_bound(int r, double v) {
    if (r < 0 || v < 0.0)
        throw validation_error("log_g_bound: negative argument");
    if (r == 0)
        return 0.0;
    if (v == 0.0)
        return 0.0;
    // Minimize v t/(1-t) - r log t; stationarity gives
    // r t^2 - (2r + v) t + r = 0 with the relevant root in (0,1).
    const double b = 2.0 * r + v;
    double t = (b - std::sqrt(b * b - 4.0 * static_cast<double>(r) * r)) / (2.0 * r);
    t = std::min(std::max(t, 1e-12), 1.0 - 1e-12);
    return v * t / (1.0 - t) - r * std::log(t);
}

cplx lambda_prime_power(lambda_mode mode, double x, double p, int r) {
    if (mode == lambda_mode::log_l)
        return h_eval(r, cplx(0.0, x));
    return g_eval(r, cplx(0.0, -x * std::log(p)));
}

} // namespace ldist
