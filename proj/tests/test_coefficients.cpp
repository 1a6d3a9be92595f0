#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "ldist/coefficients.hpp"

namespace {

using ldist::cplx;
using ldist::rational;
using poly = std::vector<rational>;

// Sum over ordered compositions of r into k positive parts of 1/(product),
// by direct enumeration of the first part.
rational delta_by_enumeration(int k, int r) {
    if (k == 0) return r == 0 ? rational(1) : rational(0);
    rational total = 0;
    for (int j = 1; j + (k - 1) <= r; ++j) {
        total += delta_by_enumeration(k - 1, r - j) / j;
    }
    return total;
}

poly plus(poly a, const poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

poly times_x_over(const poly& a, int den) {
    poly out(a.size() + 1, rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i] / den;
    return out;
}

rational coeff_of(const poly& a, int k) {
    return k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)]
                                          : rational(0);
}

// Taylor coefficients in t of exp(A(t)) obtained from the differential
// equation E' = A' E, with A(t) = x sum t^k/k (giving (1-t)^-x) or
// A(t) = x sum t^k (giving exp(x t/(1-t))).  Polynomials in x throughout.
std::vector<poly> exp_series_h(int r_max) {
    std::vector<poly> e{poly{rational(1)}};
    poly partial = e[0];
    for (int r = 1; r <= r_max; ++r) {
        e.push_back(times_x_over(partial, r));
        partial = plus(partial, e.back());
    }
    return e;
}

std::vector<poly> exp_series_g(int r_max) {
    std::vector<poly> e{poly{rational(1)}};
    for (int r = 1; r <= r_max; ++r) {
        poly s;
        for (int k = 1; k <= r; ++k) {
            poly term = e[static_cast<std::size_t>(r - k)];
            for (auto& c : term) c *= k;
            s = plus(std::move(s), term);
        }
        e.push_back(times_x_over(s, r));
    }
    return e;
}

}  // namespace

TEST_SUITE("coefficients") {

TEST_CASE("delta weights match composition enumeration") {
    for (int r = 0; r <= 10; ++r) {
        for (int k = 0; k <= r; ++k) {
            CHECK(ldist::delta_weight(k, r) == delta_by_enumeration(k, r));
        }
    }
    CHECK(ldist::delta_weight(0, 0) == rational(1));
    CHECK(ldist::delta_weight(0, 3) == rational(0));
    CHECK(ldist::delta_weight(1, 4) == rational(1, 4));
}

TEST_CASE("h polynomials match the exponential series of -x log(1-t)") {
    const auto series = exp_series_h(12);
    for (int r = 0; r <= 12; ++r) {
        const auto p = ldist::h_poly(r);
        CHECK(p.degree() == r);
        for (int k = 0; k <= r; ++k) {
            CHECK(p.coeff(k) == coeff_of(series[static_cast<std::size_t>(r)], k));
        }
    }
}

TEST_CASE("g polynomials match the exponential series of x t/(1-t)") {
    const auto series = exp_series_g(12);
    for (int r = 0; r <= 12; ++r) {
        const auto p = ldist::g_poly(r);
        for (int k = 0; k <= r; ++k) {
            CHECK(p.coeff(k) == coeff_of(series[static_cast<std::size_t>(r)], k));
        }
    }
}

TEST_CASE("h polynomial coefficients are the scaled delta weights") {
    for (int r = 0; r <= 10; ++r) {
        const auto p = ldist::h_poly(r);
        rational kfact = 1;
        for (int k = 0; k <= r; ++k) {
            if (k > 0) kfact *= k;
            CHECK(p.coeff(k) == ldist::delta_weight(k, r) / kfact);
        }
    }
}

TEST_CASE("low-order closed forms") {
    const cplx i(0.0, 1.0);
    CHECK(std::abs(ldist::h_eval(0, i) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(ldist::h_eval(1, i) - i) < 1e-15);
    CHECK(std::abs(ldist::h_eval(2, i) - cplx(-0.5, 0.5)) < 1e-15);
    CHECK(std::abs(ldist::g_eval(2, -i) - cplx(-0.5, -1.0)) < 1e-15);
    for (const cplx z : {cplx(0.3, -1.2), cplx(-2.0, 0.5), cplx(0.0, 2.0)}) {
        CHECK(std::abs(ldist::g_eval(1, z) - z) < 1e-15);
        CHECK(std::abs(ldist::g_eval(2, z) - (z + 0.5 * z * z)) < 1e-14);
    }
}

TEST_CASE("recurrence evaluation agrees with exact polynomials") {
    const cplx z(0.7, 0.3);
    const auto hs = ldist::h_eval_all(15, z);
    const auto gs = ldist::g_eval_all(15, z);
    REQUIRE(hs.size() == 16);
    REQUIRE(gs.size() == 16);
    for (int r = 0; r <= 15; ++r) {
        const cplx ph = ldist::h_poly(r).eval(z);
        const cplx pg = ldist::g_poly(r).eval(z);
        CHECK(std::abs(hs[static_cast<std::size_t>(r)] - ph) <=
              1e-12 * (1.0 + std::abs(ph)));
        CHECK(std::abs(gs[static_cast<std::size_t>(r)] - pg) <=
              1e-12 * (1.0 + std::abs(pg)));
        CHECK(std::abs(ldist::h_eval(r, z) - hs[static_cast<std::size_t>(r)]) <=
              1e-15 * (1.0 + std::abs(ph)));
        CHECK(std::abs(ldist::g_eval(r, z) - gs[static_cast<std::size_t>(r)]) <=
              1e-15 * (1.0 + std::abs(pg)));
    }
}

TEST_CASE("coefficient bound chain holds with slack 1e-9") {
    const double slope = 1.0 / (std::sqrt(1.4) - 1.0);
    for (int r = 0; r <= 40; ++r) {
        for (double x = 0.0; x <= 5.0 + 1e-12; x += 0.25) {
            const double habs = std::abs(ldist::h_eval(r, cplx(0.0, x)));
            const double g = ldist::g_eval(r, cplx(x, 0.0)).real();
            const double logb = ldist::log_g_bound(r, x);
            const double envelope = std::exp(0.5 * r * std::log(1.4) + x * slope);
            CHECK(habs <= g + 1e-9);
            CHECK(g <= std::exp(logb) * (1.0 + 1e-12) + 1e-9);
            CHECK(std::exp(logb) <= envelope + 1e-9);
        }
    }
}

TEST_CASE("prime-power coefficients select the requested mode") {
    using ldist::lambda_mode;
    const double x = 0.8;
    for (std::int64_t p : {2LL, 5LL}) {
        for (int r = 0; r <= 4; ++r) {
            const cplx want_l = ldist::h_eval(r, cplx(0.0, x));
            const cplx want_d =
                ldist::g_eval(r, cplx(0.0, -x * std::log(static_cast<double>(p))));
            CHECK(std::abs(ldist::lambda_prime_power(lambda_mode::log_l, x,
                                                     static_cast<double>(p), r) -
                           want_l) < 1e-14);
            CHECK(std::abs(ldist::lambda_prime_power(lambda_mode::log_deriv, x,
                                                     static_cast<double>(p), r) -
                           want_d) < 1e-14);
        }
    }
}

} // TEST_SUITE
