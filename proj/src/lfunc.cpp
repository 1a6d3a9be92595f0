#include "ldist/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ldist/characters.hpp"
#include "ldist/primes.hpp"
#include "ldist/summation.hpp"

namespace ldist {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw validation_error(what);
}

// B_{2j}/(2j)! for the Euler-Maclaurin correction terms.
constexpr double kBernFact[] = {
    8.3333333333333333e-02,   // j=1
    -1.3888888888888889e-03,  // j=2
    3.3068783068783069e-05,   // j=3
    -8.2671957671957672e-07,  // j=4
    2.0876756987868099e-08,   // j=5
    -5.2841901386874932e-10,  // j=6
    1.3382536530684679e-11,   // j=7
    -3.3896802963225829e-13,  // j=8
    8.5860620562778446e-15,   // j=9
    -2.1748686985580619e-16,  // j=10
};

}  // namespace

double hurwitz_zeta(double s, double a) {
    require(s > 0.5, "hurwitz_zeta requires s > 1/2");
    require(std::abs(s - 1.0) > 1e-12, "hurwitz_zeta has a pole at s = 1");
    require(a > 0.0 && a <= 1.0, "hurwitz_zeta requires 0 < a <= 1");

    constexpr int m = 40;
    kahan_sum acc;
    for (int n = 0; n < m; ++n) acc.add(std::pow(n + a, -s));
    const double ma = m + a;
    acc.add(std::pow(ma, 1.0 - s) / (s - 1.0));
    acc.add(0.5 * std::pow(ma, -s));
    // sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * (m+a)^(-s-2j+1)
    double rising = s;
    double power = std::pow(ma, -s - 1.0);
    const double inv2 = 1.0 / (ma * ma);
    for (int j = 1; j <= 10; ++j) {
        acc.add(kBernFact[j - 1] * rising * power);
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        power *= inv2;
    }
    return acc.value();
}

double digamma(double x) {
    require(x > 0.0, "digamma requires x > 0");
    double shift = 0.0;
    while (x < 8.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) = ln x - 1/(2x) - sum_j B_2j/(2j) x^-2j
    static const double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double s = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (double bj : b) {
        s -= bj * p;
        p *= inv2;
    }
    return shift + s;
}

double dirichlet_l_real(double sigma, std::int64_t d) {
    require(sigma > 0.5, "dirichlet_l_real requires sigma > 1/2");
    require(is_fundamental_discriminant(d),
            "dirichlet_l_real requires a fundamental discriminant");
    const std::int64_t q = std::llabs(d);
    kahan_sum acc;
    if (std::abs(sigma - 1.0) < 1e-12) {
        for (std::int64_t a = 1; a < q; ++a) {
            const int c = kronecker(d, a);
            if (c != 0) acc.add(-c * digamma(static_cast<double>(a) / q));
        }
        return acc.value() / static_cast<double>(q);
    }
    for (std::int64_t a = 1; a < q; ++a) {
        const int c = kronecker(d, a);
        if (c != 0) acc.add(c * hurwitz_zeta(sigma, static_cast<double>(a) / q));
    }
    return std::pow(static_cast<double>(q), -sigma) * acc.value();
}

double hurwitz_log(double sigma, std::int64_t d) {
    const double l = dirichlet_l_real(sigma, d);
    if (!(l > 0.0)) {
        throw numeric_error("hurwitz_log: L value is not positive");
    }
    return std::log(l);
}

double l_log_deriv(double sigma, std::int64_t d) {
    const double h = 1e-5;
    require(sigma - h > 0.5, "l_log_deriv requires sigma > 1/2 + 1e-5");
    auto diff = [&](double step) {
        return (hurwitz_log(sigma + step, d) - hurwitz_log(sigma - step, d)) /
               (2.0 * step);
    };
    const double d1 = diff(h);
    const double d2 = diff(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

euler_log_value euler_log(double sigma, const std::function<cplx(std::int64_t)>& chi,
                          double y, std::int64_t exclude_q) {
    require(sigma > 0.5, "euler_log requires sigma > 1/2");
    require(y >= 2.0, "euler_log requires y >= 2");
    euler_log_value out;
    out.y = y;
    out.excluded_q = exclude_q;
    kahan_sum_cplx acc;
    for (std::int64_t p : sieve_primes(static_cast<std::int64_t>(std::floor(y)))) {
        if (p == exclude_q) continue;
        const double a = std::pow(static_cast<double>(p), -sigma);
        acc.add(-std::log(cplx(1.0, 0.0) - chi(p) * a));
    }
    out.value = acc.value();
    return out;
}

psi_series_tables build_psi_series_tables(double sigma, double x, lambda_mode mode,
                                          double x_smooth, std::int64_t cap) {
    require(sigma > 0.5, "psi series tables require sigma > 1/2");
    require(x_smooth >= 1.0, "psi series tables require x_smooth >= 1");
    require(cap >= 16 && cap <= 2000000000, "psi series cap out of range");

    psi_series_tables t;
    t.sigma = sigma;
    t.x = x;
    t.x_smooth = x_smooth;
    t.mode = mode;
    t.cap = cap;

    auto spf = smallest_prime_factor(static_cast<std::int32_t>(cap));
    int max_e = 1;
    while ((1LL << (max_e + 1)) <= cap) ++max_e;
    const auto h_table = h_eval_all(max_e + 1, cplx(0.0, x));

    std::vector<cplx> lam(static_cast<std::size_t>(cap) + 1);
    lam[1] = cplx(1.0, 0.0);
    for (std::int64_t n = 2; n <= cap; ++n) {
        const std::int32_t p = spf[static_cast<std::size_t>(n)];
        std::int64_t m = n / p;
        int e = 1;
        while (m > 1 && spf[static_cast<std::size_t>(m)] == p) {
            m /= p;
            ++e;
        }
        cplx coef;
        if (mode == lambda_mode::log_l) {
            coef = h_table[static_cast<std::size_t>(e)];
        } else {
            const double lp = std::log(static_cast<double>(p));
            coef = (e == 1) ? cplx(0.0, -x * lp)
                            : g_eval(e, cplx(0.0, -x * lp));
        }
        lam[static_cast<std::size_t>(n)] = lam[static_cast<std::size_t>(m)] * coef;
    }

    t.weights.resize(static_cast<std::size_t>(cap) + 1);
    t.weights[0] = cplx(0.0, 0.0);
    for (std::int64_t n = 1; n <= cap; ++n) {
        const double nn = static_cast<double>(n);
        const double w = std::exp(-sigma * std::log(nn) - nn / x_smooth);
        t.weights[static_cast<std::size_t>(n)] = lam[static_cast<std::size_t>(n)] * w;
    }
    return t;
}

void chi_d_sieve(std::int64_t d, std::int64_t cap,
                 const std::vector<std::int32_t>& spf, std::vector<std::int8_t>& out) {
    require(cap >= 1, "chi_d_sieve requires cap >= 1");
    require(static_cast<std::int64_t>(spf.size()) > cap, "spf table too small for cap");
    out.assign(static_cast<std::size_t>(cap) + 1, 0);
    out[1] = 1;
    for (std::int64_t n = 2; n <= cap; ++n) {
        const std::int32_t p = spf[static_cast<std::size_t>(n)];
        if (n == p) {
            out[static_cast<std::size_t>(n)] =
                static_cast<std::int8_t>(kronecker(d, n));
        } else {
            out[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(
                out[static_cast<std::size_t>(n / p)] * out[static_cast<std::size_t>(p)]);
        }
    }
}

cplx smoothed_psi(double sigma, double x, lambda_mode mode, std::int64_t d,
                  double x_smooth, std::int64_t cap) {
    if (cap <= 0) cap = static_cast<std::int64_t>(std::ceil(10.0 * x_smooth));
    const auto tables = build_psi_series_tables(sigma, x, mode, x_smooth, cap);
    auto spf = smallest_prime_factor(static_cast<std::int32_t>(cap));
    std::vector<std::int8_t> chi;
    chi_d_sieve(d, cap, spf, chi);
    kahan_sum_cplx acc;
    for (std::int64_t n = 1; n <= cap; ++n) {
        const int c = chi[static_cast<std::size_t>(n)];
        if (c == 1) {
            acc.add(tables.weights[static_cast<std::size_t>(n)]);
        } else if (c == -1) {
            acc.add(-tables.weights[static_cast<std::size_t>(n)]);
        }
    }
    return acc.value();
}

double l_series_truncated(double s, std::int64_t d, std::int64_t t) {
    require(t >= 1, "l_series_truncated requires t >= 1");
    kahan_sum acc;
    for (std::int64_t n = 1; n <= t; ++n) {
        const int c = kronecker(d, n);
        if (c != 0) acc.add(c * std::pow(static_cast<double>(n), -s));
    }
    return acc.value();
}

dagger_tables build_dagger_tables(double sigma, double grid_step, std::int64_t t1) {
    require(sigma > 0.5, "dagger tables require sigma > 1/2");
    require(grid_step > 0.0, "dagger tables require grid_step > 0");
    require(t1 >= 64 && t1 <= (1 << 22), "dagger tables require 64 <= t1 <= 4194304");

    dagger_tables t;
    t.sigma = sigma;
    t.grid_step = grid_step;
    t.t1 = t1;
    for (int k = 0;; ++k) {
        const double s = sigma + k * grid_step;
        if (s > 2.0 + 1e-9) break;
        t.grid.push_back(s);
    }
    if (t.grid.empty()) t.grid.push_back(sigma);
    t.spf = smallest_prime_factor(static_cast<std::int32_t>(t1));
    t.powtab.resize(t.grid.size() * static_cast<std::size_t>(t1));
    for (std::size_t g = 0; g < t.grid.size(); ++g) {
        for (std::int64_t n = 1; n <= t1; ++n) {
            t.powtab[g * static_cast<std::size_t>(t1) + static_cast<std::size_t>(n - 1)] =
                std::pow(static_cast<double>(n), -t.grid[g]);
        }
    }
    return t;
}

dagger_outcome dagger_filter(std::int64_t d, const dagger_tables& tables) {
    const std::int64_t q = std::llabs(d);
    require(q >= 3, "dagger_filter requires |d| >= 3");
    const std::int64_t t1 = std::min(q, tables.t1);

    // Stage 1: sieved chi up to t1, partial-sum bound from either the exact
    // period maximum (q <= t1) or a Polya-Vinogradov-size envelope.
    static thread_local std::vector<std::int8_t> chi;
    chi.assign(static_cast<std::size_t>(t1) + 1, 0);
    chi[1] = 1;
    for (std::int64_t n = 2; n <= t1; ++n) {
        const std::int32_t p = tables.spf[static_cast<std::size_t>(n)];
        chi[static_cast<std::size_t>(n)] =
            (n == p) ? static_cast<std::int8_t>(kronecker(d, n))
                     : static_cast<std::int8_t>(chi[static_cast<std::size_t>(n / p)] *
                                                chi[static_cast<std::size_t>(p)]);
    }
    double mhat;
    if (q <= t1) {
        std::int64_t run = 0, peak = 0;
        for (std::int64_t n = 1; n <= q; ++n) {
            run += chi[static_cast<std::size_t>(n)];
            peak = std::max<std::int64_t>(peak, std::llabs(run));
        }
        mhat = static_cast<double>(peak);
    } else {
        const double qq = static_cast<double>(q);
        mhat = std::sqrt(qq) * (std::log(qq) / (2.0 * pi) + 1.5);
    }

    dagger_outcome out;
    out.accepted = true;
    out.certified = true;
    out.min_value = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> borderline;
    std::vector<double> vals(tables.grid.size(), 0.0);

    for (std::size_t g = 0; g < tables.grid.size(); ++g) {
        const double* pt = tables.powtab.data() + g * static_cast<std::size_t>(tables.t1);
        kahan_sum acc;
        for (std::int64_t n = 1; n <= t1; ++n) {
            const int c = chi[static_cast<std::size_t>(n)];
            if (c == 1) acc.add(pt[n - 1]);
            else if (c == -1) acc.add(-pt[n - 1]);
        }
        const double val = acc.value();
        vals[g] = val;
        const double eb = 2.0 * mhat * pt[t1 - 1];
        if (val > eb) continue;
        if (val < -eb) {
            out.accepted = false;
            out.min_value = val;
            out.worst_sigma = tables.grid[g];
            return out;
        }
        borderline.push_back(g);
    }

    if (!borderline.empty()) {
        // Escalate: one full period with the exact prefix-sum maximum, then
        // continue the same sum out to 4q.
        std::vector<std::int8_t> period(static_cast<std::size_t>(q) + 1, 0);
        if (q <= t1) {
            std::copy(chi.begin(), chi.begin() + q + 1, period.begin());
        } else {
            for (std::int64_t n = 1; n <= q; ++n) {
                period[static_cast<std::size_t>(n)] =
                    static_cast<std::int8_t>(kronecker(d, n));
            }
        }
        std::int64_t run = 0, peak = 0;
        for (std::int64_t n = 1; n <= q; ++n) {
            run += period[static_cast<std::size_t>(n)];
            peak = std::max<std::int64_t>(peak, std::llabs(run));
        }
        const double m_exact = static_cast<double>(peak);

        for (std::size_t g : borderline) {
            const double s = tables.grid[g];
            kahan_sum acc;
            for (std::int64_t n = 1; n <= q; ++n) {
                const int c = period[static_cast<std::size_t>(n)];
                if (c != 0) acc.add(c * std::pow(static_cast<double>(n), -s));
            }
            double val = acc.value();
            double eb = 2.0 * m_exact * std::pow(static_cast<double>(q), -s);
            if (val > eb) { vals[g] = val; continue; }
            if (val < -eb) {
                out.accepted = false;
                out.min_value = val;
                out.worst_sigma = s;
                return out;
            }
            for (std::int64_t n = q + 1; n <= 4 * q; ++n) {
                const int c = period[static_cast<std::size_t>(n % q)];
                if (c != 0) acc.add(c * std::pow(static_cast<double>(n), -s));
            }
            val = acc.value();
            vals[g] = val;
            eb = 2.0 * m_exact * std::pow(4.0 * static_cast<double>(q), -s);
            if (val > eb) continue;
            out.accepted = false;
            out.certified = false;
            out.min_value = val;
            out.worst_sigma = s;
            return out;
        }
    }

    for (std::size_t g = 0; g < tables.grid.size(); ++g) {
        if (vals[g] < out.min_value) {
            out.min_value = vals[g];
            out.worst_sigma = tables.grid[g];
        }
    }
    return out;
}

bool dagger_filter_simple(double sigma, std::int64_t d) {
    const auto tables = build_dagger_tables(sigma);
    return dagger_filter(d, tables).accepted;
}

} // namespace ldist
