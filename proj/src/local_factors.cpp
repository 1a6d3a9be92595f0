#include "ldist/local_factors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ldist/primes.hpp"
#include "ldist/summation.hpp"

namespace ldist {

namespace {

constexpr double kSqrt14Minus1 = 0.18321595661992318;  // sqrt(1.4) - 1
constexpr double kOneMinusSqrt07 = 0.16333997346592444;  // 1 - sqrt(0.7)

double log_c_of(double r) { return std::abs(r) / kSqrt14Minus1; }

void require(bool ok, const std::string& what) {
    if (!ok) throw validation_error(what);
}

// Cached ascending primes (with their logs) up to each requested bound.
struct prime_list {
    std::vector<std::int64_t> p;
    std::vector<double> logp;
};

std::shared_ptr<const prime_list> primes_up_to(std::int64_t bound) {
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<const prime_list>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;
    auto lst = std::make_shared<prime_list>();
    lst->p = sieve_primes(bound);
    lst->logp.reserve(lst->p.size());
    for (auto q : lst->p) lst->logp.push_back(std::log(static_cast<double>(q)));
    cache.emplace(bound, lst);
    return lst;
}

}  // namespace

truncation_plan make_truncation_plan(double epsilon, double big_r, double y) {
    require(epsilon > 0.0 && epsilon < 1.0, "truncation plan requires 0 < epsilon < 1");
    require(big_r > 0.0, "truncation plan requires big_r > 0");
    require(y >= 2.0, "truncation plan requires y >= 2");

    truncation_plan plan;
    plan.epsilon = epsilon;
    plan.big_r = big_r;
    plan.y = y;
    plan.log_cr = log_c_of(big_r);
    plan.cr = std::exp(plan.log_cr);

    // eps' = epsilon / (3 (2 c(R)^2)^y), T = (1 - sqrt(0.7)) eps' / (4 c(R)^2)
    const double log_eps_prime =
        std::log(epsilon) - std::log(3.0) - y * (std::log(2.0) + 2.0 * plan.log_cr);
    plan.log_t = std::log(kOneMinusSqrt07) + log_eps_prime - std::log(4.0) - 2.0 * plan.log_cr;
    if (plan.log_t >= 0.0) {
        std::ostringstream os;
        os << "truncation plan infeasible: threshold T >= 1 for epsilon=" << epsilon
           << ", big_r=" << big_r << ", y=" << y;
        throw validation_error(os.str());
    }

    plan.log_c1 = 2.0 * (std::log(576.0) + 8.0 * plan.log_cr
                         - 2.0 * std::log(kOneMinusSqrt07) - 2.0 * std::log(epsilon));
    plan.c1 = std::exp(plan.log_c1);

    auto primes = sieve_primes(static_cast<std::int64_t>(std::floor(y)));
    require(!primes.empty(), "truncation plan found no primes <= y");
    for (auto p : primes) {
        // N_p is the unique integer with beta^(N_p+1) <= T < beta^N_p,
        // beta = sqrt(1.4/p) < 1, i.e. N_p = ceil(log T/log beta) - 1.
        const double log_beta = 0.5 * (std::log(1.4) - std::log(static_cast<double>(p)));
        const double ratio = plan.log_t / log_beta;  // both negative, ratio > 0
        int np = static_cast<int>(std::ceil(ratio)) - 1;
        if (std::abs(ratio - std::round(ratio)) < 1e-12)
            np = static_cast<int>(std::round(ratio)) - 1;
        if (np < 1) {
            std::ostringstream os;
            os << "truncation plan gives N_" << p << " < 1; decrease epsilon or big_r";
            throw validation_error(os.str());
        }
        plan.cutoffs.emplace_back(p, np);
    }
    return plan;
}

local_factor_value m_local_factor(std::int64_t p, double sigma, double x, int n_cut) {
    require(p >= 2, "m_local_factor requires p >= 2");
    require(sigma > 0.5, "m_local_factor requires sigma > 1/2");
    require(n_cut >= 0, "m_local_factor requires n_cut >= 0");

    // sum_{r<=n_cut} (H_r(ix) p^{-sigma r})^2 with the scaled coefficient
    // u_r = H_r(ix) p^{-sigma r} advanced as u_{r+1} = u_r (ix + r) a/(r+1);
    // |u_r| <= c(|x|) (1.4/p^{2 sigma})^{r/2} so u never overflows.
    const double a = std::exp(-sigma * std::log(static_cast<double>(p)));
    const cplx z(0.0, x);
    cplx u(1.0, 0.0);
    kahan_sum_cplx acc;
    acc.add(u * u);
    for (int r = 0; r < n_cut; ++r) {
        u *= (z + static_cast<double>(r)) * (a / (r + 1.0));
        const cplx term = u * u;
        if (std::abs(term.real()) < 1e-305 && std::abs(term.imag()) < 1e-305 &&
            r > std::abs(x)) {
            break;
        }
        acc.add(term);
    }

    const double gamma = 1.4 * a * a;
    if (gamma >= 1.0) {
        throw numeric_error("m_local_factor tail bound needs p^{2 sigma} > 1.4; "
                            "raise n_cut policy instead");
    }
    const double log_tail = 2.0 * log_c_of(x) + (n_cut + 1) * std::log(gamma)
                            - std::log1p(-gamma);
    local_factor_value out;
    out.prime = p;
    out.value = acc.value();
    out.tail_bound = std::exp(log_tail);
    return out;
}

cplx torus_local_factor(std::int64_t p, double sigma, double x, int quad_points) {
    require(p >= 2, "torus_local_factor requires p >= 2");
    require(sigma > 0.5, "torus_local_factor requires sigma > 1/2");
    const double a = std::exp(-sigma * std::log(static_cast<double>(p)));

    int n = quad_points;
    if (n <= 0) {
        // Total phase swing of x log((1+a)^2/(1-a)^2) radians over one period.
        const double swing = std::abs(x) * 2.0 * std::log((1.0 + a) / (1.0 - a));
        n = 64 + 8 * static_cast<int>(std::ceil(swing / (2.0 * pi)));
    }
    if (n < 64) n = 64;
    n += n & 1;

    // Integrand exp(-ix log(1-2a cos t+a^2)) is even about t = pi, so fold.
    kahan_sum_cplx acc;
    auto f = [&](double theta) {
        const double g = 1.0 - 2.0 * a * std::cos(theta) + a * a;
        const double phase = -x * std::log(g);
        return cplx(std::cos(phase), std::sin(phase));
    };
    acc.add(f(0.0));
    acc.add(f(pi));
    kahan_sum_cplx inner;
    for (int j = 1; j < n / 2; ++j) inner.add(f(2.0 * pi * j / n));
    acc.add(2.0 * inner.value());
    return acc.value() / static_cast<double>(n);
}

cplx q_local_factor(std::int64_t p, double sigma, double x) {
    require(p >= 2, "q_local_factor requires p >= 2");
    require(sigma > 0.5, "q_local_factor requires sigma > 1/2");
    const double w = std::exp(-sigma * std::log(static_cast<double>(p)));
    const double lm = std::log1p(-w);
    const double lp = std::log1p(w);
    const cplx tm(std::cos(-x * lm), std::sin(-x * lm));
    const cplx tp(std::cos(-x * lp), std::sin(-x * lp));
    const double pd = static_cast<double>(p);
    return 1.0 / (pd + 1.0) + (pd / (2.0 * (pd + 1.0))) * (tm + tp);
}

cplx q_local_factor_cos_form(std::int64_t p, double sigma, double x) {
    require(p >= 2, "q_local_factor requires p >= 2");
    require(sigma > 0.5, "q_local_factor requires sigma > 1/2");
    const double w = std::exp(-sigma * std::log(static_cast<double>(p)));
    const double pd = static_cast<double>(p);
    const double half_log = 0.5 * std::log1p(-w * w);
    const cplx phase(std::cos(-x * half_log), std::sin(-x * half_log));
    const double amp = std::cos(0.5 * x * (std::log1p(-w) - std::log1p(w)));
    return 1.0 / (pd + 1.0) + (pd / (pd + 1.0)) * phase * amp;
}

cplx q_local_factor_series(std::int64_t p, double sigma, double x, int r_max,
                           lambda_mode mode) {
    require(p >= 2, "q_local_factor_series requires p >= 2");
    require(sigma > 0.5, "q_local_factor_series requires sigma > 1/2");
    require(r_max >= 1, "q_local_factor_series requires r_max >= 1");
    const double pd = static_cast<double>(p);
    const double a2 = std::exp(-2.0 * sigma * std::log(pd));
    kahan_sum_cplx acc;
    double scale = 1.0;
    for (int r = 1; r <= r_max; ++r) {
        scale *= a2;
        if (scale == 0.0) break;
        acc.add(lambda_prime_power(mode, x, pd, 2 * r) * scale);
    }
    return 1.0 + (pd / (pd + 1.0)) * acc.value();
}

cplx euler_product(const std::vector<cplx>& factors) {
    if (factors.size() <= 10000) {
        cplx prod(1.0, 0.0);
        for (const auto& f : factors) prod *= f;
        return prod;
    }
    kahan_sum_cplx log_acc;
    for (const auto& f : factors) log_acc.add(std::log(f));
    return std::exp(log_acc.value());
}

cplx m_tilde(double sigma, double x, const truncation_plan& plan) {
    require(sigma > 0.5, "m_tilde requires sigma > 1/2");
    require(!plan.cutoffs.empty(), "m_tilde requires a plan with cutoffs");
    std::vector<cplx> factors;
    factors.reserve(plan.cutoffs.size());
    for (const auto& [p, np] : plan.cutoffs) {
        int n_cut = np;
        if (sigma <= 0.6 && p < 50) n_cut = std::max(n_cut, 200);
        factors.push_back(m_local_factor(p, sigma, x, n_cut).value);
    }
    return euler_product(factors);
}

cplx m_tilde_quad(double sigma, double x, double y) {
    require(sigma > 0.5, "m_tilde_quad requires sigma > 1/2");
    require(y >= 2.0, "m_tilde_quad requires y >= 2");
    auto primes = primes_up_to(static_cast<std::int64_t>(std::floor(y)));
    std::vector<cplx> factors;
    factors.reserve(primes->p.size());
    for (auto p : primes->p) factors.push_back(torus_local_factor(p, sigma, x));
    return euler_product(factors);
}

double prime_zeta(double s) {
    require(s > 1.0, "prime_zeta requires s > 1");
    static const std::vector<std::int64_t> mu = [] {
        // Moebius values 0..1100 via smallest-prime-factor decomposition.
        const int n = 1100;
        auto spf = smallest_prime_factor(n);
        std::vector<std::int64_t> m(n + 1, 0);
        m[1] = 1;
        for (int i = 2; i <= n; ++i) {
            int p = spf[i];
            int q = i / p;
            m[i] = (q % p == 0) ? 0 : -m[q];
        }
        return m;
    }();

    kahan_sum acc;
    int zero_streak = 0;
    for (int k = 1; k <= 1080; ++k) {
        if (mu[k] == 0) continue;
        const double ks = k * s;
        if (ks > 1080.0) break;
        double lz;
        if (ks > 40.0) {
            // zeta(ks) - 1 = 2^-ks (1 + (2/3)^ks + ...) to double precision
            const double t2 = std::exp(-ks * std::log(2.0));
            const double t3 = std::exp(-ks * std::log(3.0));
            lz = std::log1p(t2 + t3);
        } else {
            lz = std::log(std::riemann_zeta(ks));
        }
        if (lz == 0.0) {
            if (++zero_streak >= 3) break;
            continue;
        }
        zero_streak = 0;
        acc.add(static_cast<double>(mu[k]) / k * lz);
    }
    return acc.value();
}

double prime_zeta_tail(double s, std::int64_t p0) {
    require(s > 1.0, "prime_zeta_tail requires s > 1");
    require(p0 >= 2, "prime_zeta_tail requires p0 >= 2");
    auto primes = primes_up_to(p0);
    kahan_sum head;
    for (double lp : primes->logp) head.add(std::exp(-s * lp));
    double tail = prime_zeta(s) - head.value();
    // The subtraction bottoms out near 1e-16; cap by the integer tail
    // sum_{n > p0} n^-s <= p0^(1-s)/(s-1) so tiny true tails are not replaced
    // by cancellation noise.
    const double cap = std::exp((1.0 - s) * std::log(static_cast<double>(p0))) / (s - 1.0);
    return std::clamp(tail, 0.0, cap);
}

sigma_window s_sigma_window(double sigma, double x) {
    require(sigma > 0.5, "s_sigma_window requires sigma > 1/2");
    sigma_window w;
    if (x == 0.0) return w;
    w.p_low = std::pow(3.0 * std::abs(x) / pi, 1.0 / sigma);
    w.p_high = std::pow(2.0, 1.0 / sigma) * w.p_low;
    if (w.p_high > 5e8) {
        throw numeric_error("s_sigma_window: window endpoint exceeds sieve budget");
    }
    auto primes = sieve_primes(static_cast<std::int64_t>(std::floor(w.p_high)));
    for (auto p : primes) {
        if (p > 16 && static_cast<double>(p) > w.p_low) ++w.count;
    }
    return w;
}

namespace {

// Tail tables for the real-character Euler product: prime-zeta tails
// z(s, j) = sum_{p > p0} p^-(2 sigma s + j) on a fixed (s, j) grid.
struct pz_table {
    std::int64_t p0 = 0;
    double sigma = 0.0;
    int smax = 0;
    int jmax = 0;
    std::vector<double> z;
    double at(int s, int j) const { return z[(s - 1) * (jmax + 1) + j]; }
};

std::shared_ptr<const pz_table> pz_table_for(double sigma, std::int64_t p0) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::uint64_t>,
                    std::shared_ptr<const pz_table>> cache;
    std::uint64_t sig_bits;
    static_assert(sizeof(sig_bits) == sizeof(sigma));
    std::memcpy(&sig_bits, &sigma, sizeof(sigma));
    const auto key = std::make_pair(p0, sig_bits);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto tab = std::make_shared<pz_table>();
    tab->p0 = p0;
    tab->sigma = sigma;
    tab->smax = 48;
    tab->jmax = 12;
    tab->z.resize(tab->smax * (tab->jmax + 1));
    auto primes = primes_up_to(p0);
    for (int s = 1; s <= tab->smax; ++s) {
        for (int j = 0; j <= tab->jmax; ++j) {
            const double e = 2.0 * sigma * s + j;
            kahan_sum head;
            for (double lp : primes->logp) head.add(std::exp(-e * lp));
            double t = prime_zeta(e) - head.value();
            // Same noise cap as prime_zeta_tail: never exceed the integer tail.
            const double cap =
                std::exp((1.0 - e) * std::log(static_cast<double>(p0))) / (e - 1.0);
            tab->z[(s - 1) * (tab->jmax + 1) + j] = std::clamp(t, 0.0, cap);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, tab);
    return it->second;
}

double binom_small(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// Upper incomplete gamma for integer k >= 1:
// Gamma(k, u) = (k-1)! e^-u sum_{j<k} u^j/j!.
double upper_gamma_int(int k, double u) {
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    double s = 0.0, t = 1.0;
    for (int j = 0; j < k; ++j) {
        s += t;
        t *= u / (j + 1);
    }
    return fact * std::exp(-u) * s;
}

// Direct-product cutoffs; the tail beyond the chosen one is handled by
// prime-zeta expansion of the factor logarithms.
constexpr std::int64_t kLevels[] = {512, 2048, 8192, 32768, 131072};

struct tail_expansion {
    cplx log_tail{0.0, 0.0};
    double bound = 0.0;
    bool ok = false;
};

tail_expansion expand_log_l_tail(double sigma, double x, std::int64_t p0,
                                 double tail_tol) {
    tail_expansion out;
    const double p0s2 = std::exp(-2.0 * sigma * std::log(static_cast<double>(p0)));

    int big_r = 20;
    while (true) {
        auto h = h_eval_all(2 * (big_r + 1), cplx(0.0, x));
        std::vector<cplx> a1(big_r + 2);
        for (int r = 1; r <= big_r + 1; ++r) a1[r] = h[2 * r];

        // c2 bounds |factor - 1| <= c2 p^{-2 sigma} for p >= p0.
        double c2 = 0.0, scale = 1.0, last = 0.0, prev = 0.0;
        for (int r = 1; r <= big_r + 1; ++r) {
            prev = last;
            last = std::abs(a1[r]) * scale;
            c2 += last;
            scale *= p0s2;
        }
        const double ratio = (prev > 0.0) ? std::abs(a1[big_r + 1]) * p0s2 /
                                                std::abs(a1[big_r])
                                          : 0.0;
        if ((ratio > 0.25 || !(c2 * p0s2 <= 0.1)) && big_r < 44) {
            big_r += 8;
            continue;
        }
        if (ratio > 0.25 || !(c2 * p0s2 <= 0.1)) return out;  // escalate p0

        auto tab = pz_table_for(sigma, p0);
        std::vector<cplx> a2(big_r + 1), a3(big_r + 1);
        for (int s = 2; s <= big_r; ++s)
            for (int i = 1; i < s; ++i) a2[s] += a1[i] * a1[s - i];
        for (int s = 3; s <= big_r; ++s)
            for (int i = 2; i < s; ++i) a3[s] += a2[i] * a1[s - i];

        const int j_cut = 10;
        auto family_sum = [&](int m, int s) {
            double v = 0.0;
            for (int j = 0; j <= j_cut; ++j) {
                const double c = binom_small(m + j - 1, j) * tab->at(s, j);
                v += (j % 2 == 0) ? c : -c;
            }
            return v;
        };

        kahan_sum_cplx acc;
        double jrem = 0.0;
        for (int s = 1; s <= big_r; ++s) {
            if (a1[s] != cplx(0.0, 0.0)) acc.add(a1[s] * family_sum(1, s));
            if (s >= 2 && a2[s] != cplx(0.0, 0.0))
                acc.add(-0.5 * a2[s] * family_sum(2, s));
            if (s >= 3 && a3[s] != cplx(0.0, 0.0))
                acc.add((1.0 / 3.0) * a3[s] * family_sum(3, s));
            const double zj = tab->at(s, j_cut + 1);
            jrem += zj * (std::abs(a1[s]) + 0.5 * binom_small(j_cut + 2, j_cut + 1) *
                          std::abs(a2[s]) + (binom_small(j_cut + 3, j_cut + 1) / 3.0) *
                          std::abs(a3[s]));
        }

        // log(1+w) remainder beyond w^3: |w|^4/(4(1-|w|)) <= 0.28 |w|^4.
        const double rem4 = 0.28 * c2 * c2 * c2 * c2 * tab->at(4, 0);
        // Coefficients with r > big_r dropped from w, w^2, w^3.
        const double dcap = std::abs(a1[big_r + 1]) / (1.0 - std::min(ratio, 0.25));
        const double small = c2 * p0s2;
        const double trunc = (big_r + 1 <= tab->smax)
                                 ? 3.0 * dcap * (1.0 + small + small * small) *
                                       tab->at(big_r + 1, 0)
                                 : 1.0;

        out.log_tail = acc.value();
        out.bound = rem4 + trunc + jrem;
        out.ok = out.bound <= tail_tol;
        return out;
    }
}

}  // namespace

q_tilde_result q_tilde_full(double sigma, double x, double tail_tol, lambda_mode mode) {
    require(sigma > 0.5, "q_tilde requires sigma > 1/2");
    require(tail_tol > 0.0, "q_tilde requires tail_tol > 0");

    q_tilde_result out;
    if (x == 0.0) {
        out.value = cplx(1.0, 0.0);
        out.p_star = kLevels[0];
        out.tail_bound = 0.0;
        return out;
    }

    if (mode == lambda_mode::log_l) {
        for (std::int64_t level : kLevels) {
            const double ps = std::exp(sigma * std::log(static_cast<double>(level)));
            if (ps < 8.0 * (std::abs(x) + 1.0)) continue;
            auto tail = expand_log_l_tail(sigma, x, level, tail_tol);
            if (!tail.ok) continue;
            auto primes = primes_up_to(level);
            std::vector<cplx> factors;
            factors.reserve(primes->p.size());
            for (auto p : primes->p) factors.push_back(q_local_factor(p, sigma, x));
            out.value = euler_product(factors) * std::exp(tail.log_tail);
            out.p_star = level;
            out.tail_bound = tail.bound;
            return out;
        }
        throw numeric_error("q_tilde: no direct-product cutoff meets tail_tol; "
                            "increase tail_tol");
    }

    // Derivative-mode factors carry log p inside the coefficients, so the tail
    // uses prime-counting integrals: sum_{p>P} ln^k p p^-e ~ int ln^{k-1} t t^-e dt
    // = Gamma(k, (e-1) ln P)/(e-1)^k, with a 2% slack for the prime-count error.
    const std::int64_t p1 = 2000000;
    auto primes = primes_up_to(p1);
    std::vector<cplx> factors;
    factors.reserve(primes->p.size());
    const double pd_x = x;
    for (std::size_t i = 0; i < primes->p.size(); ++i) {
        const double pd = static_cast<double>(primes->p[i]);
        const double lp = primes->logp[i];
        const double a = std::exp(-sigma * lp);
        const double phase_m = pd_x * lp * a / (1.0 - a);
        const double phase_p = pd_x * lp * a / (1.0 + a);
        const cplx tm(std::cos(-phase_m), std::sin(-phase_m));
        const cplx tp(std::cos(phase_p), std::sin(phase_p));
        factors.push_back(1.0 / (pd + 1.0) + (pd / (2.0 * (pd + 1.0))) * (tm + tp));
    }
    const cplx direct = euler_product(factors);

    const double lnp1 = std::log(static_cast<double>(p1));
    auto pnt_tail = [&](int k, double e) {
        return upper_gamma_int(k, (e - 1.0) * lnp1) /
               std::pow(e - 1.0, static_cast<double>(k));
    };

    kahan_sum_cplx corr;
    for (int j = 0; j <= 2; ++j) {
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        const double e = 2.0 * sigma + j;
        corr.add(sgn * cplx(0.0, -x) * pnt_tail(1, e));
        corr.add(sgn * cplx(-0.5 * x * x, 0.0) * pnt_tail(2, e));
    }
    const cplx log_tail = corr.value();

    const double ax = std::abs(x);
    double bound = 0.02 * std::abs(log_tail);
    bound += ax * pnt_tail(1, 2.0 * sigma + 3.0) +
             0.5 * x * x * pnt_tail(2, 2.0 * sigma + 3.0);
    // r = 2 coefficient G_4 and the w^2/2 term, both at p^{-4 sigma}.
    bound += ax * pnt_tail(1, 4.0 * sigma) + 1.5 * x * x * pnt_tail(2, 4.0 * sigma) +
             0.5 * ax * ax * ax * pnt_tail(3, 4.0 * sigma) +
             (x * x * x * x / 24.0) * pnt_tail(4, 4.0 * sigma);
    bound += 0.5 * (x * x * pnt_tail(2, 4.0 * sigma) +
                    ax * ax * ax * pnt_tail(3, 4.0 * sigma) +
                    0.25 * x * x * x * x * pnt_tail(4, 4.0 * sigma));
    // |w|^3/3 with |w| <= (|x| ln p + x^2 ln^2 p/2) p^{-2 sigma}.
    const double e6 = 6.0 * sigma;
    bound += (1.0 / 3.0) * (ax * ax * ax * pnt_tail(3, e6) +
                            1.5 * x * x * x * x * pnt_tail(4, e6) +
                            0.75 * std::pow(ax, 5) * pnt_tail(5, e6) +
                            0.125 * std::pow(ax, 6) * pnt_tail(6, e6));

    if (bound > tail_tol) {
        throw numeric_error("q_tilde (derivative mode): tail bound exceeds tail_tol; "
                            "increase tail_tol");
    }
    out.value = direct * std::exp(log_tail);
    out.p_star = p1;
    out.tail_bound = bound;
    return out;
}

cplx q_tilde(double sigma, double x, double tail_tol) {
    return q_tilde_full(sigma, x, tail_tol, lambda_mode::log_l).value;
}

} // namespace ldist
