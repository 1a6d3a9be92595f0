#include "ldist/averages.hpp"

#include <algorithm>
#include <cmath>

#include "ldist/fourier.hpp"
#include "ldist/lfunc.hpp"
#include "ldist/local_factors.hpp"
#include "ldist/primes.hpp"
#include "ldist/rng.hpp"
#include "ldist/summation.hpp"

namespace ldist {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw validation_error(what);
}

struct moment_part {
    kahan_sum re, im, re2, im2;
    void add(cplx v) {
        re.add(v.real());
        im.add(v.imag());
        re2.add(v.real() * v.real());
        im2.add(v.imag() * v.imag());
    }
    void combine(const moment_part& b) {
        re.add(b.re.value());
        im.add(b.im.value());
        re2.add(b.re2.value());
        im2.add(b.im2.value());
    }
    mc_estimate finish(std::int64_t n) const {
        mc_estimate out;
        out.samples = n;
        const double nn = static_cast<double>(n);
        out.mean = cplx(re.value() / nn, im.value() / nn);
        const double vr =
            std::max(0.0, re2.value() / nn - out.mean.real() * out.mean.real());
        const double vi =
            std::max(0.0, im2.value() / nn - out.mean.imag() * out.mean.imag());
        out.std_error = std::sqrt((vr + vi) / nn);
        return out;
    }
};

struct count_block {
    std::vector<std::int64_t> bins;
    std::int64_t below = 0, above = 0;
    void combine(const count_block& b) {
        if (bins.size() < b.bins.size()) bins.resize(b.bins.size(), 0);
        for (std::size_t i = 0; i < b.bins.size(); ++i) bins[i] += b.bins[i];
        below += b.below;
        above += b.above;
    }
};

histogram_result finish_histogram(const std::vector<double>& edges,
                                  const std::vector<std::int64_t>& counts,
                                  std::int64_t below, std::int64_t above,
                                  std::int64_t total) {
    histogram_result out;
    out.edges = edges;
    out.total = total;
    out.below = below;
    out.above = above;
    out.freq.resize(counts.size());
    const double nn = static_cast<double>(total);
    for (std::size_t b = 0; b < counts.size(); ++b) {
        const double p = counts[b] / nn;
        out.freq[b] = p;
        out.max_bin_stderr =
            std::max(out.max_bin_stderr, std::sqrt(p * (1.0 - p) / nn));
    }
    return out;
}

void bin_value(double u, const std::vector<double>& edges, count_block& blk) {
    if (u < edges.front()) {
        ++blk.below;
        return;
    }
    if (u >= edges.back()) {
        ++blk.above;
        return;
    }
    const auto it = std::upper_bound(edges.begin(), edges.end(), u);
    ++blk.bins[static_cast<std::size_t>(it - edges.begin() - 1)];
}

void check_edges(const std::vector<double>& edges) {
    require(edges.size() >= 2, "histogram needs at least two bin edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        require(edges[i] > edges[i - 1], "histogram edges must be strictly increasing");
}

// Primes up to y with a_p = p^-sigma; u(theta) = -sum log(1 - 2 a cos + a^2).
struct torus_setup {
    std::vector<std::int64_t> primes;
    std::vector<double> a;
    torus_setup(double sigma, double y) {
        require(sigma > 0.5, "sigma must exceed 0.5");
        require(y >= 2.0, "y must be at least 2");
        primes = sieve_primes(static_cast<std::int64_t>(std::floor(y)));
        a.resize(primes.size());
        for (std::size_t i = 0; i < primes.size(); ++i)
            a[i] = std::pow(static_cast<double>(primes[i]), -sigma);
    }
    double u_at(std::uint64_t seed, std::int64_t sample) const {
        double u = 0.0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const double theta =
                2.0 * pi *
                uniform01(seed, static_cast<std::uint64_t>(sample),
                          static_cast<std::uint64_t>(i));
            u -= std::log1p(a[i] * (a[i] - 2.0 * std::cos(theta)));
        }
        return u;
    }
};

// u values for character index j of a prime-modulus table.
struct dirichlet_setup {
    std::vector<double> a;
    std::vector<std::int64_t> dlogp;
    std::int64_t ord;
    const character_table& tab;
    dirichlet_setup(const character_table& t, double sigma, double y) : tab(t) {
        require(sigma > 0.5, "sigma must exceed 0.5");
        require(y >= 2.0, "y must be at least 2");
        require(y < static_cast<double>(t.modulus), "y must be below the modulus");
        ord = t.modulus - 1;
        for (std::int64_t p : sieve_primes(static_cast<std::int64_t>(std::floor(y)))) {
            a.push_back(std::pow(static_cast<double>(p), -sigma));
            dlogp.push_back(t.dlog[static_cast<std::size_t>(p)]);
        }
    }
    double u_at(std::int64_t j) const {
        double u = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double c =
                tab.roots[static_cast<std::size_t>((j * dlogp[i]) % ord)].real();
            u -= std::log1p(a[i] * (a[i] - 2.0 * c));
        }
        return u;
    }
};

} // namespace

mc_estimate torus_mc_psi(double sigma, double y, double x, std::int64_t n_samples,
                         std::uint64_t seed) {
    require(n_samples >= 2, "need at least two samples");
    const torus_setup setup(sigma, y);
    moment_part acc;
    blocked_reduce(
        n_samples,
        [&](std::int64_t lo, std::int64_t hi) {
            moment_part blk;
            for (std::int64_t s = lo; s < hi; ++s) {
                const double xu = x * setup.u_at(seed, s);
                blk.add(cplx(std::cos(xu), std::sin(xu)));
            }
            return blk;
        },
        acc, [](moment_part& a, const moment_part& b) { a.combine(b); });
    return acc.finish(n_samples);
}

histogram_result torus_mc_histogram(double sigma, double y,
                                    const std::vector<double>& edges,
                                    std::int64_t n_samples, std::uint64_t seed) {
    require(n_samples >= 2, "need at least two samples");
    check_edges(edges);
    const torus_setup setup(sigma, y);
    const std::size_t n_bins = edges.size() - 1;
    count_block acc;
    acc.bins.assign(n_bins, 0);
    blocked_reduce(
        n_samples,
        [&](std::int64_t lo, std::int64_t hi) {
            count_block blk;
            blk.bins.assign(n_bins, 0);
            for (std::int64_t s = lo; s < hi; ++s)
                bin_value(setup.u_at(seed, s), edges, blk);
            return blk;
        },
        acc, [](count_block& a, const count_block& b) { a.combine(b); });
    return finish_histogram(edges, acc.bins, acc.below, acc.above, n_samples);
}

histogram_result dirichlet_histogram(const character_table& tab, double sigma,
                                     double y, const std::vector<double>& edges) {
    check_edges(edges);
    const dirichlet_setup setup(tab, sigma, y);
    const std::int64_t n = tab.modulus - 2;  // non-principal characters
    require(n >= 1, "modulus too small");
    const std::size_t n_bins = edges.size() - 1;
    count_block acc;
    acc.bins.assign(n_bins, 0);
    blocked_reduce(
        n,
        [&](std::int64_t lo, std::int64_t hi) {
            count_block blk;
            blk.bins.assign(n_bins, 0);
            for (std::int64_t j = lo + 1; j < hi + 1; ++j)
                bin_value(setup.u_at(j), edges, blk);
            return blk;
        },
        acc, [](count_block& a, const count_block& b) { a.combine(b); });
    return finish_histogram(edges, acc.bins, acc.below, acc.above, n);
}

mc_estimate dirichlet_average(const character_table& tab, double sigma, double x,
                              double y) {
    const dirichlet_setup setup(tab, sigma, y);
    const std::int64_t n = tab.modulus - 2;
    require(n >= 1, "modulus too small");
    moment_part acc;
    blocked_reduce(
        n,
        [&](std::int64_t lo, std::int64_t hi) {
            moment_part blk;
            for (std::int64_t j = lo + 1; j < hi + 1; ++j) {
                const double xu = x * setup.u_at(j);
                blk.add(cplx(std::cos(xu), std::sin(xu)));
            }
            return blk;
        },
        acc, [](moment_part& a, const moment_part& b) { a.combine(b); });
    return acc.finish(n);
}

quadratic_avg_result quadratic_average(std::int64_t big_y, double sigma, double x,
                                       lambda_mode mode, quad_route via,
                                       double smoothing_x) {
    require(big_y >= 3, "discriminant bound must be at least 3");
    require(sigma > 0.5, "sigma must exceed 0.5");
    if (smoothing_x <= 0.0) smoothing_x = 20.0 * std::sqrt(static_cast<double>(big_y));

    quadratic_avg_result out;
    out.smoothing_x = smoothing_x;
    out.cap = static_cast<std::int64_t>(std::ceil(10.0 * smoothing_x));

    auto ds = enumerate_fundamental_discriminants(big_y);
    out.considered = static_cast<std::int64_t>(ds.discriminants.size());
    ds.dagger_flags.assign(ds.discriminants.size(), 0);

    const auto dtab = build_dagger_tables(sigma);
    std::vector<std::int64_t> survivors;
    for (std::size_t i = 0; i < ds.discriminants.size(); ++i) {
        const auto res = dagger_filter(ds.discriminants[i], dtab);
        if (res.accepted) {
            ds.dagger_flags[i] = 1;
            survivors.push_back(ds.discriminants[i]);
        } else if (res.certified) {
            ++out.excluded;
        } else {
            ++out.inconclusive;
        }
    }
    out.used = static_cast<std::int64_t>(survivors.size());
    if (survivors.empty())
        throw numeric_error("no discriminant passes the positivity screen");

    kahan_sum_cplx total;
    if (via == quad_route::oracle) {
        blocked_reduce(
            static_cast<std::int64_t>(survivors.size()),
            [&](std::int64_t lo, std::int64_t hi) {
                kahan_sum_cplx part;
                for (std::int64_t i = lo; i < hi; ++i) {
                    const std::int64_t d = survivors[static_cast<std::size_t>(i)];
                    const double v = (mode == lambda_mode::log_l)
                                         ? hurwitz_log(sigma, d)
                                         : l_log_deriv(sigma, d);
                    part.add(cplx(std::cos(x * v), std::sin(x * v)));
                }
                return part;
            },
            total,
            [](kahan_sum_cplx& acc, const kahan_sum_cplx& p) { acc.add(p.value()); },
            1);
    } else {
        const auto tables =
            build_psi_series_tables(sigma, x, mode, smoothing_x, out.cap);
        const auto spf = smallest_prime_factor(static_cast<std::int32_t>(out.cap));
        blocked_reduce(
            static_cast<std::int64_t>(survivors.size()),
            [&](std::int64_t lo, std::int64_t hi) {
                static thread_local std::vector<std::int8_t> chi;
                kahan_sum_cplx part;
                for (std::int64_t i = lo; i < hi; ++i) {
                    chi_d_sieve(survivors[static_cast<std::size_t>(i)], out.cap, spf, chi);
                    kahan_sum_cplx dot;
                    for (std::int64_t n = 1; n <= out.cap; ++n) {
                        const int c = chi[static_cast<std::size_t>(n)];
                        if (c == 1)
                            dot.add(tables.weights[static_cast<std::size_t>(n)]);
                        else if (c == -1)
                            dot.add(-tables.weights[static_cast<std::size_t>(n)]);
                    }
                    part.add(dot.value());
                }
                return part;
            },
            total,
            [](kahan_sum_cplx& acc, const kahan_sum_cplx& p) { acc.add(p.value()); },
            1);
    }
    out.value = total.value() / static_cast<double>(out.used);
    return out;
}

cplx rhs_series(double sigma, double x, lambda_mode mode, std::int64_t n_max) {
    require(sigma > 0.5, "sigma must exceed 0.5");
    require(n_max >= 1000 && n_max <= 200000000, "n_max out of range");

    const auto spf = smallest_prime_factor(static_cast<std::int32_t>(n_max));
    int max_e = 1;
    while ((1LL << (max_e + 1)) <= n_max) ++max_e;
    const auto h_table = h_eval_all(2 * max_e + 2, cplx(0.0, x));

    std::vector<cplx> v(static_cast<std::size_t>(n_max) + 1);
    v[1] = cplx(1.0, 0.0);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int32_t p = spf[static_cast<std::size_t>(n)];
        std::int64_t m = n / p;
        int e = 1;
        while (m > 1 && spf[static_cast<std::size_t>(m)] == p) {
            m /= p;
            ++e;
        }
        cplx coef;
        if (mode == lambda_mode::log_l) {
            coef = h_table[static_cast<std::size_t>(2 * e)];
        } else {
            const cplx z(0.0, -x * std::log(static_cast<double>(p)));
            coef = (e == 1) ? z + 0.5 * z * z : g_eval(2 * e, z);
        }
        v[static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(m)] * coef *
                                         (static_cast<double>(p) / (p + 1.0));
    }

    kahan_sum_cplx total;
    blocked_reduce(
        n_max,
        [&](std::int64_t lo, std::int64_t hi) {
            kahan_sum_cplx part;
            for (std::int64_t i = lo; i < hi; ++i) {
                const std::int64_t n = i + 1;
                part.add(v[static_cast<std::size_t>(n)] *
                         std::pow(static_cast<double>(n), -2.0 * sigma));
            }
            return part;
        },
        total, [](kahan_sum_cplx& acc, const kahan_sum_cplx& p) { acc.add(p.value()); });
    return total.value();
}

std::vector<convergence_row> uniform_convergence_report(double sigma,
                                                        const std::vector<double>& ys,
                                                        double x_max, int n_points,
                                                        double u_min, double u_max,
                                                        int n_u) {
    require(!ys.empty(), "need at least one y value");
    for (std::size_t i = 1; i < ys.size(); ++i)
        require(ys[i] > ys[i - 1], "y values must be strictly increasing");

    std::vector<convergence_row> rows;
    std::vector<double> prev;
    const int pts = alias_safe_points(x_max, u_min, u_max, n_points);
    for (double y : ys) {
        const auto grid = sample_characteristic(
            [&](double xx) { return m_tilde_quad(sigma, xx, y); }, x_max, pts);
        const auto dens = invert(grid, u_min, u_max, n_u);
        convergence_row row;
        row.y = y;
        row.mass = dens.mass;
        if (!prev.empty()) {
            double sup = 0.0;
            for (std::size_t k = 0; k < dens.values.size(); ++k)
                sup = std::max(sup, std::abs(dens.values[k] - prev[k]));
            row.sup_distance = sup;
        }
        rows.push_back(row);
        prev = dens.values;
    }
    return rows;
}

} // namespace ldist
