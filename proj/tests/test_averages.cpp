#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "ldist/averages.hpp"
#include "ldist/characters.hpp"
#include "ldist/local_factors.hpp"
#include "ldist/summation.hpp"

namespace {

using ldist::cplx;
using ldist::lambda_mode;

struct thread_guard {
    ~thread_guard() { ldist::set_max_threads(0); }
};

}  // namespace

TEST_SUITE("averages") {

TEST_CASE("monte carlo results do not depend on the thread count") {
    thread_guard guard;
    ldist::set_max_threads(1);
    const auto one = ldist::torus_mc_psi(1.5, 13.0, 1.0, 20000, 42);
    ldist::set_max_threads(8);
    const auto eight = ldist::torus_mc_psi(1.5, 13.0, 1.0, 20000, 42);
    CHECK(one.mean.real() == eight.mean.real());
    CHECK(one.mean.imag() == eight.mean.imag());
    CHECK(one.std_error == eight.std_error);

    std::vector<double> edges{-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0};
    ldist::set_max_threads(1);
    const auto h1 = ldist::torus_mc_histogram(1.2, 13.0, edges, 30000, 7);
    ldist::set_max_threads(8);
    const auto h8 = ldist::torus_mc_histogram(1.2, 13.0, edges, 30000, 7);
    CHECK(h1.freq == h8.freq);
    CHECK(h1.below == h8.below);
    CHECK(h1.above == h8.above);
}

TEST_CASE("different seeds decorrelate, same seed reproduces") {
    const auto a = ldist::torus_mc_psi(1.0, 13.0, 1.0, 5000, 1);
    const auto b = ldist::torus_mc_psi(1.0, 13.0, 1.0, 5000, 1);
    const auto c = ldist::torus_mc_psi(1.0, 13.0, 1.0, 5000, 2);
    CHECK(a.mean == b.mean);
    CHECK(a.mean != c.mean);
    CHECK(std::abs(a.mean - c.mean) <= 8.0 * (a.std_error + c.std_error));
}

TEST_CASE("monte carlo means match quadrature on a parameter grid") {
    // Statistical gate: at least 19 of these 20 cases within four standard
    // errors of the quadrature value.
    const double sigmas[] = {0.8, 1.0, 1.2, 1.5};
    const double xs[] = {0.5, 1.0, 2.0, 3.0, 5.0};
    int hits = 0;
    for (double sigma : sigmas) {
        for (double x : xs) {
            const auto est = ldist::torus_mc_psi(sigma, 13.0, x, 20000, 20240814);
            const cplx ref = ldist::m_tilde_quad(sigma, x, 13.0);
            if (std::abs(est.mean - ref) <= 4.0 * est.std_error) ++hits;
        }
    }
    CHECK(hits >= 19);
}

TEST_CASE("histogram accounting is exact") {
    std::vector<double> edges{-3.0, -1.0, 0.0, 0.5, 1.0, 3.0};
    const auto h = ldist::torus_mc_histogram(1.5, 13.0, edges, 40000, 99);
    CHECK(h.total == 40000);
    double probability = 0.0;
    for (double f : h.freq) probability += f;
    probability += static_cast<double>(h.below + h.above) / h.total;
    CHECK(probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.max_bin_stderr > 0.0);
    CHECK(h.max_bin_stderr < 0.01);
}

TEST_CASE("character-family average approaches the infinite product") {
    const auto tab = ldist::build_character_table(1009);
    const auto avg = ldist::dirichlet_average(tab, 1.5, 1.0, 13.0);
    CHECK(avg.samples == 1007);
    const auto plan = ldist::make_truncation_plan(1e-6, 1.0, 13.0);
    const cplx ref = ldist::m_tilde(1.5, 1.0, plan);
    CHECK(std::abs(avg.mean - ref) <= 0.02);
}

TEST_CASE("character-family histogram accounting") {
    const auto tab = ldist::build_character_table(1009);
    std::vector<double> edges;
    for (int k = -12; k <= 12; ++k) edges.push_back(0.25 * k);
    const auto h = ldist::dirichlet_histogram(tab, 1.5, 13.0, edges);
    CHECK(h.total == 1007);
    double probability = 0.0;
    for (double f : h.freq) probability += f;
    probability += static_cast<double>(h.below + h.above) / h.total;
    CHECK(probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("family averages validate their cutoffs") {
    const auto tab = ldist::build_character_table(13);
    CHECK_THROWS_AS(ldist::dirichlet_average(tab, 1.5, 1.0, 13.0),
                    ldist::validation_error);
    CHECK_THROWS_AS(ldist::quadratic_average(2, 1.0, 1.0, lambda_mode::log_l,
                                             ldist::quad_route::oracle),
                    ldist::validation_error);
}

TEST_CASE("series identity against the product reference") {
    const cplx series = ldist::rhs_series(1.0, 1.0, lambda_mode::log_l, 100000);
    const cplx product = ldist::q_tilde_full(1.0, 1.0, 1e-8, lambda_mode::log_l).value;
    CHECK(std::abs(series - product) <= 1e-4);

    const cplx dseries = ldist::rhs_series(1.5, 2.0, lambda_mode::log_deriv, 100000);
    const cplx dproduct =
        ldist::q_tilde_full(1.5, 2.0, 1e-8, lambda_mode::log_deriv).value;
    CHECK(std::abs(dseries - dproduct) <= 1e-4);

    CHECK(ldist::rhs_series(1.0, 0.0, lambda_mode::log_l, 10000) == cplx(1.0, 0.0));
    CHECK(ldist::rhs_series(0.8, 0.0, lambda_mode::log_deriv, 10000) == cplx(1.0, 0.0));
}

TEST_CASE("quadratic family averages by both routes") {
    const auto series = ldist::quadratic_average(2000, 1.0, 1.0, lambda_mode::log_l,
                                                 ldist::quad_route::smoothed_series);
    const auto oracle = ldist::quadratic_average(2000, 1.0, 1.0, lambda_mode::log_l,
                                                 ldist::quad_route::oracle);
    CHECK(series.considered == oracle.considered);
    CHECK(series.used == oracle.used);
    CHECK(std::abs(series.value - oracle.value) <= 0.01);
    CHECK(series.smoothing_x == doctest::Approx(20.0 * std::sqrt(2000.0)));
    CHECK(series.excluded == 0);

    const auto at_zero = ldist::quadratic_average(2000, 1.0, 0.0, lambda_mode::log_l,
                                                  ldist::quad_route::oracle);
    CHECK(at_zero.value == cplx(1.0, 0.0));
    CHECK(at_zero.used == at_zero.considered);
}

TEST_CASE("quadratic average is deterministic across thread counts") {
    thread_guard guard;
    ldist::set_max_threads(1);
    const auto one = ldist::quadratic_average(1000, 1.0, 1.0, lambda_mode::log_l,
                                              ldist::quad_route::smoothed_series);
    ldist::set_max_threads(8);
    const auto eight = ldist::quadratic_average(1000, 1.0, 1.0, lambda_mode::log_l,
                                                ldist::quad_route::smoothed_series);
    CHECK(one.value.real() == eight.value.real());
    CHECK(one.value.imag() == eight.value.imag());
    CHECK(one.used == eight.used);
}

TEST_CASE("finite-product densities converge uniformly in the cutoff") {
    const auto rows =
        ldist::uniform_convergence_report(1.5, {5.0, 7.0, 11.0, 13.0}, 256.0, 0,
                                          -8.0, 8.0, 801);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].sup_distance == 0.0);
    for (const auto& r : rows) {
        CHECK(std::abs(r.mass - 1.0) <= 5e-3);
    }
    CHECK(rows[2].sup_distance <= rows[1].sup_distance + 1e-3);
    CHECK(rows[3].sup_distance <= rows[2].sup_distance + 1e-3);
}

} // TEST_SUITE
