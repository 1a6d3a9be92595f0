#include "ldist/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "ldist/summation.hpp"

namespace ldist {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw validation_error(what);
}

double simpson_weight(int j, int n) {
    if (j == 0 || j == n - 1) return 1.0;
    return (j % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace

fourier_grid sample_characteristic(const std::function<cplx(double)>& f,
                                   double x_max, int n_points) {
    require(x_max > 0.0, "sample_characteristic requires x_max > 0");
    require(n_points >= 129 && n_points % 2 == 1,
            "sample_characteristic requires odd n_points >= 129");

    fourier_grid g;
    g.x_max = x_max;
    g.n_points = n_points;
    g.xs.resize(n_points);
    g.values.resize(n_points);
    const int mid = (n_points - 1) / 2;
    const double dx = 2.0 * x_max / (n_points - 1);
    for (int j = 0; j < n_points; ++j) g.xs[j] = (j - mid) * dx;
    g.xs[mid] = 0.0;

    detail::run_blocks((n_points - mid + 255) / 256, [&](std::int64_t b) {
        const int lo = mid + static_cast<int>(b) * 256;
        const int hi = std::min(n_points, lo + 256);
        for (int j = lo; j < hi; ++j) g.values[j] = f(g.xs[j]);
    });
    for (int j = 0; j < mid; ++j) g.values[j] = std::conj(g.values[n_points - 1 - j]);

    const cplx f0 = g.values[mid];
    if (std::abs(f0 - cplx(1.0, 0.0)) > 1e-12) {
        throw numeric_error("characteristic function is not 1 at x = 0");
    }
    // Spot-check conjugate symmetry by evaluating f on the negative side.
    double defect = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const int j = mid + (k * (n_points - 1 - mid)) / 8;
        if (j <= mid || j >= n_points) continue;
        defect = std::max(defect, std::abs(f(-g.xs[j]) - std::conj(g.values[j])));
    }
    g.symmetry_defect = defect;
    return g;
}

density_grid invert(const fourier_grid& grid, double u_min, double u_max, int n_u) {
    require(u_max > u_min, "invert requires u_max > u_min");
    require(n_u >= 2, "invert requires at least 2 output points");
    require(grid.n_points >= 3, "invert requires a sampled grid");

    density_grid d;
    d.u_min = u_min;
    d.u_max = u_max;
    d.us.resize(n_u);
    d.values.resize(n_u);
    const double du = (u_max - u_min) / (n_u - 1);
    for (int k = 0; k < n_u; ++k) d.us[k] = u_min + k * du;

    const int n = grid.n_points;
    const double dx = grid.xs[1] - grid.xs[0];
    std::vector<double> imag_res(n_u, 0.0);

    detail::run_blocks((n_u + 63) / 64, [&](std::int64_t b) {
        const int lo = static_cast<int>(b) * 64;
        const int hi = std::min(n_u, lo + 64);
        for (int k = lo; k < hi; ++k) {
            const double u = d.us[k];
            const cplx rot(std::cos(-u * dx), std::sin(-u * dx));
            kahan_sum re, im;
            cplx e(std::cos(-u * grid.xs[0]), std::sin(-u * grid.xs[0]));
            for (int j = 0; j < n; ++j) {
                if ((j & 1023) == 0) {
                    e = cplx(std::cos(-u * grid.xs[j]), std::sin(-u * grid.xs[j]));
                }
                const cplx t = grid.values[j] * e;
                const double w = simpson_weight(j, n);
                re.add(w * t.real());
                im.add(w * t.imag());
                e *= rot;
            }
            const double scale = dx / (3.0 * sqrt_two_pi);
            d.values[k] = scale * re.value();
            imag_res[k] = std::abs(scale * im.value());
        }
    });

    d.imag_residue = *std::max_element(imag_res.begin(), imag_res.end());
    d.min_value = *std::min_element(d.values.begin(), d.values.end());
    kahan_sum mass;
    for (int k = 0; k + 1 < n_u; ++k) mass.add(0.5 * du * (d.values[k] + d.values[k + 1]));
    d.mass = mass.value() / sqrt_two_pi;
    d.edge_magnitude = std::max(std::abs(grid.values.front()), std::abs(grid.values.back()));
    d.truncation_warning = d.edge_magnitude > 1e-6;
    return d;
}

double auto_truncate(const std::function<cplx(double)>& f, double tol) {
    require(tol > 0.0, "auto_truncate requires tol > 0");
    for (double x_max = 1.0; x_max <= 8192.0; x_max *= 2.0) {
        bool ok = std::abs(f(x_max)) < tol;
        for (int k = 1; ok && k <= 8; ++k) {
            ok = std::abs(f(x_max * (1.0 + k / 64.0))) < tol;
        }
        if (ok) return x_max;
    }
    throw numeric_error("auto_truncate: |F| stays above tol out to the 10^4 cap; "
                        "increase tol or supply x_max explicitly");
}

int alias_safe_points(double x_max, double u_min, double u_max, int requested) {
    if (requested > 0) {
        require(requested >= 129 && requested % 2 == 1,
                "n_points must be odd and >= 129");
        return requested;
    }
    const double period_needed = (u_max - u_min) + 4.0;
    const double dx_max = 2.0 * pi / period_needed;
    int n = static_cast<int>(std::ceil(2.0 * x_max / dx_max)) + 1;
    n = std::max(n, 4097);
    if (n % 2 == 0) ++n;
    return n;
}

std::vector<double> bin_masses(const fourier_grid& grid,
                               const std::vector<double>& edges) {
    require(edges.size() >= 2, "bin_masses requires at least one bin");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        require(edges[i] < edges[i + 1], "bin edges must increase");
    }
    const int n = grid.n_points;
    const double dx = grid.xs[1] - grid.xs[0];
    std::vector<double> masses(edges.size() - 1, 0.0);

    detail::run_blocks(static_cast<std::int64_t>(masses.size()), [&](std::int64_t bi) {
        const double a = edges[static_cast<std::size_t>(bi)];
        const double b = edges[static_cast<std::size_t>(bi) + 1];
        kahan_sum acc;
        for (int j = 0; j < n; ++j) {
            const double x = grid.xs[j];
            cplx kernel;
            if (std::abs(x) < 1e-12) {
                kernel = cplx(b - a, 0.0);
            } else {
                const cplx ea(std::cos(-a * x), std::sin(-a * x));
                const cplx eb(std::cos(-b * x), std::sin(-b * x));
                kernel = (ea - eb) / cplx(0.0, x);
            }
            acc.add(simpson_weight(j, n) * (grid.values[j] * kernel).real());
        }
        masses[static_cast<std::size_t>(bi)] = acc.value() * dx / (3.0 * 2.0 * pi);
    });
    return masses;
}

} // namespace ldist
