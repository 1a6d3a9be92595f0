#include "ldist/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ldist/primes.hpp"

namespace ldist {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw validation_error(what);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

bool is_prime_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_squarefree_trial(std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    int k = (v & 1) ? tab2[a & 7] : 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) k *= tab2[n & 7];
        if (a & n & 2) k = -k;  // reciprocity flip when both are 3 mod 4
        const std::int64_t r = std::llabs(a);
        a = n % r;
        n = r;
    }
    return (n > 1) ? 0 : k;
}

cplx character_table::chi(std::int64_t j, std::int64_t a) const {
    const std::int64_t q = modulus;
    std::int64_t r = a % q;
    if (r < 0) r += q;
    if (r == 0) return {0.0, 0.0};
    const std::int64_t ord = q - 1;
    std::int64_t jj = j % ord;
    if (jj < 0) jj += ord;
    return roots[static_cast<std::size_t>(jj * dlog[static_cast<std::size_t>(r)] % ord)];
}

character_table build_character_table(std::int64_t q) {
    require(q >= 3 && q <= 2000000000, "character table requires prime 3 <= q <= 2e9");
    require(is_prime_trial(q), "character table modulus must be prime");

    character_table tab;
    tab.modulus = q;
    const std::int64_t ord = q - 1;

    std::vector<std::int64_t> prime_factors;
    {
        std::int64_t m = ord;
        for (std::int64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);
    }
    std::int64_t g = 0;
    for (std::int64_t cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (std::int64_t f : prime_factors) {
            if (mod_pow(static_cast<std::uint64_t>(cand),
                        static_cast<std::uint64_t>(ord / f),
                        static_cast<std::uint64_t>(q)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    require(g != 0, "no primitive root found; modulus is not prime");
    tab.generator = g;

    tab.dlog.assign(static_cast<std::size_t>(q), -1);
    std::int64_t cur = 1;
    for (std::int64_t k = 0; k < ord; ++k) {
        tab.dlog[static_cast<std::size_t>(cur)] = static_cast<std::int32_t>(k);
        cur = cur * g % q;
    }
    tab.roots.resize(static_cast<std::size_t>(ord));
    for (std::int64_t k = 0; k < ord; ++k) {
        const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(ord);
        tab.roots[static_cast<std::size_t>(k)] = cplx(std::cos(t), std::sin(t));
    }
    return tab;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    std::int64_t r4 = ((d % 4) + 4) % 4;
    if (r4 == 1) return is_squarefree_trial(std::llabs(d));
    if (r4 != 0) return false;
    const std::int64_t m = d / 4;
    const std::int64_t m4 = ((m % 4) + 4) % 4;
    if (m4 != 2 && m4 != 3) return false;
    return is_squarefree_trial(std::llabs(m));
}

discriminant_set enumerate_fundamental_discriminants(std::int64_t bound) {
    require(bound >= 3, "discriminant enumeration requires bound >= 3");
    discriminant_set ds;
    ds.bound = bound;
    auto sf = squarefree_mask(bound);

    // D odd type: D == 1 mod 4 squarefree (positive D = 4k+1, negative D = -m
    // with m == 3 mod 4).
    for (std::int64_t d = 5; d <= bound; d += 4) {
        if (sf[static_cast<std::size_t>(d)]) ds.discriminants.push_back(d);
    }
    for (std::int64_t m = 3; m <= bound; m += 4) {
        if (sf[static_cast<std::size_t>(m)]) ds.discriminants.push_back(-m);
    }
    // D = 4m with m squarefree, m == 2 or 3 mod 4.
    for (std::int64_t m = 2; 4 * m <= bound; ++m) {
        const std::int64_t m4 = m % 4;
        if ((m4 == 2 || m4 == 3) && sf[static_cast<std::size_t>(m)]) {
            ds.discriminants.push_back(4 * m);
        }
    }
    for (std::int64_t m = 1; 4 * m <= bound; ++m) {
        const std::int64_t m4 = ((-(m % 4)) + 4) % 4;
        if ((m4 == 2 || m4 == 3) && sf[static_cast<std::size_t>(m)]) {
            ds.discriminants.push_back(-4 * m);
        }
    }
    std::sort(ds.discriminants.begin(), ds.discriminants.end(),
              [](std::int64_t a, std::int64_t b) {
                  const std::int64_t aa = std::llabs(a), ab = std::llabs(b);
                  if (aa != ab) return aa < ab;
                  return a > b;
              });
    return ds;
}

std::int64_t f_y_sum(std::int64_t n, const discriminant_set& ds) {
    require(n >= 1, "f_y_sum requires n >= 1");
    std::int64_t s = 0;
    for (std::int64_t d : ds.discriminants) s += kronecker(d, n);
    return s;
}

} // namespace ldist
