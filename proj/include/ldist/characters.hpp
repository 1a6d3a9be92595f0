#pragma once

#include <cstdint>
#include <vector>

#include "ldist/common.hpp"

namespace ldist {

// Kronecker symbol (d/n), the completely multiplicative extension of the
// Legendre symbol with the usual 2-adic and sign conventions.
int kronecker(std::int64_t d, std::int64_t n);

// Full character group of the prime modulus q: chi_j(g^k) = exp(2 pi i jk/(q-1))
// for the smallest primitive root g. j = 0 is the principal character.
struct character_table {
    std::int64_t modulus = 0;
    std::int64_t generator = 0;
    std::vector<std::int32_t> dlog;  // dlog[a] for 0 <= a < q; dlog[0] = -1
    std::vector<cplx> roots;         // roots[k] = exp(2 pi i k/(q-1))
    cplx chi(std::int64_t j, std::int64_t a) const;
};
character_table build_character_table(std::int64_t q);

bool is_fundamental_discriminant(std::int64_t d);

// All fundamental discriminants with |D| <= bound (D = 1 excluded), sorted by
// |D| with the positive one first on ties.
struct discriminant_set {
    std::int64_t bound = 0;
    std::vector<std::int64_t> discriminants;
    std::vector<std::int8_t> dagger_flags;  // filled by the positivity screen
};
discriminant_set enumerate_fundamental_discriminants(std::int64_t bound);

// sum over the set of kronecker(D, n).
std::int64_t f_y_sum(std::int64_t n, const discriminant_set& ds);

} // namespace ldist
