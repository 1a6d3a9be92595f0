#include "ldist/primes.hpp"

#include "ldist/common.hpp"

namespace ldist {

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<std::uint8_t> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i * i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = 1;
    }
    for (std::int64_t i = 2; i <= limit; ++i)
        if (!composite[static_cast<std::size_t>(i)])
            primes.push_back(i);
    return primes;
}

std::vector<std::int32_t> smallest_prime_factor(std::int32_t limit) {
    if (limit < 1)
        throw validation_error("spf table limit must be >= 1");
    std::vector<std::int32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int32_t i = 2; i <= limit; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0)
            continue;
        for (std::int64_t j = i; j <= limit; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = i;
    }
    return spf;
}

std::vector<std::uint8_t> squarefree_mask(std::int64_t limit) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(limit) + 1, 1);
    if (limit >= 0)
        mask[0] = 0;
    for (std::int64_t d = 2; d * d <= limit; ++d) {
        const std::int64_t dd = d * d;
        for (std::int64_t j = dd; j <= limit; j += dd)
            mask[static_cast<std::size_t>(j)] = 0;
    }
    return mask;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n,
                                                    const std::vector<std::int32_t>& spf) {
    if (n < 1 || static_cast<std::size_t>(n) >= spf.size())
        throw validation_error("factorize: n outside spf table");
    std::vector<std::pair<std::int64_t, int>> out;
    while (n > 1) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

} // namespace ldist
