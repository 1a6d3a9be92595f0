#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "ldist/common.hpp"

namespace ldist {

// Neumaier variant of Kahan summation: tracks a running compensation term so
// long alternating/cancelling sums keep ~1 ulp accuracy.
class kahan_sum {
  public:
    void add(double v) {
        double t = s_ + v;
        if (std::abs(s_) >= std::abs(v))
            c_ += (s_ - t) + v;
        else
            c_ += (v - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class kahan_sum_cplx {
  public:
    void add(cplx v) {
        re_.add(v.real());
        im_.add(v.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

  private:
    kahan_sum re_, im_;
};

// Global worker count for the blocked reductions. 0 = hardware concurrency.
void set_max_threads(int n);
int max_threads();

// Deterministic parallel reduction: [0, n) is split into fixed-size blocks,
// each block is evaluated independently (any thread, any order), and the
// per-block results are combined strictly in block order. Output is therefore
// identical for every thread count, including 1.
inline constexpr std::int64_t reduce_block_size = 4096;

// block_fn(begin, end) -> T; combine(acc, T).
template <class T, class BlockFn, class Combine>
void blocked_reduce(std::int64_t n, BlockFn&& block_fn, T& acc, Combine&& combine,
                    std::int64_t block = reduce_block_size);

namespace detail {
// Runs fn(block_index) for block_index in [0, n_blocks), possibly on several
// threads. fn must be safe to call concurrently for distinct indices.
void run_blocks(std::int64_t n_blocks, const std::function<void(std::int64_t)>& fn);
} // namespace detail

template <class T, class BlockFn, class Combine>
void blocked_reduce(std::int64_t n, BlockFn&& block_fn, T& acc, Combine&& combine,
                    std::int64_t block) {
    if (n <= 0)
        return;
    const std::int64_t n_blocks = (n + block - 1) / block;
    std::vector<T> partial(static_cast<std::size_t>(n_blocks));
    detail::run_blocks(n_blocks, [&](std::int64_t b) {
        const std::int64_t lo = b * block;
        const std::int64_t hi = std::min(n, lo + block);
        partial[static_cast<std::size_t>(b)] = block_fn(lo, hi);
    });
    for (const T& t : partial)
        combine(acc, t);
}

} // namespace ldist
