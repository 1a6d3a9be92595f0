#include "ldist/summation.hpp"

#include <atomic>
#include <thread>

namespace ldist {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) {
    if (n < 0)
        throw validation_error("thread count must be >= 0");
    g_max_threads.store(n);
}

int max_threads() {
    int n = g_max_threads.load();
    if (n == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        n = hc == 0 ? 1 : static_cast<int>(hc);
    }
    return n;
}

namespace detail {

void run_blocks(std::int64_t n_blocks, const std::function<void(std::int64_t)>& fn) {
    const int workers = std::min<std::int64_t>(max_threads(), n_blocks);
    if (workers <= 1) {
        for (std::int64_t b = 0; b < n_blocks; ++b)
            fn(b);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::int64_t b = next.fetch_add(1);
                if (b >= n_blocks)
                    return;
                fn(b);
            }
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace detail
} // namespace ldist
