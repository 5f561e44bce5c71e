#include "mincode/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace mincode {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
    unsigned n = g_threads.load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

void parallel_blocks(std::size_t total,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (total == 0) return;
    const std::size_t workers = std::min<std::size_t>(thread_count(), total);
    if (workers <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t b = 0; b < workers; ++b) {
        const std::size_t begin = b * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, b, begin, end] { fn(b, begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace mincode
