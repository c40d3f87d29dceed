#ifndef YTAB_PARALLEL_HPP
#define YTAB_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ytab {

inline unsigned worker_count(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("YTAB_WORKERS")) {
        const long cap = std::atol(env);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    if (jobs < n) n = static_cast<unsigned>(jobs);
    return n ? n : 1;
}

// Runs fn(k) for k in [0, jobs) on a small worker pool. fn must only touch
// per-index state; the first exception (lowest index) is rethrown.
inline void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::size_t k = 0; k < jobs; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::pair<std::size_t, std::exception_ptr>> errors(workers,
        {jobs, nullptr});
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= jobs) return;
                try {
                    fn(k);
                } catch (...) {
                    if (k < errors[w].first) errors[w] = {k, std::current_exception()};
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    std::pair<std::size_t, std::exception_ptr> first{jobs, nullptr};
    for (const auto& e : errors)
        if (e.second && e.first < first.first) first = e;
    if (first.second) std::rethrow_exception(first.second);
}

} // namespace ytab

#endif
