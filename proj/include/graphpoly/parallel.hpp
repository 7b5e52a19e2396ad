// Minimal helper for splitting a rank range across worker threads.
// Results are merged in worker order, so output never depends on scheduling.
#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace graphpoly {

inline unsigned effective_jobs(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Calls fn(worker, lo, hi) on disjoint ranges covering [0, total).
// Workers run concurrently; the first exception (by worker index) is rethrown.
template <class Fn>
void parallel_rank_ranges(std::uint64_t total, unsigned jobs, Fn&& fn) {
    unsigned workers = effective_jobs(jobs);
    if (total < workers) workers = total > 0 ? static_cast<unsigned>(total) : 1;
    if (workers <= 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::uint64_t chunk = total / workers, rest = total % workers, lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (w < rest ? 1 : 0);
        threads.emplace_back([&, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace graphpoly
