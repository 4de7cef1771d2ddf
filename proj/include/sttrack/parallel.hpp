#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace sttrack {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

/// Runs f(i) for i in [0, n) on up to `threads` workers with a static
/// contiguous partition. Work items must write disjoint outputs; results are
/// then independent of the thread count.
template <class F>
void parallel_for(int n, int threads, F&& f) {
    threads = std::min(resolve_threads(threads), n);
    if (n <= 0) return;
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        int lo = int(int64_t(n) * t / threads);
        int hi = int(int64_t(n) * (t + 1) / threads);
        pool.emplace_back([&, lo, hi, t] {
            try {
                for (int i = lo; i < hi; ++i) f(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace sttrack
