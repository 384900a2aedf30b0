// parallel.hpp — deterministic column-parallel helper

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ptomo {

inline std::atomic<int>& thread_count_ref() {
    static std::atomic<int> n{1};
    return n;
}
inline void set_thread_count(int n) { thread_count_ref() = n < 1 ? 1 : n; }
inline int thread_count() { return thread_count_ref(); }

// Runs fn(j) for j in [0, count). Each j writes only its own output slot, so
// results are identical for every thread count.
template <typename Fn>
void parallel_columns(int count, const Fn& fn) {
    const int nthreads = std::min(thread_count(), count);
    if (nthreads <= 1) {
        for (int j = 0; j < count; ++j) fn(j);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int j = t; j < count; j += nthreads) fn(j);
            } catch (...) {
                errs[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace ptomo
