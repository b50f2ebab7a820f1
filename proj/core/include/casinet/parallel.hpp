#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace casinet {

// Runs f(i) for i in [0, n) on up to `threads` workers with a static stride
// partition. Work assignment depends only on (n, threads), and callers store
// results by index, so outputs are identical for every thread count.
template <typename F>
void parallel_for_indexed(int n, int threads, F&& f) {
    if (n <= 0) return;
    const int workers = std::min(threads, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace casinet
