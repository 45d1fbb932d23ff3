#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace tfrac {

/// Chunked parallel map over [0, count). Each index owns its output slot, so
/// assembly order is deterministic. Exceptions are rethrown on the caller.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    const int workers = std::max(1, std::min<int>(count, std::thread::hardware_concurrency()));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace tfrac
