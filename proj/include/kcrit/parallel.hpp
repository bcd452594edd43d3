#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kcrit {

inline auto thread_setting() -> std::atomic<int> &
{
    static std::atomic<int> threads{0};
    return threads;
}

/// Worker cap; 0 (the default) means one per available core.
inline auto set_threads(int n) -> void { thread_setting() = std::max(0, n); }

inline auto worker_count() -> int
{
    int t = thread_setting();
    if (t > 0)
        return t;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls f(i) for every i in [0, count), spread over the workers. The first
/// exception thrown by any task is rethrown after all workers stop.
template <typename F>
auto parallel_for(std::size_t count, F && f) -> void
{
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        while (true) {
            auto i = next++;
            if (i >= count)
                return;
            try {
                f(i);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(body);
    body();
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}
