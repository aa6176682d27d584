#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hlab {

/// Evaluates body(c) for every chunk index c in [0, chunks) on up to
/// `workers` threads and returns the results in chunk order. The chunking
/// is chosen by the caller and never depends on `workers`, so any
/// reduction done over the returned vector in order is worker-count
/// independent.
template <class Result, class Body>
auto map_chunks(std::size_t chunks, int workers, Body&& body) -> std::vector<Result>
{
    std::vector<Result> results(chunks);
    const auto threads = static_cast<std::size_t>(std::max(1, workers));
    if (threads == 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            results[c] = body(c);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const auto c = next.fetch_add(1);
            if (c >= chunks)
                return;
            try {
                results[c] = body(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(chunks);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(std::min(threads, chunks));
    for (std::size_t i = 0; i < std::min(threads, chunks); ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace hlab
