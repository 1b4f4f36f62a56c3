#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qturan {

inline std::size_t default_jobs()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into fixed-size chunks and hands them to `jobs`
/// workers. Chunk boundaries depend only on `count` and `chunk`, so per-chunk
/// results reduced in chunk order are independent of the worker count.
/// `work(chunk_index, begin, end)` must be safe to call concurrently.
template <class Work>
void parallel_chunks(std::size_t count, std::size_t chunk, std::size_t jobs, Work&& work)
{
    if (count == 0)
        return;
    chunk = std::max<std::size_t>(chunk, 1);
    const std::size_t chunks = (count + chunk - 1) / chunk;
    jobs = std::clamp<std::size_t>(jobs == 0 ? default_jobs() : jobs, 1, chunks);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        while (true) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            try {
                work(c, c * chunk, std::min(count, (c + 1) * chunk));
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
                next = chunks;
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

/// Maps every chunk to a partial result, then folds them left to right.
template <class T, class Map, class Fold>
T parallel_reduce(std::size_t count, std::size_t chunk, std::size_t jobs, T init, Map&& map, Fold&& fold)
{
    const std::size_t chunks = count == 0 ? 0 : (count + std::max<std::size_t>(chunk, 1) - 1) / std::max<std::size_t>(chunk, 1);
    std::vector<T> parts(chunks, init);
    parallel_chunks(count, chunk, jobs,
                    [&](std::size_t c, std::size_t begin, std::size_t end) { parts[c] = map(begin, end); });
    T acc = std::move(init);
    for (auto& p : parts)
        acc = fold(std::move(acc), std::move(p));
    return acc;
}

} // namespace qturan
