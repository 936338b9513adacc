#pragma once

// Deterministic sharded execution. An enumeration space [0, total) is cut
// into a fixed number of contiguous shards that depends only on the space
// size, never on the worker count, so per-shard results merge in shard
// order to the same answer for any number of workers.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fqcensus {

inline constexpr std::uint64_t kMaxShards = 64;

// The shard count for a space of the given size.
inline std::uint64_t planned_shards(std::uint64_t total) {
    return total < kMaxShards ? (total == 0 ? 0 : total) : kMaxShards;
}

// Runs fn(shard_index, begin, end) over all shards of [0, total) using up
// to `jobs` workers (0 = hardware concurrency). fn must only touch state
// owned by its shard index; exceptions propagate to the caller.
template <class Fn>
void parallel_shards(std::uint64_t total, unsigned jobs, Fn&& fn) {
    const std::uint64_t shards = planned_shards(total);
    if (shards == 0) return;
    auto bound = [&](std::uint64_t s) {
        return total / shards * s + std::min<std::uint64_t>(s, total % shards);
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(jobs, shards));

    if (workers <= 1) {
        for (std::uint64_t s = 0; s < shards; ++s) fn(s, bound(s), bound(s + 1));
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::uint64_t s = next.fetch_add(1);
            if (s >= shards) return;
            try {
                fn(s, bound(s), bound(s + 1));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fqcensus
