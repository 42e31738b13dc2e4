#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace coev {

/// 0 means "use hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [begin, end) into at most `threads` contiguous chunks and runs
/// fn(chunk_index, chunk_begin, chunk_end) on each, in parallel.
///
/// Chunk boundaries depend only on the range and thread count, and callers
/// merge per-chunk results by chunk index, so output is identical for every
/// thread count (each chunk covers an ascending contiguous sub-range).
template <typename Fn>
void for_each_chunk(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn&& fn) {
    if (begin >= end) return;
    const std::uint64_t total = end - begin;
    unsigned n_chunks = resolve_threads(threads);
    if (static_cast<std::uint64_t>(n_chunks) > total) n_chunks = static_cast<unsigned>(total);

    if (n_chunks <= 1) {
        fn(0u, begin, end);
        return;
    }

    std::vector<std::thread> workers;
    workers.reserve(n_chunks);
    const std::uint64_t base = total / n_chunks;
    const std::uint64_t rem = total % n_chunks;
    std::uint64_t lo = begin;
    for (unsigned c = 0; c < n_chunks; ++c) {
        const std::uint64_t len = base + (c < rem ? 1 : 0);
        const std::uint64_t hi = lo + len;
        workers.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
        lo = hi;
    }
    for (auto& w : workers) w.join();
}

}  // namespace coev
