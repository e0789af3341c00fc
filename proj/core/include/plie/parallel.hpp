// Deterministic fork-join helper: contiguous index blocks, merged in worker order.
// All reductions in the library combine per-worker results sequentially, so every
// output is byte-identical regardless of the worker count.
#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace plie {

// Calls fn(begin, end, worker_index) on disjoint contiguous ranges covering [0, n).
// Ranges are assigned in index order: worker w gets the w-th block.
inline void parallel_for(std::int64_t n, int workers,
                         const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
    if (workers < 1) workers = 1;
    if (n <= 0) return;
    std::int64_t w = std::min<std::int64_t>(workers, n);
    if (w == 1) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    std::int64_t chunk = n / w;
    std::int64_t extra = n % w;
    std::int64_t begin = 0;
    for (std::int64_t i = 0; i < w; ++i) {
        std::int64_t end = begin + chunk + (i < extra ? 1 : 0);
        threads.emplace_back(fn, begin, end, static_cast<int>(i));
        begin = end;
    }
    for (auto& t : threads) t.join();
}

}  // namespace plie
