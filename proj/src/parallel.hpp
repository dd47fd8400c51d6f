// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace gasledger::detail
{
/// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads. Callers
/// write results into per-index slots, so output never depends on scheduling.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn, size_t min_per_thread = 64)
{
    const size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t threads = std::min(hw, (n + min_per_thread - 1) / min_per_thread);
    if (threads <= 1)
    {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t)
        pool.emplace_back([&fn, n, threads, t] {
            for (size_t i = t; i < n; i += threads)
                fn(i);
        });
}
}  // namespace gasledger::detail
