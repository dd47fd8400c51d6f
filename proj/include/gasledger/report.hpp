// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/estimators.hpp>
#include <gasledger/input.hpp>

#include <iosfwd>
#include <span>
#include <vector>

namespace gasledger
{
struct CompareOptions
{
    EstimatorOptions estimator;
    FillSpec fill;
    AnchorStrategy hybrid_anchor = AnchorStrategy::ScStorage;
    bool swarm_encrypted = false;
    int cid_version = 0;
};

/// Strategy-by-size matrix of estimates over synthesized inputs.
struct ComparisonReport
{
    Fork fork = Fork::PreBerlin;
    std::vector<uint64_t> sizes;          ///< ascending
    std::vector<StrategyKind> strategies;  ///< declaration order
    std::vector<Estimate> cells;           ///< strategy-major

    [[nodiscard]] const Estimate& at(size_t strategy_idx, size_t size_idx) const
    {
        return cells.at(strategy_idx * sizes.size() + size_idx);
    }

    /// Strategies at this size ordered by total gas, cheapest first; ties keep
    /// declaration order.
    [[nodiscard]] std::vector<StrategyKind> ranking(size_t size_idx) const;
};

/// Estimate for one strategy on one input, with the defaults used by compare():
/// grow doubles from half the size, payload targets the three-function
/// fallback contract, unused parameters carry the data as one string.
Estimate estimate_strategy(StrategyKind strategy, bytes_view data, Fork fork, const CompareOptions& opts = {});

/// Cells are evaluated concurrently; output order is fixed. Sizes are sorted
/// and deduplicated, strategies reordered to declaration order.
/// Throws DomainError(InvalidArgument) for a zero size.
ComparisonReport compare(std::span<const uint64_t> sizes, std::span<const StrategyKind> strategies, Fork fork,
    const CompareOptions& opts = {});

/// strategy,fork,size_bytes,gas_total,refund,exceeds_block_limit
void write_csv(std::ostream& out, std::span<const Estimate> estimates);

/// {"schedule": {...}, "estimates": [...], "rankings": [...]}; rankings only for reports.
void write_json(std::ostream& out, std::span<const Estimate> estimates, Fork fork);
void write_json(std::ostream& out, const ComparisonReport& report);

/// Human-readable table. Gas figures are exact; only the hybrid stats are abbreviated.
void write_table(std::ostream& out, std::span<const Estimate> estimates, bool with_net = false);

}  // namespace gasledger
