// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>
#include <gasledger/report.hpp>

#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>

namespace gasledger
{
namespace
{
nlohmann::ordered_json estimate_json(const Estimate& e)
{
    nlohmann::ordered_json j;
    j["strategy"] = to_string(e.strategy);
    j["fork"] = to_string(e.fork);
    j["size_bytes"] = e.data_size;
    j["gas_total"] = e.gas_total;
    j["refund"] = e.refund;
    j["net_gas"] = e.net_gas();
    j["block_gas_limit"] = e.block_gas_limit;
    j["exceeds_block_limit"] = e.exceeds_block_limit;
    auto& items = j["breakdown"] = nlohmann::ordered_json::array();
    for (const auto& item : e.breakdown)
        items.push_back({{"component", item.component}, {"gas", item.gas}, {"detail", item.detail}});
    if (e.offchain)
    {
        const auto& o = *e.offchain;
        j["offchain"] = {
            {"platform", to_string(o.platform)},
            {"cid_version", o.cid_version},
            {"chunk_count", o.chunk_count},
            {"node_count", o.node_count},
            {"depth", o.depth},
            {"identifier_hex", to_hex(o.identifier)},
            {"identifier_bytes", o.identifier.size()},
        };
    }
    return j;
}

nlohmann::ordered_json schedule_json(Fork fork)
{
    nlohmann::ordered_json j;
    for (const auto& [k, v] : to_map(schedule_for(fork)))
        j[k] = v;
    return j;
}
}  // namespace

std::vector<StrategyKind> ComparisonReport::ranking(size_t size_idx) const
{
    std::vector<size_t> idx(strategies.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
        [&](size_t a, size_t b) { return at(a, size_idx).gas_total < at(b, size_idx).gas_total; });
    std::vector<StrategyKind> out;
    for (const auto i : idx)
        out.push_back(strategies[i]);
    return out;
}

Estimate estimate_strategy(StrategyKind strategy, bytes_view data, Fork fork, const CompareOptions& opts)
{
    const auto& eo = opts.estimator;
    switch (strategy)
    {
    case StrategyKind::ScStoreClean:
        return estimate_sc_store(data, fork, eo);
    case StrategyKind::ScGrowDouble:
        return estimate_sc_grow(data.size() / 2, data, fork, eo);
    case StrategyKind::ScUpdateSameSize:
        return estimate_sc_update(data, fork, eo);
    case StrategyKind::EventIndexed:
        return estimate_event(EventVariant::Indexed, data, fork, eo);
    case StrategyKind::EventNonIndexed:
        return estimate_event(EventVariant::NonIndexed, data, fork, eo);
    case StrategyKind::EventAnonymousIndexed:
        return estimate_event(EventVariant::AnonymousIndexed, data, fork, eo);
    case StrategyKind::TxPayloadEoaToEoa:
        return estimate_tx_payload(data, PayloadTarget::EoaToEoa, contracts::fallback_contract(), fork, eo);
    case StrategyKind::TxPayloadFallback:
        return estimate_tx_payload(data, PayloadTarget::EoaToContract, contracts::fallback_contract(), fork, eo);
    case StrategyKind::UnusedParamPlain:
    case StrategyKind::UnusedParamWithEvent:
    {
        const std::vector<AbiValue> args{abi::String{{data.begin(), data.end()}}};
        const auto cfg = contracts::single_function(contracts::unused_param_function(args));
        return estimate_unused_param(args, strategy == StrategyKind::UnusedParamWithEvent, cfg, fork, eo);
    }
    case StrategyKind::HybridSwarm:
        return estimate_hybrid(data, opts.swarm_encrypted ? HybridPlatform::SwarmEncrypted : HybridPlatform::Swarm,
            opts.hybrid_anchor, fork, eo);
    case StrategyKind::HybridIpfs:
        return estimate_hybrid(data, opts.cid_version == 1 ? HybridPlatform::IpfsCidV1 : HybridPlatform::IpfsCidV0,
            opts.hybrid_anchor, fork, eo);
    }
    throw DomainError{ErrorCode::InvalidArgument, "unknown strategy"};
}

ComparisonReport compare(
    std::span<const uint64_t> sizes, std::span<const StrategyKind> strategies, Fork fork, const CompareOptions& opts)
{
    ComparisonReport report;
    report.fork = fork;
    const std::set<uint64_t> unique_sizes(sizes.begin(), sizes.end());
    if (unique_sizes.contains(0))
        throw DomainError{ErrorCode::InvalidArgument, "comparison sizes must be at least 1 byte"};
    report.sizes.assign(unique_sizes.begin(), unique_sizes.end());
    for (const auto s : all_strategies)
        if (std::find(strategies.begin(), strategies.end(), s) != strategies.end())
            report.strategies.push_back(s);

    std::vector<bytes> inputs(report.sizes.size());
    for (size_t i = 0; i < inputs.size(); ++i)
        inputs[i] = synthesize_input(report.sizes[i], opts.fill);

    report.cells.resize(report.strategies.size() * report.sizes.size());
    std::vector<std::exception_ptr> errors(report.cells.size());
    detail::parallel_for(
        report.cells.size(),
        [&](size_t c) {
            const auto s = c / report.sizes.size();
            const auto i = c % report.sizes.size();
            try
            {
                report.cells[c] = estimate_strategy(report.strategies[s], inputs[i], fork, opts);
            }
            catch (...)
            {
                errors[c] = std::current_exception();
            }
        },
        1);
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    return report;
}

void write_csv(std::ostream& out, std::span<const Estimate> estimates)
{
    out << "strategy,fork,size_bytes,gas_total,refund,exceeds_block_limit\n";
    for (const auto& e : estimates)
    {
        out << to_string(e.strategy) << ',' << to_string(e.fork) << ',' << e.data_size << ',' << e.gas_total << ','
            << e.refund << ',' << (e.exceeds_block_limit ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream& out, std::span<const Estimate> estimates, Fork fork)
{
    nlohmann::ordered_json j;
    j["schedule"] = schedule_json(fork);
    auto& arr = j["estimates"] = nlohmann::ordered_json::array();
    for (const auto& e : estimates)
        arr.push_back(estimate_json(e));
    out << j.dump(2) << '\n';
}

void write_json(std::ostream& out, const ComparisonReport& report)
{
    nlohmann::ordered_json j;
    j["fork"] = to_string(report.fork);
    j["schedule"] = schedule_json(report.fork);
    j["sizes"] = report.sizes;
    auto& arr = j["estimates"] = nlohmann::ordered_json::array();
    for (const auto& e : report.cells)
        arr.push_back(estimate_json(e));
    auto& ranks = j["rankings"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < report.sizes.size(); ++i)
    {
        auto order = nlohmann::ordered_json::array();
        for (const auto s : report.ranking(i))
            order.push_back(to_string(s));
        ranks.push_back({{"size_bytes", report.sizes[i]}, {"order", order}});
    }
    out << j.dump(2) << '\n';
}

void write_table(std::ostream& out, std::span<const Estimate> estimates, bool with_net)
{
    out << std::left << std::setw(26) << "strategy" << std::setw(12) << "fork" << std::right << std::setw(10)
        << "size" << std::setw(12) << "gas" << std::setw(10) << "refund";
    if (with_net)
        out << std::setw(12) << "net";
    out << "  block\n";
    for (const auto& e : estimates)
    {
        out << std::left << std::setw(26) << to_string(e.strategy) << std::setw(12) << to_string(e.fork)
            << std::right << std::setw(10) << e.data_size << std::setw(12) << e.gas_total << std::setw(10)
            << e.refund;
        if (with_net)
            out << std::setw(12) << e.net_gas();
        out << "  " << (e.exceeds_block_limit ? "EXCEEDS" : "ok") << '\n';
        for (const auto& item : e.breakdown)
        {
            out << "    " << std::left << std::setw(20) << item.component << std::right << std::setw(12)
                << item.gas;
            if (!item.detail.empty())
                out << "  " << item.detail;
            out << '\n';
        }
        if (e.offchain)
        {
            const auto& o = *e.offchain;
            out << "    off-chain: " << to_string(o.platform) << ", " << o.chunk_count << " chunks, " << o.node_count
                << " nodes, depth " << o.depth << ", identifier " << o.identifier.size() << " bytes\n";
        }
    }
}

}  // namespace gasledger
