// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>
#include <gasledger/estimators.hpp>
#include <gasledger/storage_engine.hpp>
#include <gasledger/storage_layout.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace gasledger
{
namespace
{
constexpr std::pair<StrategyKind, std::string_view> strategy_names[] = {
    {StrategyKind::ScStoreClean, "sc-store-clean"},
    {StrategyKind::ScGrowDouble, "sc-grow-double"},
    {StrategyKind::ScUpdateSameSize, "sc-update-same-size"},
    {StrategyKind::EventIndexed, "event-indexed"},
    {StrategyKind::EventNonIndexed, "event-non-indexed"},
    {StrategyKind::EventAnonymousIndexed, "event-anonymous-indexed"},
    {StrategyKind::TxPayloadEoaToEoa, "tx-payload-eoa-to-eoa"},
    {StrategyKind::TxPayloadFallback, "tx-payload-fallback"},
    {StrategyKind::UnusedParamPlain, "unused-param-plain"},
    {StrategyKind::UnusedParamWithEvent, "unused-param-with-event"},
    {StrategyKind::HybridSwarm, "hybrid-swarm"},
    {StrategyKind::HybridIpfs, "hybrid-ipfs"},
};

/// The stored string variable lives at slot 0.
const SlotAddress data_slot_base{0};

/// Accumulates itemized charges into an Estimate.
class EstimateBuilder
{
public:
    EstimateBuilder(StrategyKind strategy, Fork fork, uint64_t data_size)
    {
        e_.strategy = strategy;
        e_.fork = fork;
        e_.data_size = data_size;
    }

    void add(std::string_view component, gas_t gas, std::string detail = {})
    {
        e_.breakdown.push_back({std::string{component}, gas, std::move(detail)});
    }

    void add_intrinsic(bytes_view payload)
    {
        const auto stats = payload_stats(payload);
        add(component::intrinsic, intrinsic_gas(stats, schedule_for(e_.fork)),
            std::to_string(stats.size()) + " calldata bytes (" + std::to_string(stats.zero_bytes) + " zero, " +
                std::to_string(stats.nonzero_bytes) + " non-zero)");
    }

    void add_refund(gas_t r) noexcept { e_.refund += r; }

    Estimate finish(const EstimatorOptions& opts, bool executes_code = true)
    {
        if (executes_code)
            add(component::execution_overhead, opts.execution_overhead, "unmodeled; user-calibrated");
        e_.gas_total = 0;
        for (const auto& item : e_.breakdown)
            e_.gas_total += item.gas;
        e_.block_gas_limit = opts.block_gas_limit;
        e_.exceeds_block_limit = e_.gas_total > opts.block_gas_limit;
        return std::move(e_);
    }

private:
    Estimate e_;
};

/// Runs SLOAD/SSTORE charges against one transaction's access set and keeps
/// a per-class tally for the breakdown detail.
class StorageSession
{
public:
    explicit StorageSession(Fork fork) noexcept : fork_{fork} {}

    void sload(const SlotAddress& slot)
    {
        const bool cold = !access_.contains(slot);
        sload_gas_ += charge_sload(slot, access_, fork_);
        ++sload_tally_[tag("sload", cold)];
    }

    void sstore(const SlotWrite& write)
    {
        const bool cold = !access_.contains(write.slot);
        const auto r = charge_sstore(write, access_, fork_);
        sstore_ += r;
        ++sstore_tally_[tag(std::string{to_string(write.classify())}, cold)];
    }

    void emit(EstimateBuilder& b) const
    {
        if (!sload_tally_.empty())
            b.add(component::sload, sload_gas_, describe(sload_tally_));
        if (!sstore_tally_.empty())
            b.add(component::sstore, sstore_.gas_charged, describe(sstore_tally_));
        b.add_refund(sstore_.refund_accrued);
    }

private:
    std::string tag(std::string what, bool cold) const
    {
        if (fork_ == Fork::PreBerlin)
            return what;
        return what + (cold ? " (cold)" : " (warm)");
    }

    static std::string describe(const std::map<std::string, uint64_t>& tally)
    {
        std::string s;
        for (const auto& [what, n] : tally)
        {
            if (!s.empty())
                s += " + ";
            s += std::to_string(n) + " x " + what;
        }
        return s;
    }

    Fork fork_;
    AccessSet access_;
    gas_t sload_gas_ = 0;
    GasReceipt sstore_;
    std::map<std::string, uint64_t> sload_tally_;
    std::map<std::string, uint64_t> sstore_tally_;
};

bytes setter_payload(bytes_view data)
{
    const AbiValue arg = abi::String{{data.begin(), data.end()}};
    return encode_call(contracts::store_setter(), std::span{&arg, 1});
}

/// Zero-based position of the payload's selector in hex-ascending order, if deployed.
std::optional<size_t> match_rank(bytes_view payload, const DispatchConfig& cfg)
{
    auto sorted = cfg.selectors;
    std::sort(sorted.begin(), sorted.end());
    const Selector wanted{payload[0], payload[1], payload[2], payload[3]};
    const auto it = std::find(sorted.begin(), sorted.end(), wanted);
    if (it == sorted.end())
        return std::nullopt;
    return static_cast<size_t>(it - sorted.begin());
}

std::string dispatch_detail(bytes_view payload, const DispatchConfig& cfg)
{
    if (payload.size() < 4)
        return "payload < 4 bytes, jump to fallback";
    if (const auto rank = match_rank(payload, cfg))
        return "selector matched after " + std::to_string(*rank + 1) + " comparison(s); modeled";
    return "no selector matched after " + std::to_string(cfg.selectors.size()) + " comparisons, fallback";
}
}  // namespace

std::string_view to_string(StrategyKind s) noexcept
{
    for (const auto& [kind, name] : strategy_names)
        if (kind == s)
            return name;
    return "";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) noexcept
{
    for (const auto& [kind, n] : strategy_names)
        if (n == name)
            return kind;
    return std::nullopt;
}

bool is_hybrid(StrategyKind s) noexcept
{
    return s == StrategyKind::HybridSwarm || s == StrategyKind::HybridIpfs;
}

gas_t Estimate::component_gas(std::string_view key) const noexcept
{
    gas_t sum = 0;
    for (const auto& item : breakdown)
        if (item.component == key)
            sum += item.gas;
    return sum;
}

gas_t Estimate::net_gas() const noexcept
{
    return gas_total - std::min(refund, gas_total / refund_cap_divisor);
}

void DispatchConfig::validate() const
{
    const std::set<Selector> unique(selectors.begin(), selectors.end());
    if (unique.size() != selectors.size())
        throw DomainError{ErrorCode::InvalidArgument, "dispatch selectors must be distinct"};
}

namespace contracts
{
FunctionSignature store_setter()
{
    return {"store", {"string"}};
}

FunctionSignature event_emitter()
{
    return {"logData", {"string"}};
}

DispatchConfig fallback_contract()
{
    return {
        .selectors = {selector({"store", {"string"}}), selector({"reset", {}}), selector({"data", {}})},
        .has_fallback = true,
    };
}

DispatchConfig single_function(const FunctionSignature& sig)
{
    return {.selectors = {selector(sig)}, .has_fallback = false};
}

FunctionSignature unused_param_function(std::span<const AbiValue> args)
{
    FunctionSignature sig{"storeUnused", {}};
    for (const auto& a : args)
        sig.param_types.emplace_back(abi::type_name(type_of(a)));
    return sig;
}

EventDecl unused_param_event()
{
    return {.name = "Stored", .params = {{"uint256", true}}, .anonymous = false};
}
}  // namespace contracts

gas_t dispatch_cost(bytes_view payload, const DispatchConfig& cfg)
{
    cfg.validate();
    constexpr auto& costs = dispatch_costs;
    if (payload.size() < 4)
    {
        if (!cfg.has_fallback)
            throw DomainError{ErrorCode::NoDispatchTarget, "short payload and no fallback function"};
        return costs.short_payload_check;
    }

    const gas_t prelude = costs.short_payload_check + costs.selector_load;
    if (const auto rank = match_rank(payload, cfg))
        return prelude + costs.compare_block * (*rank + 1);

    if (!cfg.has_fallback)
        throw DomainError{ErrorCode::NoDispatchTarget, "no selector matched and no fallback function"};
    return prelude + costs.compare_block * cfg.selectors.size() + costs.fallback_jump;
}

Estimate estimate_sc_store(bytes_view data, Fork fork, const EstimatorOptions& opts)
{
    EstimateBuilder b{StrategyKind::ScStoreClean, fork, data.size()};
    b.add_intrinsic(setter_payload(data));

    const auto plan = layout_dynamic(data_slot_base, data.size());
    StorageSession storage{fork};
    // An empty string leaves the reset slot at zero.
    const auto length_state = data.empty() ? SlotState::Zero : SlotState::NonZero;
    storage.sstore({plan.length_slot, SlotState::Zero, length_state, data.empty()});
    for (const auto& slot : plan.data_slots)
        storage.sstore(SlotWrite::initialize(slot));
    storage.emit(b);

    return b.finish(opts);
}

Estimate estimate_sc_update(bytes_view data, Fork fork, const EstimatorOptions& opts)
{
    EstimateBuilder b{StrategyKind::ScUpdateSameSize, fork, data.size()};
    b.add_intrinsic(setter_payload(data));

    const auto plan = layout_dynamic(data_slot_base, data.size());
    StorageSession storage{fork};
    storage.sload(plan.length_slot);
    storage.sload(plan.length_slot);
    if (plan.in_place)
    {
        // Data shares the length slot, which the reads above have warmed.
        storage.sstore(SlotWrite::update(plan.length_slot));
    }
    else
    {
        // Same length: the length slot is left untouched.
        for (const auto& slot : plan.data_slots)
            storage.sstore(SlotWrite::update(slot));
    }
    storage.emit(b);

    return b.finish(opts);
}

Estimate estimate_sc_grow(uint64_t old_size, bytes_view new_data, Fork fork, const EstimatorOptions& opts)
{
    if (new_data.size() <= old_size)
        throw DomainError{ErrorCode::InvalidArgument, "new value must be longer than the stored one"};
    if (old_size == 0)
    {
        auto e = estimate_sc_store(new_data, fork, opts);
        e.strategy = StrategyKind::ScGrowDouble;
        return e;
    }

    EstimateBuilder b{StrategyKind::ScGrowDouble, fork, new_data.size()};
    b.add_intrinsic(setter_payload(new_data));

    const auto old_plan = layout_dynamic(data_slot_base, old_size);
    const auto new_plan = layout_dynamic(data_slot_base, new_data.size());
    StorageSession storage{fork};
    storage.sload(new_plan.length_slot);
    storage.sload(new_plan.length_slot);
    // Data slots previously holding long-string data are overwritten; the rest
    // start from zero. In-place old values occupied only the length slot.
    const auto reused = old_plan.data_slots.size();
    for (size_t i = 0; i < new_plan.data_slots.size(); ++i)
        storage.sstore(i < reused ? SlotWrite::update(new_plan.data_slots[i])
                                  : SlotWrite::initialize(new_plan.data_slots[i]));
    storage.sstore(SlotWrite::update(new_plan.length_slot));
    storage.emit(b);

    return b.finish(opts);
}

Estimate estimate_tx_payload(
    bytes_view data, PayloadTarget target, const DispatchConfig& cfg, Fork fork, const EstimatorOptions& opts)
{
    const bool to_contract = target == PayloadTarget::EoaToContract;
    EstimateBuilder b{to_contract ? StrategyKind::TxPayloadFallback : StrategyKind::TxPayloadEoaToEoa, fork,
        data.size()};
    b.add_intrinsic(data);
    if (!to_contract)
        return b.finish(opts, false);

    b.add(component::dispatch, dispatch_cost(data, cfg), dispatch_detail(data, cfg));
    return b.finish(opts);
}

Estimate estimate_unused_param(
    std::span<const AbiValue> args, bool with_event, const DispatchConfig& cfg, Fork fork, const EstimatorOptions& opts)
{
    const auto sig = contracts::unused_param_function(args);
    const auto payload = encode_call(sig, args);

    uint64_t data_size = 0;
    for (const auto& a : args)
    {
        if (const auto* s = std::get_if<abi::String>(&a))
            data_size += s->value.size();
        else if (const auto* by = std::get_if<abi::Bytes>(&a))
            data_size += by->value.size();
        else
            data_size += 32;
    }

    EstimateBuilder b{with_event ? StrategyKind::UnusedParamWithEvent : StrategyKind::UnusedParamPlain, fork,
        data_size};
    b.add_intrinsic(payload);
    b.add(component::dispatch, dispatch_cost(payload, cfg), dispatch_detail(payload, cfg));
    if (with_event)
    {
        b.add(component::counter, counter_overhead(fork), "id counter: 2 x SLOAD + SSTORE update");
        const AbiValue id = abi::Uint256{1};
        const auto decl = contracts::unused_param_event();
        const auto shape = log_shape(decl, std::span{&id, 1});
        b.add(component::log, log_gas(shape, schedule_for(fork)),
            std::to_string(shape.topic_count) + " topics, " + std::to_string(shape.data_byte_len) + " data bytes");
    }
    return b.finish(opts);
}

Estimate estimate_event(EventVariant variant, bytes_view data, Fork fork, const EstimatorOptions& opts)
{
    const auto kind = variant == EventVariant::Indexed      ? StrategyKind::EventIndexed
                      : variant == EventVariant::NonIndexed ? StrategyKind::EventNonIndexed
                                                            : StrategyKind::EventAnonymousIndexed;
    EstimateBuilder b{kind, fork, data.size()};

    // Each variant is deployed in its own contract with the same single
    // function, so dispatch and calldata are identical across variants.
    const auto fn = contracts::event_emitter();
    const AbiValue arg = abi::String{{data.begin(), data.end()}};
    const auto payload = encode_call(fn, std::span{&arg, 1});
    const auto cfg = contracts::single_function(fn);
    b.add_intrinsic(payload);
    b.add(component::dispatch, dispatch_cost(payload, cfg), dispatch_detail(payload, cfg));
    b.add(component::counter, counter_overhead(fork), "id counter: 2 x SLOAD + SSTORE update");

    const std::vector<AbiValue> event_args{abi::Uint256{1}, arg};
    const auto shape = log_shape(declaration_for(variant), event_args);
    b.add(component::log, log_gas(shape, schedule_for(fork)),
        std::to_string(shape.topic_count) + " topics, " + std::to_string(shape.data_byte_len) + " data bytes");
    return b.finish(opts);
}

std::string_view to_string(HybridPlatform p) noexcept
{
    switch (p)
    {
    case HybridPlatform::Swarm:
        return "swarm";
    case HybridPlatform::SwarmEncrypted:
        return "swarm-encrypted";
    case HybridPlatform::IpfsCidV0:
        return "ipfs-cidv0";
    case HybridPlatform::IpfsCidV1:
        return "ipfs-cidv1";
    }
    return "";
}

std::optional<HybridPlatform> parse_hybrid_platform(std::string_view name) noexcept
{
    for (const auto p :
        {HybridPlatform::Swarm, HybridPlatform::SwarmEncrypted, HybridPlatform::IpfsCidV0, HybridPlatform::IpfsCidV1})
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

std::string_view to_string(AnchorStrategy a) noexcept
{
    return a == AnchorStrategy::ScStorage ? "sc-storage" : "event-log";
}

std::optional<AnchorStrategy> parse_anchor(std::string_view name) noexcept
{
    if (name == "sc-storage")
        return AnchorStrategy::ScStorage;
    if (name == "event-log")
        return AnchorStrategy::EventLog;
    return std::nullopt;
}

Estimate estimate_hybrid(
    bytes_view data, HybridPlatform platform, AnchorStrategy anchor, Fork fork, const EstimatorOptions& opts)
{
    const auto chunker_platform = platform == HybridPlatform::Swarm            ? Platform::Swarm
                                  : platform == HybridPlatform::SwarmEncrypted ? Platform::SwarmEncrypted
                                                                               : Platform::Ipfs;
    const int cid_version = platform == HybridPlatform::IpfsCidV1 ? 1 : 0;
    const auto tree = build_tree(data, chunker_platform, ChunkerConfig::defaults_for(chunker_platform));
    auto identifier = identifier_bytes(tree, cid_version);

    auto e = anchor == AnchorStrategy::ScStorage ? estimate_sc_store(identifier, fork, opts)
                                                 : estimate_event(EventVariant::Indexed, identifier, fork, opts);
    e.strategy = chunker_platform == Platform::Ipfs ? StrategyKind::HybridIpfs : StrategyKind::HybridSwarm;
    e.data_size = data.size();
    e.offchain = OffchainStats{
        .platform = chunker_platform,
        .cid_version = cid_version,
        .chunk_count = tree.chunk_count,
        .node_count = tree.node_count,
        .depth = tree.depth,
        .identifier = std::move(identifier),
    };
    return e;
}

}  // namespace gasledger
