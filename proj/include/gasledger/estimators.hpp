// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/abi.hpp>
#include <gasledger/content_address.hpp>
#include <gasledger/gas_schedule.hpp>
#include <gasledger/log_cost.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gasledger
{
enum class StrategyKind
{
    ScStoreClean,
    ScGrowDouble,
    ScUpdateSameSize,
    EventIndexed,
    EventNonIndexed,
    EventAnonymousIndexed,
    TxPayloadEoaToEoa,
    TxPayloadFallback,
    UnusedParamPlain,
    UnusedParamWithEvent,
    HybridSwarm,
    HybridIpfs,
};

inline constexpr StrategyKind all_strategies[] = {
    StrategyKind::ScStoreClean,
    StrategyKind::ScGrowDouble,
    StrategyKind::ScUpdateSameSize,
    StrategyKind::EventIndexed,
    StrategyKind::EventNonIndexed,
    StrategyKind::EventAnonymousIndexed,
    StrategyKind::TxPayloadEoaToEoa,
    StrategyKind::TxPayloadFallback,
    StrategyKind::UnusedParamPlain,
    StrategyKind::UnusedParamWithEvent,
    StrategyKind::HybridSwarm,
    StrategyKind::HybridIpfs,
};

/// Kebab-case name, e.g. "sc-store-clean".
std::string_view to_string(StrategyKind s) noexcept;
std::optional<StrategyKind> parse_strategy(std::string_view name) noexcept;
bool is_hybrid(StrategyKind s) noexcept;

/// Breakdown component keys.
namespace component
{
inline constexpr std::string_view intrinsic = "intrinsic";
inline constexpr std::string_view sload = "sload";
inline constexpr std::string_view sstore = "sstore";
inline constexpr std::string_view dispatch = "dispatch";
inline constexpr std::string_view counter = "counter";
inline constexpr std::string_view log = "log";
inline constexpr std::string_view execution_overhead = "execution_overhead";
}  // namespace component

struct BreakdownItem
{
    std::string component;
    gas_t gas = 0;
    std::string detail;
};

/// Off-chain half of a hybrid estimate. Carries no gas.
struct OffchainStats
{
    Platform platform = Platform::Swarm;
    int cid_version = 0;
    uint64_t chunk_count = 0;
    uint64_t node_count = 0;
    uint64_t depth = 0;
    bytes identifier;
};

struct Estimate
{
    StrategyKind strategy = StrategyKind::ScStoreClean;
    Fork fork = Fork::PreBerlin;
    uint64_t data_size = 0;
    gas_t gas_total = 0;
    std::vector<BreakdownItem> breakdown;
    gas_t refund = 0;
    gas_t block_gas_limit = default_block_gas_limit;
    bool exceeds_block_limit = false;
    std::optional<OffchainStats> offchain;

    /// Sum of all breakdown items with this component key.
    [[nodiscard]] gas_t component_gas(std::string_view key) const noexcept;

    /// Charged gas minus refunds, refunds capped at half the charged gas.
    [[nodiscard]] gas_t net_gas() const noexcept;
};

struct EstimatorOptions
{
    gas_t block_gas_limit = default_block_gas_limit;
    /// Setter-body execution not itemized by the model (stack ops, memory,
    /// jumps). Reported as its own component; calibrate per contract.
    gas_t execution_overhead = 0;
};

/// Selectors a contract's dispatcher compares against, plus whether it has a fallback.
struct DispatchConfig
{
    std::vector<Selector> selectors;
    bool has_fallback = false;

    /// Throws DomainError(InvalidArgument) on duplicate selectors.
    void validate() const;
};

/// Signatures of the fixed experiment contracts.
namespace contracts
{
/// Storage contract: public string at slot 0, a setter and a reset.
FunctionSignature store_setter();
/// Event contract: one function that emits the event and bumps the id counter.
FunctionSignature event_emitter();
/// Three-function contract with a fallback, target of payload transactions.
DispatchConfig fallback_contract();
/// A contract exposing just the given function, without a fallback.
DispatchConfig single_function(const FunctionSignature& sig);
/// Function carrying unused parameters of the given argument types.
FunctionSignature unused_param_function(std::span<const AbiValue> args);
/// Event emitted by the unused-parameter function: Stored(uint256 indexed id).
EventDecl unused_param_event();
}  // namespace contracts

/// Solidity dispatcher cost. Short payloads jump straight to the fallback;
/// otherwise the selector is compared in hex-ascending order against the
/// deployed selectors until a match, or all of them on a miss.
/// Throws DomainError(NoDispatchTarget) when nothing matches and there is no fallback.
gas_t dispatch_cost(bytes_view payload, const DispatchConfig& cfg);

/// Storing into a reset (all-zero) string variable.
Estimate estimate_sc_store(bytes_view data, Fork fork, const EstimatorOptions& opts = {});

/// Overwriting a stored value with different content of the same length.
Estimate estimate_sc_update(bytes_view data, Fork fork, const EstimatorOptions& opts = {});

/// Growing a stored value of old_size bytes to new_data. old_size == 0 is a
/// clean store. Throws DomainError(InvalidArgument) unless new_data is longer.
Estimate estimate_sc_grow(uint64_t old_size, bytes_view new_data, Fork fork, const EstimatorOptions& opts = {});

enum class PayloadTarget
{
    EoaToEoa,
    EoaToContract,
};

Estimate estimate_tx_payload(bytes_view data, PayloadTarget target, const DispatchConfig& cfg, Fork fork,
    const EstimatorOptions& opts = {});

/// Throws DomainError(TooManyParameters) above 16 arguments.
Estimate estimate_unused_param(std::span<const AbiValue> args, bool with_event, const DispatchConfig& cfg,
    Fork fork, const EstimatorOptions& opts = {});

Estimate estimate_event(EventVariant variant, bytes_view data, Fork fork, const EstimatorOptions& opts = {});

enum class HybridPlatform
{
    Swarm,
    SwarmEncrypted,
    IpfsCidV0,
    IpfsCidV1,
};

enum class AnchorStrategy
{
    ScStorage,  ///< clean store of the identifier
    EventLog,   ///< indexed event carrying the identifier
};

std::string_view to_string(HybridPlatform p) noexcept;
std::optional<HybridPlatform> parse_hybrid_platform(std::string_view name) noexcept;
std::string_view to_string(AnchorStrategy a) noexcept;
std::optional<AnchorStrategy> parse_anchor(std::string_view name) noexcept;

/// Chunks data with the platform's default chunker and anchors the resulting
/// identifier on-chain.
Estimate estimate_hybrid(bytes_view data, HybridPlatform platform, AnchorStrategy anchor, Fork fork,
    const EstimatorOptions& opts = {});

}  // namespace gasledger
