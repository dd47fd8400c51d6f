// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/bytes.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace gasledger
{
enum class Fork
{
    PreBerlin,  ///< Istanbul-era metering: flat 800 gas SLOAD.
    Berlin,     ///< EIP-2929 warm/cold storage access.
};

inline constexpr Fork all_forks[] = {Fork::PreBerlin, Fork::Berlin};

std::string_view to_string(Fork fork) noexcept;

/// Parses "pre-berlin" or "berlin".
std::optional<Fork> parse_fork(std::string_view name) noexcept;

/// Every gas constant the model uses. Fork-specific entries are empty on the
/// fork where they do not apply.
struct GasSchedule
{
    Fork fork;

    gas_t tx_base;
    gas_t calldata_zero_byte;
    gas_t calldata_nonzero_byte;

    gas_t log_base;
    gas_t log_topic;
    gas_t log_data_byte;

    gas_t sstore_set;
    gas_t sstore_reset;
    gas_t refund_clear;

    std::optional<gas_t> sload_flat;   ///< PreBerlin only.
    std::optional<gas_t> cold_sload;   ///< Berlin only.
    std::optional<gas_t> warm_access;  ///< Berlin only.

    bool operator==(const GasSchedule&) const = default;
};

/// Solidity dispatcher charges observed on the bytecode of an unoptimized
/// contract. Identical on both forks.
struct DispatchCosts
{
    gas_t short_payload_check = 65;  ///< callvalue + calldatasize < 4 prelude
    gas_t selector_load = 12;        ///< calldataload + shr
    gas_t compare_block = 22;        ///< dup1 push4 eq push2 jumpi
    gas_t fallback_jump = 10;
};

inline constexpr DispatchCosts dispatch_costs{};

/// Ropsten block gas limit at the time of the measurements.
inline constexpr gas_t default_block_gas_limit = 8'000'000;

/// Net gas may be reduced by refunds up to charged / refund_cap_divisor.
inline constexpr gas_t refund_cap_divisor = 2;

/// Pure lookup into the static per-fork tables.
const GasSchedule& schedule_for(Fork fork) noexcept;

/// Key -> value map of the present constants, for audit output.
std::map<std::string, gas_t> to_map(const GasSchedule& sched);

}  // namespace gasledger
