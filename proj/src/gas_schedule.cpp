// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/gas_schedule.hpp>

namespace gasledger
{
namespace
{
constexpr GasSchedule pre_berlin_schedule{
    .fork = Fork::PreBerlin,
    .tx_base = 21000,
    .calldata_zero_byte = 4,
    .calldata_nonzero_byte = 16,
    .log_base = 375,
    .log_topic = 375,
    .log_data_byte = 8,
    .sstore_set = 20000,
    .sstore_reset = 5000,
    .refund_clear = 15000,
    .sload_flat = 800,
    .cold_sload = std::nullopt,
    .warm_access = std::nullopt,
};

constexpr GasSchedule berlin_schedule{
    .fork = Fork::Berlin,
    .tx_base = 21000,
    .calldata_zero_byte = 4,
    .calldata_nonzero_byte = 16,
    .log_base = 375,
    .log_topic = 375,
    .log_data_byte = 8,
    .sstore_set = 20000,
    .sstore_reset = 5000,
    .refund_clear = 15000,
    .sload_flat = std::nullopt,
    .cold_sload = 2100,
    .warm_access = 100,
};
}  // namespace

std::string_view to_string(Fork fork) noexcept
{
    return fork == Fork::Berlin ? "berlin" : "pre-berlin";
}

std::optional<Fork> parse_fork(std::string_view name) noexcept
{
    if (name == "berlin")
        return Fork::Berlin;
    if (name == "pre-berlin")
        return Fork::PreBerlin;
    return std::nullopt;
}

const GasSchedule& schedule_for(Fork fork) noexcept
{
    return fork == Fork::Berlin ? berlin_schedule : pre_berlin_schedule;
}

std::map<std::string, gas_t> to_map(const GasSchedule& sched)
{
    std::map<std::string, gas_t> m{
        {"tx_base", sched.tx_base},
        {"calldata_zero_byte", sched.calldata_zero_byte},
        {"calldata_nonzero_byte", sched.calldata_nonzero_byte},
        {"log_base", sched.log_base},
        {"log_topic", sched.log_topic},
        {"log_data_byte", sched.log_data_byte},
        {"sstore_set", sched.sstore_set},
        {"sstore_reset", sched.sstore_reset},
        {"refund_clear", sched.refund_clear},
    };
    if (sched.sload_flat)
        m.emplace("sload_flat", *sched.sload_flat);
    if (sched.cold_sload)
        m.emplace("cold_sload", *sched.cold_sload);
    if (sched.warm_access)
        m.emplace("warm_access", *sched.warm_access);
    return m;
}

}  // namespace gasledger
