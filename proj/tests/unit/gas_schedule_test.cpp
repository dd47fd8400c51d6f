// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/gas_schedule.hpp>

#include <gtest/gtest.h>

using namespace gasledger;

TEST(gas_schedule, pre_berlin)
{
    const auto& s = schedule_for(Fork::PreBerlin);
    EXPECT_EQ(s.fork, Fork::PreBerlin);
    EXPECT_EQ(s.sload_flat, 800u);
    EXPECT_FALSE(s.cold_sload);
    EXPECT_FALSE(s.warm_access);
}

TEST(gas_schedule, berlin)
{
    const auto& s = schedule_for(Fork::Berlin);
    EXPECT_EQ(s.cold_sload, 2100u);
    EXPECT_EQ(s.warm_access, 100u);
    EXPECT_FALSE(s.sload_flat);
}

TEST(gas_schedule, shared_constants)
{
    for (const auto fork : all_forks)
    {
        const auto& s = schedule_for(fork);
        EXPECT_EQ(s.tx_base, 21000u);
        EXPECT_EQ(s.calldata_zero_byte, 4u);
        EXPECT_EQ(s.calldata_nonzero_byte, 16u);
        EXPECT_EQ(s.log_base, 375u);
        EXPECT_EQ(s.log_topic, 375u);
        EXPECT_EQ(s.log_data_byte, 8u);
        EXPECT_EQ(s.sstore_set, 20000u);
        EXPECT_EQ(s.sstore_reset, 5000u);
        EXPECT_EQ(s.refund_clear, 15000u);
    }
}

TEST(gas_schedule, deterministic)
{
    for (const auto fork : all_forks)
    {
        const auto a = schedule_for(fork);
        const auto b = schedule_for(fork);
        EXPECT_EQ(a, b);
    }
}

TEST(gas_schedule, berlin_update_identity)
{
    const auto& s = schedule_for(Fork::Berlin);
    EXPECT_EQ(*s.cold_sload + (s.sstore_reset - *s.cold_sload), s.sstore_reset);
    EXPECT_EQ(s.sstore_reset, 5000u);
}

TEST(gas_schedule, export_map)
{
    const auto pre = to_map(schedule_for(Fork::PreBerlin));
    EXPECT_EQ(pre.at("sload_flat"), 800u);
    EXPECT_FALSE(pre.contains("cold_sload"));
    const auto berlin = to_map(schedule_for(Fork::Berlin));
    EXPECT_EQ(berlin.at("cold_sload"), 2100u);
    EXPECT_EQ(berlin.at("warm_access"), 100u);
    EXPECT_FALSE(berlin.contains("sload_flat"));
    EXPECT_EQ(berlin.at("tx_base"), 21000u);
}

TEST(gas_schedule, fork_names)
{
    for (const auto fork : all_forks)
        EXPECT_EQ(parse_fork(to_string(fork)), fork);
    EXPECT_FALSE(parse_fork("london"));
}
