// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>
#include <gasledger/storage_engine.hpp>

#include <gtest/gtest.h>

using namespace gasledger;

namespace
{
const SlotAddress slot_a{42};
const SlotAddress slot_b{43};

gas_t sstore_gas(const SlotWrite& w, Fork fork, bool warm)
{
    AccessSet access;
    if (warm)
        access.touch(w.slot);
    return charge_sstore(w, access, fork).gas_charged;
}
}  // namespace

TEST(charge_sload, berlin_cold_then_warm)
{
    AccessSet access;
    EXPECT_EQ(charge_sload(slot_a, access, Fork::Berlin), 2100u);
    EXPECT_EQ(charge_sload(slot_a, access, Fork::Berlin), 100u);
}

TEST(charge_sload, pre_berlin_flat)
{
    AccessSet access;
    EXPECT_EQ(charge_sload(slot_a, access, Fork::PreBerlin), 800u);
    EXPECT_EQ(charge_sload(slot_a, access, Fork::PreBerlin), 800u);
}

TEST(charge_sload, distinct_slots_independent)
{
    AccessSet access;
    EXPECT_EQ(charge_sload(slot_a, access, Fork::Berlin), 2100u);
    EXPECT_EQ(charge_sload(slot_b, access, Fork::Berlin), 2100u);
    EXPECT_EQ(access.size(), 2u);
}

TEST(charge_sstore, berlin_bullets)
{
    EXPECT_EQ(sstore_gas(SlotWrite::initialize(slot_a), Fork::Berlin, false), 22100u);
    EXPECT_EQ(sstore_gas(SlotWrite::initialize(slot_a), Fork::Berlin, true), 20000u);
    EXPECT_EQ(sstore_gas(SlotWrite::update(slot_a), Fork::Berlin, false), 5000u);
    EXPECT_EQ(sstore_gas(SlotWrite::update(slot_a), Fork::Berlin, true), 2900u);
    EXPECT_EQ(sstore_gas(SlotWrite::noop(slot_a), Fork::Berlin, false), 2200u);
    EXPECT_EQ(sstore_gas(SlotWrite::noop(slot_a), Fork::Berlin, true), 100u);
}

TEST(charge_sstore, pre_berlin)
{
    for (const bool warm : {false, true})
    {
        EXPECT_EQ(sstore_gas(SlotWrite::initialize(slot_a), Fork::PreBerlin, warm), 20000u);
        EXPECT_EQ(sstore_gas(SlotWrite::update(slot_a), Fork::PreBerlin, warm), 5000u);
        EXPECT_EQ(sstore_gas(SlotWrite::noop(slot_a), Fork::PreBerlin, warm), 800u);
        EXPECT_EQ(sstore_gas(SlotWrite::clear(slot_a), Fork::PreBerlin, warm), 5000u);
    }
}

TEST(charge_sstore, clear_accrues_refund)
{
    for (const auto fork : all_forks)
    {
        AccessSet access;
        const auto r = charge_sstore(SlotWrite::clear(slot_a), access, fork);
        EXPECT_EQ(r.refund_accrued, 15000u);
        EXPECT_EQ(r.gas_charged, 5000u);  // cold on Berlin: 2100 + 2900
    }
}

TEST(charge_sstore, refund_only_on_clear)
{
    for (const auto fork : all_forks)
        for (const auto& w : {SlotWrite::initialize(slot_a), SlotWrite::update(slot_a), SlotWrite::noop(slot_a),
                 SlotWrite{slot_a, SlotState::Zero, SlotState::Zero, false}})
        {
            AccessSet access;
            EXPECT_EQ(charge_sstore(w, access, fork).refund_accrued, 0u);
        }
}

TEST(charge_sstore, warm_never_exceeds_cold)
{
    for (const auto& w : {SlotWrite::initialize(slot_a), SlotWrite::update(slot_a), SlotWrite::noop(slot_a),
             SlotWrite::clear(slot_a)})
        EXPECT_LE(sstore_gas(w, Fork::Berlin, true), sstore_gas(w, Fork::Berlin, false)) << to_string(w.classify());
}

TEST(charge_sstore, fork_delta_on_initialize)
{
    for (uint64_t s = 0; s < 100; ++s)
    {
        const auto w = SlotWrite::initialize(SlotAddress{s});
        EXPECT_EQ(sstore_gas(w, Fork::Berlin, false) - sstore_gas(w, Fork::PreBerlin, false), 2100u);
    }
}

TEST(charge_sstore, access_set_idempotent)
{
    AccessSet access;
    charge_sstore(SlotWrite::update(slot_a), access, Fork::Berlin);
    EXPECT_EQ(access.size(), 1u);
    charge_sstore(SlotWrite::update(slot_a), access, Fork::Berlin);
    charge_sload(slot_a, access, Fork::Berlin);
    EXPECT_EQ(access.size(), 1u);
    EXPECT_TRUE(access.contains(slot_a));
}

TEST(charge_sstore, sload_warms_for_sstore)
{
    AccessSet access;
    charge_sload(slot_a, access, Fork::Berlin);
    EXPECT_EQ(charge_sstore(SlotWrite::update(slot_a), access, Fork::Berlin).gas_charged, 2900u);
}

TEST(slot_write, classify)
{
    EXPECT_EQ(SlotWrite::initialize(slot_a).classify(), WriteClass::Initialize);
    EXPECT_EQ(SlotWrite::update(slot_a).classify(), WriteClass::Update);
    EXPECT_EQ(SlotWrite::noop(slot_a).classify(), WriteClass::NoOp);
    EXPECT_EQ(SlotWrite::clear(slot_a).classify(), WriteClass::Clear);
    EXPECT_EQ((SlotWrite{slot_a, SlotState::Zero, SlotState::Zero, false}).classify(), WriteClass::NoOp);
    EXPECT_THROW(static_cast<void>((SlotWrite{slot_a, SlotState::Zero, SlotState::NonZero, true}).classify()), DomainError);
}
