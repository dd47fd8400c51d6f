// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/gas_schedule.hpp>
#include <gasledger/storage_layout.hpp>

#include <set>
#include <string_view>

namespace gasledger
{
/// Storage slots already accessed in the current execution context (EIP-2929).
/// One instance per simulated transaction; it only ever grows.
class AccessSet
{
public:
    [[nodiscard]] bool contains(const SlotAddress& slot) const { return touched_.contains(slot); }
    [[nodiscard]] size_t size() const noexcept { return touched_.size(); }

    /// Marks the slot accessed. Returns true if it was cold.
    bool touch(const SlotAddress& slot) { return touched_.insert(slot).second; }

private:
    std::set<SlotAddress> touched_;
};

enum class SlotState
{
    Zero,
    NonZero,
};

enum class WriteClass
{
    Initialize,  ///< zero -> non-zero
    Update,      ///< non-zero -> different non-zero
    NoOp,        ///< same value written back
    Clear,       ///< non-zero -> zero
};

std::string_view to_string(WriteClass c) noexcept;

struct SlotWrite
{
    SlotAddress slot;
    SlotState old_state = SlotState::Zero;
    SlotState new_state = SlotState::NonZero;
    bool same_value = false;

    /// Throws DomainError(InvalidArgument) if same_value with differing states.
    [[nodiscard]] WriteClass classify() const;

    static SlotWrite initialize(SlotAddress s) { return {s, SlotState::Zero, SlotState::NonZero, false}; }
    static SlotWrite update(SlotAddress s) { return {s, SlotState::NonZero, SlotState::NonZero, false}; }
    static SlotWrite noop(SlotAddress s) { return {s, SlotState::NonZero, SlotState::NonZero, true}; }
    static SlotWrite clear(SlotAddress s) { return {s, SlotState::NonZero, SlotState::Zero, false}; }
};

struct GasReceipt
{
    gas_t gas_charged = 0;
    gas_t refund_accrued = 0;

    GasReceipt& operator+=(const GasReceipt& o) noexcept
    {
        gas_charged += o.gas_charged;
        refund_accrued += o.refund_accrued;
        return *this;
    }
    friend bool operator==(const GasReceipt&, const GasReceipt&) = default;
};

/// SLOAD. PreBerlin: flat rate. Berlin: cold or warm rate, then the slot is warm.
gas_t charge_sload(const SlotAddress& slot, AccessSet& access, Fork fork);

/// SSTORE priced by write class. Refunds are accrued, never netted here.
GasReceipt charge_sstore(const SlotWrite& write, AccessSet& access, Fork fork);

}  // namespace gasledger
