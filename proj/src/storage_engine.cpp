// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>
#include <gasledger/storage_engine.hpp>

namespace gasledger
{
std::string_view to_string(WriteClass c) noexcept
{
    switch (c)
    {
    case WriteClass::Initialize:
        return "initialize";
    case WriteClass::Update:
        return "update";
    case WriteClass::NoOp:
        return "no-op";
    case WriteClass::Clear:
        return "clear";
    }
    return "unknown";
}

WriteClass SlotWrite::classify() const
{
    if (same_value && old_state != new_state)
        throw DomainError{ErrorCode::InvalidArgument, "same-value write with differing zero-ness"};
    if (same_value || (old_state == SlotState::Zero && new_state == SlotState::Zero))
        return WriteClass::NoOp;
    if (old_state == SlotState::Zero)
        return WriteClass::Initialize;
    if (new_state == SlotState::Zero)
        return WriteClass::Clear;
    return WriteClass::Update;
}

gas_t charge_sload(const SlotAddress& slot, AccessSet& access, Fork fork)
{
    const auto& sched = schedule_for(fork);
    if (fork == Fork::PreBerlin)
        return *sched.sload_flat;
    return access.touch(slot) ? *sched.cold_sload : *sched.warm_access;
}

GasReceipt charge_sstore(const SlotWrite& write, AccessSet& access, Fork fork)
{
    const auto& sched = schedule_for(fork);
    const auto cls = write.classify();

    GasReceipt r;
    if (cls == WriteClass::Clear)
        r.refund_accrued = sched.refund_clear;

    if (fork == Fork::PreBerlin)
    {
        switch (cls)
        {
        case WriteClass::Initialize:
            r.gas_charged = sched.sstore_set;
            break;
        case WriteClass::Update:
        case WriteClass::Clear:
            r.gas_charged = sched.sstore_reset;
            break;
        case WriteClass::NoOp:
            r.gas_charged = *sched.sload_flat;
            break;
        }
        return r;
    }

    const auto cold_sload = *sched.cold_sload;
    const gas_t cold_surcharge = access.touch(write.slot) ? cold_sload : 0;
    switch (cls)
    {
    case WriteClass::Initialize:
        r.gas_charged = sched.sstore_set;
        break;
    case WriteClass::Update:
    case WriteClass::Clear:
        r.gas_charged = sched.sstore_reset - cold_sload;
        break;
    case WriteClass::NoOp:
        r.gas_charged = *sched.warm_access;
        break;
    }
    r.gas_charged += cold_surcharge;
    return r;
}

}  // namespace gasledger
