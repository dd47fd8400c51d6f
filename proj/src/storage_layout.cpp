// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/hash.hpp>
#include <gasledger/storage_layout.hpp>

namespace gasledger
{
std::string SlotAddress::hex() const
{
    return "0x" + to_hex(to_be_word(value));
}

SlotAddress data_area_start(SlotAddress base_slot) noexcept
{
    const auto key = to_be_word(base_slot.value);
    return {from_be_word(keccak256(key))};
}

StorageLayoutPlan layout_dynamic(SlotAddress base_slot, uint64_t byte_length)
{
    StorageLayoutPlan plan{
        .base_slot = base_slot,
        .in_place = byte_length <= max_in_place_length,
        .length_slot = base_slot,
        .data_slots = {},
        .byte_length = byte_length,
    };
    if (plan.in_place)
        return plan;

    const auto start = data_area_start(base_slot);
    const auto n = data_slot_count(byte_length);
    plan.data_slots.reserve(n);
    for (uint64_t i = 0; i < n; ++i)
        plan.data_slots.push_back(start.offset(i));
    return plan;
}

}  // namespace gasledger
