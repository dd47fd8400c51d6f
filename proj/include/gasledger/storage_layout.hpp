// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/bytes.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace gasledger
{
/// Key of a 256-bit contract storage cell.
struct SlotAddress
{
    uint256 value;

    friend bool operator==(const SlotAddress&, const SlotAddress&) = default;
    friend bool operator<(const SlotAddress& a, const SlotAddress& b) noexcept { return a.value < b.value; }

    /// Wrapping offset, used to walk the contiguous data area.
    [[nodiscard]] SlotAddress offset(uint64_t i) const noexcept { return {value + i}; }

    /// 0x-prefixed, 64 hex digits.
    [[nodiscard]] std::string hex() const;
};

/// Values of up to this many bytes share one slot with their length.
inline constexpr uint64_t max_in_place_length = 31;

/// Slots touched when a dynamic string/bytes value is stored at position p.
struct StorageLayoutPlan
{
    SlotAddress base_slot;
    bool in_place = false;
    SlotAddress length_slot;  ///< Always base_slot; for in-place values it also holds the data.
    std::vector<SlotAddress> data_slots;
    uint64_t byte_length = 0;

    /// Distinct slots written by a full store of the value.
    [[nodiscard]] size_t touched_slot_count() const noexcept { return data_slots.size() + 1; }
};

/// ceil(byte_length / 32)
constexpr uint64_t data_slot_count(uint64_t byte_length) noexcept
{
    return (byte_length + 31) / 32;
}

/// keccak256 of the 32-byte big-endian encoding of p.
SlotAddress data_area_start(SlotAddress base_slot) noexcept;

StorageLayoutPlan layout_dynamic(SlotAddress base_slot, uint64_t byte_length);

}  // namespace gasledger
