// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/abi.hpp>
#include <gasledger/gas_schedule.hpp>
#include <gasledger/storage_layout.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gasledger
{
struct EventParam
{
    std::string type;
    bool indexed = false;
};

struct EventDecl
{
    std::string name;
    std::vector<EventParam> params;
    bool anonymous = false;

    /// "name(type1,type2)", the preimage of topic 0.
    [[nodiscard]] std::string canonical() const;
    [[nodiscard]] size_t indexed_count() const noexcept;
};

/// A LOG instruction carries at most four topics.
inline constexpr size_t max_log_topics = 4;

struct LogShape
{
    size_t topic_count = 0;
    uint64_t data_byte_len = 0;
    friend bool operator==(const LogShape&, const LogShape&) = default;
};

/// The three declarations compared in the event experiment:
/// event_name(uint indexed id, string data) [anonymous] / (uint id, string data).
enum class EventVariant
{
    Indexed,
    NonIndexed,
    AnonymousIndexed,
};

std::string_view to_string(EventVariant v) noexcept;
std::optional<EventVariant> parse_event_variant(std::string_view name) noexcept;

EventDecl declaration_for(EventVariant v);

/// Throws DomainError(TooManyIndexed) when the decl indexes more than 3
/// parameters (4 if anonymous), DomainError(TypeMismatch) when args do not
/// match the declared parameters.
LogShape log_shape(const EventDecl& decl, std::span<const AbiValue> args);

/// log_base + topics * log_topic + data bytes * log_data_byte.
gas_t log_gas(const LogShape& shape, const GasSchedule& sched) noexcept;

/// Storage slot of the per-event id counter; kept apart from the data string.
inline const SlotAddress counter_slot{1};

/// Reading an id counter for the event argument and incrementing it:
/// SLOAD + SLOAD + SSTORE(update) on a slot that is cold at transaction start.
gas_t counter_overhead(Fork fork);

}  // namespace gasledger
