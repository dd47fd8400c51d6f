// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>
#include <gasledger/log_cost.hpp>
#include <gasledger/storage_engine.hpp>

#include <algorithm>

namespace gasledger
{
std::string EventDecl::canonical() const
{
    std::string s = name + "(";
    for (size_t i = 0; i < params.size(); ++i)
    {
        if (i != 0)
            s += ',';
        s += abi::type_name(abi::parse_type(params[i].type));
    }
    return s + ")";
}

size_t EventDecl::indexed_count() const noexcept
{
    return static_cast<size_t>(std::count_if(params.begin(), params.end(), [](const auto& p) { return p.indexed; }));
}

std::string_view to_string(EventVariant v) noexcept
{
    switch (v)
    {
    case EventVariant::Indexed:
        return "indexed";
    case EventVariant::NonIndexed:
        return "non-indexed";
    case EventVariant::AnonymousIndexed:
        return "anonymous-indexed";
    }
    return "";
}

std::optional<EventVariant> parse_event_variant(std::string_view name) noexcept
{
    for (const auto v : {EventVariant::Indexed, EventVariant::NonIndexed, EventVariant::AnonymousIndexed})
        if (to_string(v) == name)
            return v;
    return std::nullopt;
}

EventDecl declaration_for(EventVariant v)
{
    const bool indexed_id = v != EventVariant::NonIndexed;
    return {
        .name = "event_name",
        .params = {{"uint256", indexed_id}, {"string", false}},
        .anonymous = v == EventVariant::AnonymousIndexed,
    };
}

LogShape log_shape(const EventDecl& decl, std::span<const AbiValue> args)
{
    const auto indexed = decl.indexed_count();
    const size_t limit = decl.anonymous ? max_log_topics : max_log_topics - 1;
    if (indexed > limit)
        throw DomainError{ErrorCode::TooManyIndexed,
            decl.name + " indexes " + std::to_string(indexed) + " parameters; limit is " + std::to_string(limit)};
    if (args.size() != decl.params.size())
        throw DomainError{ErrorCode::TypeMismatch, "argument count does not match event " + decl.name};

    std::vector<AbiValue> data_args;
    for (size_t i = 0; i < args.size(); ++i)
    {
        if (abi::parse_type(decl.params[i].type) != type_of(args[i]))
            throw DomainError{ErrorCode::TypeMismatch, "event argument " + std::to_string(i) + " is not " +
                                                           decl.params[i].type};
        if (!decl.params[i].indexed)
            data_args.push_back(args[i]);
    }

    return {
        .topic_count = (decl.anonymous ? 0 : 1) + indexed,
        .data_byte_len = abi_encode(data_args).size(),
    };
}

gas_t log_gas(const LogShape& shape, const GasSchedule& sched) noexcept
{
    return sched.log_base + shape.topic_count * sched.log_topic + shape.data_byte_len * sched.log_data_byte;
}

gas_t counter_overhead(Fork fork)
{
    AccessSet access;
    const auto read_for_event = charge_sload(counter_slot, access, fork);
    const auto read_for_increment = charge_sload(counter_slot, access, fork);
    const auto write = charge_sstore(SlotWrite::update(counter_slot), access, fork);
    return read_for_event + read_for_increment + write.gas_charged;
}

}  // namespace gasledger
