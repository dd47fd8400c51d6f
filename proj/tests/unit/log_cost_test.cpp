// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>
#include <gasledger/log_cost.hpp>

#include <gtest/gtest.h>

using namespace gasledger;

namespace
{
std::vector<AbiValue> id_and_data(size_t n)
{
    return {gasledger::abi::Uint256{7}, gasledger::abi::String{std::string(n, 'z')}};
}

ErrorCode code_of(auto&& fn)
{
    try
    {
        fn();
    }
    catch (const DomainError& e)
    {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}
}  // namespace

TEST(log_cost, declarations)
{
    EXPECT_EQ(declaration_for(EventVariant::Indexed).indexed_count(), 1u);
    EXPECT_FALSE(declaration_for(EventVariant::Indexed).anonymous);
    EXPECT_EQ(declaration_for(EventVariant::NonIndexed).indexed_count(), 0u);
    EXPECT_TRUE(declaration_for(EventVariant::AnonymousIndexed).anonymous);
    EXPECT_EQ(declaration_for(EventVariant::Indexed).canonical(), declaration_for(EventVariant::NonIndexed).canonical());
}

TEST(log_cost, shapes)
{
    for (const size_t n : {0u, 1u, 31u, 32u, 33u, 1000u})
    {
        const auto args = id_and_data(n);
        const auto data_words = (n + 31) / 32;
        EXPECT_EQ(log_shape(declaration_for(EventVariant::Indexed), args), (LogShape{2, 64 + 32 * data_words}));
        EXPECT_EQ(log_shape(declaration_for(EventVariant::AnonymousIndexed), args), (LogShape{1, 64 + 32 * data_words}));
        EXPECT_EQ(log_shape(declaration_for(EventVariant::NonIndexed), args), (LogShape{1, 96 + 32 * data_words}));
    }
}

TEST(log_cost, gas_formula)
{
    const auto& s = schedule_for(Fork::Berlin);
    EXPECT_EQ(log_gas({0, 0}, s), 375u);
    EXPECT_EQ(log_gas({4, 100}, s), 375u + 4 * 375 + 800);
}

TEST(log_cost, variant_deltas)
{
    const auto& s = schedule_for(Fork::PreBerlin);
    for (const size_t n : {1u, 100u, 4096u})
    {
        const auto args = id_and_data(n);
        const auto ix = log_gas(log_shape(declaration_for(EventVariant::Indexed), args), s);
        const auto nix = log_gas(log_shape(declaration_for(EventVariant::NonIndexed), args), s);
        const auto anon = log_gas(log_shape(declaration_for(EventVariant::AnonymousIndexed), args), s);
        EXPECT_EQ(ix - anon, 375u);
        EXPECT_EQ(ix - nix, 119u);  // one topic (375) against one head word (256)
    }
}

TEST(log_cost, too_many_indexed)
{
    EventDecl decl{"E", {{"uint256", true}, {"uint256", true}, {"uint256", true}, {"uint256", true}}};
    const std::vector<AbiValue> args(4, gasledger::abi::Uint256{1});
    EXPECT_EQ(code_of([&] { log_shape(decl, args); }), ErrorCode::TooManyIndexed);
    decl.anonymous = true;
    EXPECT_EQ(log_shape(decl, args), (LogShape{4, 0}));
    decl.params.push_back({"uint256", true});
    const std::vector<AbiValue> five(5, gasledger::abi::Uint256{1});
    EXPECT_EQ(code_of([&] { log_shape(decl, five); }), ErrorCode::TooManyIndexed);
}

TEST(log_cost, type_mismatch)
{
    const auto decl = declaration_for(EventVariant::Indexed);
    const std::vector<AbiValue> swapped{gasledger::abi::String{"x"}, gasledger::abi::Uint256{1}};
    EXPECT_EQ(code_of([&] { log_shape(decl, swapped); }), ErrorCode::TypeMismatch);
    const std::vector<AbiValue> one{gasledger::abi::Uint256{1}};
    EXPECT_EQ(code_of([&] { log_shape(decl, one); }), ErrorCode::TypeMismatch);
}

TEST(log_cost, counter_overhead)
{
    EXPECT_EQ(counter_overhead(Fork::PreBerlin), 800u + 800 + 5000);
    EXPECT_EQ(counter_overhead(Fork::Berlin), 2100u + 100 + 2900);
}

TEST(log_cost, variant_names)
{
    for (const auto v : {EventVariant::Indexed, EventVariant::NonIndexed, EventVariant::AnonymousIndexed})
        EXPECT_EQ(parse_event_variant(to_string(v)), v);
    EXPECT_FALSE(parse_event_variant("bogus"));
}
