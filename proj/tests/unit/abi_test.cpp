// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/abi.hpp>
#include <gasledger/errors.hpp>

#include "fixture_data.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gasledger;

namespace
{
AbiValue value_of(const nlohmann::json& j)
{
    const auto& [type, v] = *j.items().begin();
    if (type == "uint256")
        return gasledger::abi::Uint256{uint256{v.get<std::string>()}};
    if (type == "bool")
        return gasledger::abi::Bool{v.get<bool>()};
    if (type == "string")
        return gasledger::abi::String{v.get<std::string>()};
    if (type == "bytes")
        return gasledger::abi::Bytes{from_hex(v.get<std::string>())};
    gasledger::abi::Address a;
    const auto raw = from_hex(v.get<std::string>());
    std::copy(raw.begin(), raw.end(), a.value.begin());
    return a;
}

std::vector<AbiValue> values_of(const nlohmann::json& arr)
{
    std::vector<AbiValue> out;
    for (const auto& v : arr)
        out.push_back(value_of(v));
    return out;
}

std::vector<gasledger::abi::Type> types_of(std::span<const AbiValue> values)
{
    std::vector<gasledger::abi::Type> out;
    for (const auto& v : values)
        out.push_back(type_of(v));
    return out;
}

uint64_t words(uint64_t n)
{
    return (n + 31) / 32;
}
}  // namespace

TEST(abi, selectors_match_fixture)
{
    for (const auto& v : test::load_fixture("abi.json")["selectors"])
    {
        const auto sig = FunctionSignature::parse(v["signature"].get<std::string>());
        EXPECT_EQ(to_hex(selector(sig)), v["selector"].get<std::string>()) << v["signature"];
    }
}

TEST(abi, encodings_match_fixture)
{
    for (const auto& v : test::load_fixture("abi.json")["encodings"])
    {
        const auto values = values_of(v["values"]);
        const auto enc = abi_encode(values);
        EXPECT_EQ(to_hex(enc), v["encoded"].get<std::string>()) << v["types"];
        EXPECT_EQ(abi_decode(enc, types_of(values)), values);
    }
}

TEST(abi, calls_match_fixture)
{
    for (const auto& v : test::load_fixture("abi.json")["calls"])
    {
        const auto sig = FunctionSignature::parse(v["signature"].get<std::string>());
        EXPECT_EQ(to_hex(encode_call(sig, values_of(v["values"]))), v["encoded"].get<std::string>());
    }
}

TEST(abi, signature_parse_canonicalizes)
{
    const auto sig = FunctionSignature::parse("foo( uint , string )");
    EXPECT_EQ(sig.name, "foo");
    EXPECT_EQ(sig.canonical(), "foo(uint256,string)");
    EXPECT_EQ(FunctionSignature::parse("reset()").param_types.size(), 0u);
    EXPECT_THROW(FunctionSignature::parse("foo(int8)"), DomainError);
    EXPECT_THROW(FunctionSignature::parse("foo"), DomainError);
    EXPECT_THROW(FunctionSignature::parse("(uint256)"), DomainError);
}

TEST(abi, string_length_law)
{
    // One dynamic argument: offset word, length word, ceil(n/32) data words.
    for (uint64_t n = 0; n < 300; ++n)
    {
        const std::vector<AbiValue> v{gasledger::abi::String{std::string(n, 'a')}};
        ASSERT_EQ(abi_encode(v).size(), 64 + 32 * words(n)) << n;
    }
}

TEST(abi, random_round_trip)
{
    std::mt19937_64 rng{2021};
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<AbiValue> values;
        const auto count = rng() % 6;
        uint64_t expected = 0;
        for (size_t i = 0; i < count; ++i)
        {
            switch (rng() % 5)
            {
            case 0:
                values.push_back(gasledger::abi::Uint256{uint256{rng()} << (rng() % 190)});
                expected += 32;
                break;
            case 1:
                values.push_back(gasledger::abi::Bool{(rng() & 1) != 0});
                expected += 32;
                break;
            case 2:
            {
                gasledger::abi::Address a;
                for (auto& b : a.value)
                    b = static_cast<uint8_t>(rng());
                values.push_back(a);
                expected += 32;
                break;
            }
            case 3:
            {
                std::string s(rng() % 100, '\0');
                for (auto& c : s)
                    c = static_cast<char>(rng());
                expected += 64 + 32 * words(s.size());
                values.push_back(gasledger::abi::String{std::move(s)});
                break;
            }
            default:
            {
                bytes b(rng() % 100);
                for (auto& c : b)
                    c = static_cast<uint8_t>(rng());
                expected += 64 + 32 * words(b.size());
                values.push_back(gasledger::abi::Bytes{std::move(b)});
                break;
            }
            }
        }
        const auto enc = abi_encode(values);
        ASSERT_EQ(enc.size(), expected);
        ASSERT_EQ(abi_decode(enc, types_of(values)), values);
    }
}

TEST(abi, decode_rejects_truncated)
{
    const std::vector<AbiValue> v{gasledger::abi::String{"hello"}};
    auto enc = abi_encode(v);
    enc.pop_back();
    const gasledger::abi::Type t[] = {gasledger::abi::Type::String};
    EXPECT_THROW(abi_decode(enc, t), DomainError);
}

TEST(abi, too_many_parameters)
{
    FunctionSignature sig{"f", std::vector<std::string>(17, "uint256")};
    const std::vector<AbiValue> args(17, gasledger::abi::Uint256{1});
    try
    {
        encode_call(sig, args);
        FAIL();
    }
    catch (const DomainError& e)
    {
        EXPECT_EQ(e.code(), ErrorCode::TooManyParameters);
    }

    sig.param_types.resize(16);
    EXPECT_NO_THROW(encode_call(sig, std::span{args}.first(16)));
}

TEST(abi, type_mismatch)
{
    const auto sig = FunctionSignature::parse("store(string)");
    const std::vector<AbiValue> wrong{gasledger::abi::Uint256{1}};
    const std::vector<AbiValue> extra{gasledger::abi::String{"a"}, gasledger::abi::String{"b"}};
    for (const auto& args : {wrong, extra})
    {
        try
        {
            encode_call(sig, args);
            FAIL();
        }
        catch (const DomainError& e)
        {
            EXPECT_EQ(e.code(), ErrorCode::TypeMismatch);
        }
    }
}

TEST(abi, intrinsic_gas_counts_bytes)
{
    const auto& sched = schedule_for(Fork::Berlin);
    EXPECT_EQ(intrinsic_gas({}, sched), 21000u);
    std::mt19937_64 rng{99};
    for (int trial = 0; trial < 100; ++trial)
    {
        bytes p(rng() % 2000);
        uint64_t zeros = 0;
        for (auto& b : p)
        {
            b = (rng() % 3 == 0) ? 0 : static_cast<uint8_t>(1 + rng() % 255);
            zeros += b == 0;
        }
        const auto stats = payload_stats(p);
        ASSERT_EQ(stats.zero_bytes, zeros);
        ASSERT_EQ(stats.size(), p.size());
        for (const auto fork : all_forks)
            ASSERT_EQ(intrinsic_gas(stats, schedule_for(fork)), 21000 + 4 * zeros + 16 * (p.size() - zeros));
    }
}
