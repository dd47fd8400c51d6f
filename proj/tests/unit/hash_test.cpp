// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/hash.hpp>

#include "fixture_data.hpp"

#include <gtest/gtest.h>

using namespace gasledger;

TEST(keccak256, reference_vectors)
{
    const auto vectors = test::load_fixture("keccak.json");
    ASSERT_GE(vectors.size(), 5u);
    for (const auto& v : vectors)
    {
        const auto data = test::bytes_of(v);
        EXPECT_EQ(to_hex(keccak256(data)), v["digest"].get<std::string>()) << v.dump();
    }
}

TEST(keccak256, empty_input)
{
    EXPECT_EQ(to_hex(keccak256({})), "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
}

TEST(keccak256, incremental_matches_one_shot)
{
    const auto data = test::pattern("mod251", 1000);
    for (const size_t cut : {0u, 1u, 135u, 136u, 137u, 500u, 999u, 1000u})
    {
        Keccak256 h;
        h.update(bytes_view{data}.first(cut)).update(bytes_view{data}.subspan(cut));
        EXPECT_EQ(h.finalize(), keccak256(data)) << "cut at " << cut;
    }
}

TEST(sha256, known_vectors)
{
    EXPECT_EQ(to_hex(sha256({})), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(to_hex(sha256(as_bytes("abc"))), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(bytes, hex_round_trip)
{
    const auto data = test::pattern("mod251", 77);
    EXPECT_EQ(from_hex(to_hex(data)), data);
    EXPECT_EQ(from_hex("0xA9059cbb"), (bytes{0xa9, 0x05, 0x9c, 0xbb}));
    EXPECT_THROW(from_hex("abc"), std::invalid_argument);
    EXPECT_THROW(from_hex("zz"), std::invalid_argument);
}

TEST(bytes, be_word)
{
    const uint256 v = (uint256{1} << 255) + 0x1234;
    const auto w = to_be_word(v);
    EXPECT_EQ(w[0], 0x80);
    EXPECT_EQ(w[30], 0x12);
    EXPECT_EQ(w[31], 0x34);
    EXPECT_EQ(from_be_word(w), v);
}
