// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/bytes.hpp>

#include <stdexcept>

namespace gasledger
{
namespace
{
int hex_digit(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(bytes_view data)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (const auto b : data)
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

bytes from_hex(std::string_view hex)
{
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    if (hex.size() % 2 != 0)
        throw std::invalid_argument{"hex string has odd length"};

    bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
    {
        const auto hi = hex_digit(hex[i]);
        const auto lo = hex_digit(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument{"invalid hex character"};
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

hash256 to_be_word(const uint256& v) noexcept
{
    hash256 word{};
    auto x = v;
    for (size_t i = 0; i < word.size(); ++i)
    {
        word[word.size() - 1 - i] = static_cast<uint8_t>(x & 0xff);
        x >>= 8;
    }
    return word;
}

uint256 from_be_word(bytes_view word) noexcept
{
    uint256 v = 0;
    for (const auto b : word)
        v = (v << 8) | b;
    return v;
}

}  // namespace gasledger
