// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gasledger
{
using bytes = std::vector<uint8_t>;
using bytes_view = std::span<const uint8_t>;

/// Unsigned 256-bit integer; arithmetic wraps modulo 2^256.
using uint256 = boost::multiprecision::uint256_t;

/// Gas amounts. Always non-negative in this model.
using gas_t = uint64_t;

using hash256 = std::array<uint8_t, 32>;

/// Lower-case hex without prefix.
std::string to_hex(bytes_view data);

/// Accepts an optional "0x" prefix. Throws std::invalid_argument on odd
/// length or non-hex characters.
bytes from_hex(std::string_view hex);

inline bytes_view as_bytes(std::string_view s) noexcept
{
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

/// 32-byte big-endian word.
hash256 to_be_word(const uint256& v) noexcept;
uint256 from_be_word(bytes_view word) noexcept;

}  // namespace gasledger
