// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/bytes.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gasledger
{
enum class FillPattern
{
    Ascii,   ///< printable ASCII, never a zero byte
    Zero,    ///< all 0x00
    Random,  ///< seeded uniform bytes
};

struct FillSpec
{
    FillPattern pattern = FillPattern::Ascii;
    uint64_t seed = 0;

    /// "ascii", "zero" or "random:SEED".
    static std::optional<FillSpec> parse(std::string_view text) noexcept;
    [[nodiscard]] std::string str() const;
};

/// Deterministic synthetic payload. Same (size, fill) always yields the same
/// bytes on every platform: the generator is mt19937_64 and its raw output is
/// mapped without standard-library distributions.
bytes synthesize_input(uint64_t size, const FillSpec& fill);

/// "123", "1b", "12kb", "16mb" (binary multiples, case-insensitive).
std::optional<uint64_t> parse_size(std::string_view text) noexcept;

/// "A..B:N": N sizes equally spaced from A to B inclusive, rounded to whole
/// bytes. A single size is also accepted.
std::optional<std::vector<uint64_t>> parse_size_range(std::string_view text);

}  // namespace gasledger
