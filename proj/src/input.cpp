// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/input.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

namespace gasledger
{
namespace
{
constexpr uint64_t ascii_seed = 0x6761736c65646765;  // "gasledge"

std::optional<uint64_t> parse_uint(std::string_view s) noexcept
{
    uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}
}  // namespace

std::optional<FillSpec> FillSpec::parse(std::string_view text) noexcept
{
    if (text == "ascii")
        return FillSpec{FillPattern::Ascii, 0};
    if (text == "zero")
        return FillSpec{FillPattern::Zero, 0};
    if (text.starts_with("random:"))
    {
        if (const auto seed = parse_uint(text.substr(7)))
            return FillSpec{FillPattern::Random, *seed};
    }
    return std::nullopt;
}

std::string FillSpec::str() const
{
    switch (pattern)
    {
    case FillPattern::Ascii:
        return "ascii";
    case FillPattern::Zero:
        return "zero";
    case FillPattern::Random:
        return "random:" + std::to_string(seed);
    }
    return {};
}

bytes synthesize_input(uint64_t size, const FillSpec& fill)
{
    bytes out(size, 0);
    if (fill.pattern == FillPattern::Zero)
        return out;

    std::mt19937_64 rng{fill.pattern == FillPattern::Ascii ? ascii_seed : fill.seed};
    if (fill.pattern == FillPattern::Ascii)
    {
        // 0x20 (space) through 0x7e (tilde).
        for (auto& b : out)
            b = static_cast<uint8_t>(0x20 + rng() % 95);
        return out;
    }
    for (size_t i = 0; i < out.size(); i += 8)
    {
        auto word = rng();
        for (size_t j = i; j < std::min(out.size(), i + 8); ++j, word >>= 8)
            out[j] = static_cast<uint8_t>(word);
    }
    return out;
}

std::optional<uint64_t> parse_size(std::string_view text) noexcept
{
    std::string lower;
    for (const auto c : text)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::string_view s = lower;

    uint64_t multiplier = 1;
    if (s.ends_with("kb"))
    {
        multiplier = 1024;
        s.remove_suffix(2);
    }
    else if (s.ends_with("mb"))
    {
        multiplier = 1024 * 1024;
        s.remove_suffix(2);
    }
    else if (s.ends_with("b"))
        s.remove_suffix(1);

    const auto v = parse_uint(s);
    if (!v || *v > UINT64_MAX / multiplier)
        return std::nullopt;
    return *v * multiplier;
}

std::optional<std::vector<uint64_t>> parse_size_range(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos)
    {
        if (const auto single = parse_size(text))
            return std::vector<uint64_t>{*single};
        return std::nullopt;
    }
    const auto colon = text.find(':', dots);
    if (colon == std::string_view::npos)
        return std::nullopt;

    const auto lo = parse_size(text.substr(0, dots));
    const auto hi = parse_size(text.substr(dots + 2, colon - dots - 2));
    const auto n = parse_uint(text.substr(colon + 1));
    if (!lo || !hi || !n || *n == 0 || *lo > *hi)
        return std::nullopt;

    std::vector<uint64_t> sizes;
    if (*n == 1)
        return std::vector<uint64_t>{*lo};
    const auto span = *hi - *lo;
    const auto steps = *n - 1;
    for (uint64_t i = 0; i < *n; ++i)
        sizes.push_back(*lo + (2 * i * span + steps) / (2 * steps));
    return sizes;
}

}  // namespace gasledger
