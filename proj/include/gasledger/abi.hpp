// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/bytes.hpp>
#include <gasledger/gas_schedule.hpp>

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gasledger
{
namespace abi
{
enum class Type
{
    Uint256,
    Bool,
    Address,
    String,
    Bytes,
};

/// Canonical ABI type name ("uint256", "bool", ...).
std::string_view type_name(Type t) noexcept;

/// Accepts canonical names plus the "uint" alias. Throws DomainError(TypeMismatch).
Type parse_type(std::string_view name);

constexpr bool is_dynamic(Type t) noexcept
{
    return t == Type::String || t == Type::Bytes;
}

struct Uint256
{
    uint256 value;
    friend bool operator==(const Uint256&, const Uint256&) = default;
};
struct Bool
{
    bool value = false;
    friend bool operator==(const Bool&, const Bool&) = default;
};
struct Address
{
    std::array<uint8_t, 20> value{};
    friend bool operator==(const Address&, const Address&) = default;
};
struct String
{
    std::string value;
    friend bool operator==(const String&, const String&) = default;
};
struct Bytes
{
    bytes value;
    friend bool operator==(const Bytes&, const Bytes&) = default;
};
}  // namespace abi

using AbiValue = std::variant<abi::Uint256, abi::Bool, abi::Address, abi::String, abi::Bytes>;

abi::Type type_of(const AbiValue& v) noexcept;

/// Solidity rejects functions with more parameters than this ("stack too deep").
inline constexpr size_t max_function_parameters = 16;

struct FunctionSignature
{
    std::string name;
    std::vector<std::string> param_types;

    /// "name(type1,type2,...)" with canonical type names.
    [[nodiscard]] std::string canonical() const;

    /// Parses "name(t1,t2)". Throws DomainError(InvalidArgument) when malformed
    /// and DomainError(TypeMismatch) on an unsupported type.
    static FunctionSignature parse(std::string_view text);
};

using Selector = std::array<uint8_t, 4>;

/// First four bytes of keccak256(canonical signature).
Selector selector(const FunctionSignature& sig);

/// Head/tail ABI encoding of a tuple of values.
bytes abi_encode(std::span<const AbiValue> values);

/// Inverse of abi_encode for the given types. Throws DomainError(InvalidArgument)
/// on truncated or malformed input.
std::vector<AbiValue> abi_decode(bytes_view data, std::span<const abi::Type> types);

/// selector(sig) || abi_encode(args).
/// Throws DomainError(TooManyParameters) above 16 arguments and
/// DomainError(TypeMismatch) when args do not match the declared types.
bytes encode_call(const FunctionSignature& sig, std::span<const AbiValue> args);

struct PayloadStats
{
    uint64_t zero_bytes = 0;
    uint64_t nonzero_bytes = 0;

    [[nodiscard]] uint64_t size() const noexcept { return zero_bytes + nonzero_bytes; }
    friend bool operator==(const PayloadStats&, const PayloadStats&) = default;
};

PayloadStats payload_stats(bytes_view payload) noexcept;

/// tx_base + zero/non-zero calldata byte charges.
gas_t intrinsic_gas(const PayloadStats& stats, const GasSchedule& sched) noexcept;

}  // namespace gasledger
