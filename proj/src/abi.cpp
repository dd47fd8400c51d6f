// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/abi.hpp>
#include <gasledger/errors.hpp>
#include <gasledger/hash.hpp>

#include <algorithm>

namespace gasledger
{
namespace abi
{
std::string_view type_name(Type t) noexcept
{
    switch (t)
    {
    case Type::Uint256:
        return "uint256";
    case Type::Bool:
        return "bool";
    case Type::Address:
        return "address";
    case Type::String:
        return "string";
    case Type::Bytes:
        return "bytes";
    }
    return "";
}

Type parse_type(std::string_view name)
{
    if (name == "uint256" || name == "uint")
        return Type::Uint256;
    if (name == "bool")
        return Type::Bool;
    if (name == "address")
        return Type::Address;
    if (name == "string")
        return Type::String;
    if (name == "bytes")
        return Type::Bytes;
    throw DomainError{ErrorCode::TypeMismatch, "unsupported ABI type '" + std::string{name} + "'"};
}
}  // namespace abi

abi::Type type_of(const AbiValue& v) noexcept
{
    // Variant alternatives are declared in abi::Type order.
    return static_cast<abi::Type>(v.index());
}

namespace
{
constexpr size_t word_size = 32;

size_t padded_size(size_t n) noexcept
{
    return (n + word_size - 1) / word_size * word_size;
}

void append_word(bytes& out, const uint256& v)
{
    const auto w = to_be_word(v);
    out.insert(out.end(), w.begin(), w.end());
}

void append_padded(bytes& out, bytes_view data)
{
    out.insert(out.end(), data.begin(), data.end());
    out.resize(out.size() + padded_size(data.size()) - data.size(), 0);
}

bytes_view dynamic_payload(const AbiValue& v) noexcept
{
    if (const auto* s = std::get_if<abi::String>(&v))
        return as_bytes(s->value);
    return std::get<abi::Bytes>(v).value;
}

void encode_static(bytes& out, const AbiValue& v)
{
    std::visit(
        [&out]<typename T>(const T& x) {
            if constexpr (std::is_same_v<T, abi::Uint256>)
                append_word(out, x.value);
            else if constexpr (std::is_same_v<T, abi::Bool>)
                append_word(out, x.value ? 1 : 0);
            else if constexpr (std::is_same_v<T, abi::Address>)
            {
                out.resize(out.size() + 12, 0);
                out.insert(out.end(), x.value.begin(), x.value.end());
            }
        },
        v);
}

class Reader
{
public:
    explicit Reader(bytes_view data) noexcept : data_{data} {}

    bytes_view slice(uint256 offset, uint256 len) const
    {
        if (offset > data_.size() || len > data_.size() - offset)
            throw DomainError{ErrorCode::InvalidArgument, "ABI data truncated"};
        return data_.subspan(static_cast<size_t>(offset), static_cast<size_t>(len));
    }

    uint256 word(uint256 offset) const { return from_be_word(slice(offset, word_size)); }

private:
    bytes_view data_;
};
}  // namespace

std::string FunctionSignature::canonical() const
{
    std::string s = name + "(";
    for (size_t i = 0; i < param_types.size(); ++i)
    {
        if (i != 0)
            s += ',';
        s += abi::type_name(abi::parse_type(param_types[i]));
    }
    return s + ")";
}

FunctionSignature FunctionSignature::parse(std::string_view text)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos || open == 0 || !text.ends_with(')'))
        throw DomainError{ErrorCode::InvalidArgument, "malformed signature '" + std::string{text} + "'"};

    FunctionSignature sig{std::string{text.substr(0, open)}, {}};
    auto params = text.substr(open + 1, text.size() - open - 2);
    while (!params.empty())
    {
        const auto comma = params.find(',');
        auto t = params.substr(0, comma);
        while (!t.empty() && t.front() == ' ')
            t.remove_prefix(1);
        while (!t.empty() && t.back() == ' ')
            t.remove_suffix(1);
        if (t.empty())
            throw DomainError{ErrorCode::InvalidArgument, "empty parameter type"};
        sig.param_types.emplace_back(abi::type_name(abi::parse_type(t)));
        if (comma == std::string_view::npos)
            break;
        params.remove_prefix(comma + 1);
    }
    return sig;
}

Selector selector(const FunctionSignature& sig)
{
    const auto h = keccak256(as_bytes(sig.canonical()));
    return {h[0], h[1], h[2], h[3]};
}

bytes abi_encode(std::span<const AbiValue> values)
{
    bytes head;
    bytes tail;
    const auto head_size = values.size() * word_size;
    for (const auto& v : values)
    {
        if (!abi::is_dynamic(type_of(v)))
        {
            encode_static(head, v);
            continue;
        }
        append_word(head, head_size + tail.size());
        const auto payload = dynamic_payload(v);
        append_word(tail, payload.size());
        append_padded(tail, payload);
    }
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

std::vector<AbiValue> abi_decode(bytes_view data, std::span<const abi::Type> types)
{
    const Reader r{data};
    std::vector<AbiValue> out;
    out.reserve(types.size());
    for (size_t i = 0; i < types.size(); ++i)
    {
        const uint256 head_pos = i * word_size;
        switch (types[i])
        {
        case abi::Type::Uint256:
            out.emplace_back(abi::Uint256{r.word(head_pos)});
            break;
        case abi::Type::Bool:
        {
            const auto w = r.word(head_pos);
            if (w > 1)
                throw DomainError{ErrorCode::InvalidArgument, "bool word out of range"};
            out.emplace_back(abi::Bool{w == 1});
            break;
        }
        case abi::Type::Address:
        {
            const auto w = r.slice(head_pos, word_size);
            if (std::any_of(w.begin(), w.begin() + 12, [](uint8_t b) { return b != 0; }))
                throw DomainError{ErrorCode::InvalidArgument, "dirty address padding"};
            abi::Address a;
            std::copy(w.begin() + 12, w.end(), a.value.begin());
            out.emplace_back(a);
            break;
        }
        case abi::Type::String:
        case abi::Type::Bytes:
        {
            const auto offset = r.word(head_pos);
            const auto len = r.word(offset);
            const auto payload = r.slice(offset + word_size, len);
            // The tail is padded to whole words; a short final word is malformed.
            r.slice(offset + word_size, (len + word_size - 1) / word_size * word_size);
            if (types[i] == abi::Type::String)
                out.emplace_back(abi::String{{payload.begin(), payload.end()}});
            else
                out.emplace_back(abi::Bytes{{payload.begin(), payload.end()}});
            break;
        }
        }
    }
    return out;
}

bytes encode_call(const FunctionSignature& sig, std::span<const AbiValue> args)
{
    if (args.size() > max_function_parameters || sig.param_types.size() > max_function_parameters)
        throw DomainError{ErrorCode::TooManyParameters,
            sig.name + " has " + std::to_string(std::max(args.size(), sig.param_types.size())) +
                " parameters; at most 16 are allowed"};
    if (args.size() != sig.param_types.size())
        throw DomainError{ErrorCode::TypeMismatch, "argument count does not match " + sig.canonical()};
    for (size_t i = 0; i < args.size(); ++i)
    {
        if (abi::parse_type(sig.param_types[i]) != type_of(args[i]))
            throw DomainError{ErrorCode::TypeMismatch, "argument " + std::to_string(i) + " is not " +
                                                           sig.param_types[i]};
    }

    const auto sel = selector(sig);
    bytes out(sel.begin(), sel.end());
    const auto body = abi_encode(args);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

PayloadStats payload_stats(bytes_view payload) noexcept
{
    const auto zeros = static_cast<uint64_t>(std::count(payload.begin(), payload.end(), uint8_t{0}));
    return {zeros, payload.size() - zeros};
}

gas_t intrinsic_gas(const PayloadStats& stats, const GasSchedule& sched) noexcept
{
    return sched.tx_base + stats.zero_bytes * sched.calldata_zero_byte +
           stats.nonzero_bytes * sched.calldata_nonzero_byte;
}

}  // namespace gasledger
