// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/content_address.hpp>
#include <gasledger/errors.hpp>
#include <gasledger/hash.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <cstring>

namespace gasledger
{
namespace
{
using detail::parallel_for;

constexpr size_t bmt_segments = swarm_chunk_size / bmt_segment_size;

struct SwarmNode
{
    hash256 address;
    uint64_t span;
};

std::vector<uint8_t> multihash_of(const hash256& digest)
{
    std::vector<uint8_t> mh{static_cast<uint8_t>(Cid::hash_sha2_256), 32};
    mh.insert(mh.end(), digest.begin(), digest.end());
    return mh;
}

void validate(const ChunkerConfig& cfg, Platform platform)
{
    if (cfg.chunk_size < 1)
        throw DomainError{ErrorCode::InvalidArgument, "chunk_size must be at least 1"};
    if (cfg.fanout < 2)
        throw DomainError{ErrorCode::InvalidArgument, "fanout must be at least 2"};
    if (platform != Platform::Ipfs)
    {
        if (cfg.chunk_size > swarm_chunk_size)
            throw DomainError{ErrorCode::ChunkTooLarge, "Swarm chunks hold at most 4096 bytes"};
        if (cfg.fanout * bmt_segment_size > swarm_chunk_size)
            throw DomainError{ErrorCode::ChunkTooLarge, "Swarm intermediate chunks hold at most 128 references"};
    }
}

ChunkTree build_swarm(bytes_view data, const ChunkerConfig& cfg)
{
    const auto chunks = split(data, cfg.chunk_size);
    std::vector<SwarmNode> level(chunks.size());
    parallel_for(chunks.size(), [&](size_t i) {
        level[i] = {bmt_address(chunks[i], chunks[i].size()), chunks[i].size()};
    });

    ChunkTree tree{.platform = Platform::Swarm, .root_id = {}, .chunk_count = chunks.size(),
        .node_count = chunks.size(), .depth = 1};
    while (level.size() > 1)
    {
        const auto groups = (level.size() + cfg.fanout - 1) / cfg.fanout;
        std::vector<SwarmNode> next(groups);
        parallel_for(groups, [&](size_t g) {
            const auto first = g * cfg.fanout;
            const auto last = std::min(level.size(), first + cfg.fanout);
            if (last - first == 1)
            {
                next[g] = level[first];
                return;
            }
            bytes refs;
            refs.reserve((last - first) * 32);
            uint64_t span = 0;
            for (auto i = first; i < last; ++i)
            {
                refs.insert(refs.end(), level[i].address.begin(), level[i].address.end());
                span += level[i].span;
            }
            next[g] = {bmt_address(refs, span), span};
        });
        // Only a trailing group can be a singleton, and only that one is carried.
        const bool carried = level.size() % cfg.fanout == 1;
        tree.node_count += groups - (carried ? 1 : 0);
        ++tree.depth;
        level = std::move(next);
    }
    tree.root_id.assign(level.front().address.begin(), level.front().address.end());
    return tree;
}

ChunkTree build_ipfs(bytes_view data, const ChunkerConfig& cfg)
{
    const auto chunks = split(data, cfg.chunk_size);
    std::vector<hash256> level(chunks.size());
    parallel_for(chunks.size(), [&](size_t i) { level[i] = sha256(chunks[i]); });

    ChunkTree tree{.platform = Platform::Ipfs, .root_id = {}, .chunk_count = chunks.size(),
        .node_count = chunks.size(), .depth = 1};
    while (level.size() > 1)
    {
        const auto groups = (level.size() + cfg.fanout - 1) / cfg.fanout;
        std::vector<hash256> next(groups);
        parallel_for(groups, [&](size_t g) {
            const auto first = g * cfg.fanout;
            const auto last = std::min(level.size(), first + cfg.fanout);
            bytes links;
            for (auto i = first; i < last; ++i)
            {
                const auto mh = multihash_of(level[i]);
                links.insert(links.end(), mh.begin(), mh.end());
            }
            next[g] = sha256(links);
        });
        tree.node_count += groups;
        ++tree.depth;
        level = std::move(next);
    }
    tree.root_id.assign(level.front().begin(), level.front().end());
    return tree;
}

/// Unsigned varint as used by multiformats.
void append_varint(bytes& out, uint64_t v)
{
    while (v >= 0x80)
    {
        out.push_back(static_cast<uint8_t>(v | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<uint8_t>(v));
}
}  // namespace

std::string_view to_string(Platform p) noexcept
{
    switch (p)
    {
    case Platform::Swarm:
        return "swarm";
    case Platform::SwarmEncrypted:
        return "swarm-encrypted";
    case Platform::Ipfs:
        return "ipfs";
    }
    return "";
}

std::vector<bytes_view> split(bytes_view data, uint64_t chunk_size)
{
    if (chunk_size == 0)
        throw DomainError{ErrorCode::InvalidArgument, "chunk_size must be at least 1"};
    if (data.empty())
        return {data};
    std::vector<bytes_view> chunks;
    chunks.reserve((data.size() + chunk_size - 1) / chunk_size);
    for (size_t off = 0; off < data.size(); off += chunk_size)
        chunks.push_back(data.subspan(off, std::min<size_t>(chunk_size, data.size() - off)));
    return chunks;
}

hash256 bmt_address(bytes_view chunk, uint64_t span)
{
    if (chunk.size() > swarm_chunk_size)
        throw DomainError{ErrorCode::ChunkTooLarge,
            "chunk of " + std::to_string(chunk.size()) + " bytes exceeds 4096"};

    std::array<uint8_t, swarm_chunk_size> padded{};
    std::memcpy(padded.data(), chunk.data(), chunk.size());

    std::vector<hash256> level(bmt_segments / 2);
    for (size_t i = 0; i < level.size(); ++i)
        level[i] = keccak256(bytes_view{padded}.subspan(i * 64, 64));
    while (level.size() > 1)
    {
        for (size_t i = 0; i < level.size() / 2; ++i)
            level[i] = Keccak256{}.update(level[2 * i]).update(level[2 * i + 1]).finalize();
        level.resize(level.size() / 2);
    }

    std::array<uint8_t, 8> span_le{};
    for (size_t i = 0; i < span_le.size(); ++i)
        span_le[i] = static_cast<uint8_t>(span >> (8 * i));
    return Keccak256{}.update(span_le).update(level.front()).finalize();
}

SwarmAddress encrypted_reference(const hash256& address)
{
    const auto key = keccak256(address);
    SwarmAddress ref{{address.begin(), address.end()}};
    ref.value.insert(ref.value.end(), key.begin(), key.end());
    return ref;
}

ChunkTree build_tree(bytes_view data, Platform platform, const ChunkerConfig& cfg)
{
    validate(cfg, platform);
    if (platform == Platform::Ipfs)
        return build_ipfs(data, cfg);

    auto tree = build_swarm(data, cfg);
    if (platform == Platform::SwarmEncrypted)
    {
        hash256 address;
        std::copy(tree.root_id.begin(), tree.root_id.end(), address.begin());
        tree.root_id = encrypted_reference(address).value;
        tree.platform = Platform::SwarmEncrypted;
    }
    return tree;
}

bytes Cid::binary() const
{
    bytes out;
    if (version == 1)
    {
        append_varint(out, 1);
        append_varint(out, codec);
    }
    append_varint(out, hash_fn);
    append_varint(out, digest.size());
    out.insert(out.end(), digest.begin(), digest.end());
    return out;
}

std::string Cid::text() const
{
    if (version == 0)
        return base58btc_encode(binary());
    return "b" + base32_lower_encode(binary());
}

Cid make_cid(bytes_view digest, int version)
{
    if (digest.size() != 32)
        throw DomainError{ErrorCode::BadDigestLength,
            "sha2-256 digest must be 32 bytes, got " + std::to_string(digest.size())};
    if (version != 0 && version != 1)
        throw DomainError{ErrorCode::InvalidArgument, "CID version must be 0 or 1"};
    Cid cid;
    cid.version = version;
    cid.codec = version == 0 ? Cid::codec_dag_pb : Cid::codec_raw;
    std::copy(digest.begin(), digest.end(), cid.digest.begin());
    return cid;
}

bytes identifier_bytes(const ChunkTree& tree, int cid_version)
{
    if (tree.platform != Platform::Ipfs)
        return tree.root_id;
    return make_cid(tree.root_id, cid_version).binary();
}

std::string base58btc_encode(bytes_view data)
{
    static constexpr char alphabet[] = "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";

    const auto leading_zeros = static_cast<size_t>(
        std::find_if(data.begin(), data.end(), [](uint8_t b) { return b != 0; }) - data.begin());

    // Base-58 digits, least significant first.
    std::vector<uint8_t> digits;
    for (auto it = data.begin() + static_cast<std::ptrdiff_t>(leading_zeros); it != data.end(); ++it)
    {
        unsigned carry = *it;
        for (auto& d : digits)
        {
            carry += static_cast<unsigned>(d) << 8;
            d = static_cast<uint8_t>(carry % 58);
            carry /= 58;
        }
        while (carry != 0)
        {
            digits.push_back(static_cast<uint8_t>(carry % 58));
            carry /= 58;
        }
    }

    std::string out(leading_zeros, '1');
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        out.push_back(alphabet[*it]);
    return out;
}

std::string base32_lower_encode(bytes_view data)
{
    static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz234567";
    std::string out;
    out.reserve((data.size() * 8 + 4) / 5);
    unsigned buffer = 0;
    int bits = 0;
    for (const auto b : data)
    {
        buffer = (buffer << 8) | b;
        bits += 8;
        while (bits >= 5)
        {
            out.push_back(alphabet[(buffer >> (bits - 5)) & 0x1f]);
            bits -= 5;
        }
    }
    if (bits > 0)
        out.push_back(alphabet[(buffer << (5 - bits)) & 0x1f]);
    return out;
}

}  // namespace gasledger
