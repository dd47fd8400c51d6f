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
enum class Platform
{
    Swarm,
    SwarmEncrypted,
    Ipfs,
};

std::string_view to_string(Platform p) noexcept;

struct ChunkerConfig
{
    uint64_t chunk_size = 4096;
    uint64_t fanout = 128;

    static constexpr ChunkerConfig swarm() noexcept { return {4096, 128}; }
    static constexpr ChunkerConfig ipfs() noexcept { return {262144, 174}; }
    static constexpr ChunkerConfig defaults_for(Platform p) noexcept
    {
        return p == Platform::Ipfs ? ipfs() : swarm();
    }
};

/// Swarm chunk payload limit and BMT width.
inline constexpr size_t swarm_chunk_size = 4096;
inline constexpr size_t bmt_segment_size = 32;

/// Fixed-size pieces of data, the last possibly short. Empty data yields one
/// empty chunk so that every input has an identifier.
std::vector<bytes_view> split(bytes_view data, uint64_t chunk_size);

/// Swarm reference: 32-byte address, or address || key (64 bytes) for encrypted content.
struct SwarmAddress
{
    bytes value;
};

/// BMT chunk address: keccak256(span as 8-byte little-endian || BMT root over
/// the chunk zero-padded to 4096 bytes). Throws DomainError(ChunkTooLarge).
hash256 bmt_address(bytes_view chunk, uint64_t span);

/// Deterministic stand-in for the encryption key, so that encrypted
/// references have their real 64-byte length.
SwarmAddress encrypted_reference(const hash256& address);

struct ChunkTree
{
    Platform platform = Platform::Swarm;
    bytes root_id;  ///< Swarm reference (32/64 bytes) or the IPFS sha2-256 root digest.
    uint64_t chunk_count = 0;
    uint64_t node_count = 0;  ///< chunks + intermediate nodes
    uint64_t depth = 0;       ///< 1 for single-chunk data
};

/// Builds the chunk tree. Swarm intermediate chunks hold up to fanout child
/// references and are BMT-addressed with the span they cover; a lone trailing
/// reference is carried to the next level unwrapped. IPFS leaves are
/// sha2-256 of chunk bytes and interior nodes hash their children's
/// multihashes; every group gets a parent.
/// Throws DomainError(InvalidArgument) on an unusable config.
ChunkTree build_tree(bytes_view data, Platform platform, const ChunkerConfig& cfg);

struct Cid
{
    static constexpr uint64_t codec_raw = 0x55;
    static constexpr uint64_t codec_dag_pb = 0x70;
    static constexpr uint64_t hash_sha2_256 = 0x12;

    int version = 1;
    uint64_t codec = codec_raw;
    uint64_t hash_fn = hash_sha2_256;
    hash256 digest{};

    /// v0: multihash only (34 bytes). v1: version || codec || multihash (36 bytes).
    [[nodiscard]] bytes binary() const;
    /// v0: base58btc ("Qm..."). v1: multibase base32 ("b...").
    [[nodiscard]] std::string text() const;
};

/// Throws DomainError(BadDigestLength) unless digest is 32 bytes and
/// DomainError(InvalidArgument) for versions other than 0 and 1.
Cid make_cid(bytes_view digest, int version);

/// Bytes a DApp anchors on-chain for this tree: the Swarm reference or the
/// binary CID of the requested version (ignored for Swarm).
bytes identifier_bytes(const ChunkTree& tree, int cid_version = 0);

std::string base58btc_encode(bytes_view data);
std::string base32_lower_encode(bytes_view data);

}  // namespace gasledger
