// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gasledger/bytes.hpp>

namespace gasledger
{
/// Original Keccak-256 (0x01 domain padding), as used by the EVM. Not FIPS SHA3-256.
hash256 keccak256(bytes_view data) noexcept;

/// Incremental Keccak-256, for hashing concatenations without copying.
class Keccak256
{
public:
    Keccak256() noexcept = default;
    Keccak256& update(bytes_view data) noexcept;
    hash256 finalize() noexcept;

private:
    static constexpr size_t rate = 136;
    uint64_t state_[25]{};
    uint8_t buffer_[rate]{};
    size_t buffered_ = 0;
};

/// SHA2-256.
hash256 sha256(bytes_view data);

}  // namespace gasledger
