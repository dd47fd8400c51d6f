// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/hash.hpp>

#include <openssl/evp.h>

#include <stdexcept>

namespace gasledger
{
hash256 sha256(bytes_view data)
{
    hash256 out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size())
        throw std::runtime_error{"EVP_Digest(sha256) failed"};
    return out;
}
}  // namespace gasledger
