// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/hash.hpp>

#include <bit>
#include <cstring>

namespace gasledger
{
namespace
{
constexpr uint64_t round_constants[24] = {
    0x0000000000000001, 0x0000000000008082, 0x800000000000808a, 0x8000000080008000,
    0x000000000000808b, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008a, 0x0000000000000088, 0x0000000080008009, 0x000000008000000a,
    0x000000008000808b, 0x800000000000008b, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800a, 0x800000008000000a,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
};

constexpr int rotations[25] = {
    0, 1, 62, 28, 27,  //
    36, 44, 6, 55, 20,  //
    3, 10, 43, 25, 39,  //
    41, 45, 15, 21, 8,  //
    18, 2, 61, 56, 14,
};

// state index = x + 5*y
void keccakf(uint64_t (&a)[25]) noexcept
{
    for (const auto rc : round_constants)
    {
        // theta
        uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x)
        {
            const auto d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5)
                a[y + x] ^= d;
        }

        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = std::rotl(a[x + 5 * y], rotations[x + 5 * y]);

        // chi
        for (int y = 0; y < 25; y += 5)
            for (int x = 0; x < 5; ++x)
                a[y + x] = b[y + x] ^ (~b[y + (x + 1) % 5] & b[y + (x + 2) % 5]);

        // iota
        a[0] ^= rc;
    }
}

uint64_t load_le64(const uint8_t* p) noexcept
{
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | p[i];
    return v;
}
}  // namespace

Keccak256& Keccak256::update(bytes_view data) noexcept
{
    for (const auto byte : data)
    {
        buffer_[buffered_++] = byte;
        if (buffered_ == rate)
        {
            for (size_t i = 0; i < rate / 8; ++i)
                state_[i] ^= load_le64(&buffer_[i * 8]);
            keccakf(state_);
            buffered_ = 0;
        }
    }
    return *this;
}

hash256 Keccak256::finalize() noexcept
{
    std::memset(&buffer_[buffered_], 0, rate - buffered_);
    buffer_[buffered_] ^= 0x01;
    buffer_[rate - 1] ^= 0x80;
    for (size_t i = 0; i < rate / 8; ++i)
        state_[i] ^= load_le64(&buffer_[i * 8]);
    keccakf(state_);

    hash256 out;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 8; ++j)
            out[i * 8 + j] = static_cast<uint8_t>(state_[i] >> (8 * j));

    *this = Keccak256{};
    return out;
}

hash256 keccak256(bytes_view data) noexcept
{
    return Keccak256{}.update(data).finalize();
}

}  // namespace gasledger
