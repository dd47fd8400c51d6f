// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/errors.hpp>

namespace gasledger
{
std::string_view to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::TooManyParameters:
        return "TooManyParameters";
    case ErrorCode::TypeMismatch:
        return "TypeMismatch";
    case ErrorCode::TooManyIndexed:
        return "TooManyIndexed";
    case ErrorCode::NoDispatchTarget:
        return "NoDispatchTarget";
    case ErrorCode::ChunkTooLarge:
        return "ChunkTooLarge";
    case ErrorCode::BadDigestLength:
        return "BadDigestLength";
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    }
    return "Unknown";
}
}  // namespace gasledger
