// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gasledger
{
enum class ErrorCode
{
    TooManyParameters,  ///< More than 16 function parameters ("stack too deep").
    TypeMismatch,
    TooManyIndexed,
    NoDispatchTarget,  ///< No selector matched and the contract has no fallback.
    ChunkTooLarge,
    BadDigestLength,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure a model operation can report. The CLI maps these to exit code 3.
class DomainError : public std::runtime_error
{
public:
    DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error{std::string{to_string(code)} + ": " + detail}, code_{code}
    {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gasledger
