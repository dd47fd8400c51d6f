// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gasledger::cli
{
enum ExitCode : int
{
    ok = 0,
    usage_error = 1,
    io_error = 2,
    domain_error = 3,
};

/// Entry point of the gasledger command. args excludes the program name.
/// Subcommands: estimate, compare, layout, encode, chunk.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gasledger::cli
