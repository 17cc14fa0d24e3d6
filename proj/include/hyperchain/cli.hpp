#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperchain {

/// Runs the command-line surface (analyze, lift, verify, export-dot,
/// discretize). Exit codes: 0 success/pass, 1 verification failure,
/// 2 input or usage error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperchain
