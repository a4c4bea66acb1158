#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dyck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOverflow = 3;

/// Largest semilength accepted on the command line; C_35 and every ballot
/// entry up to row 35 fit in 64 bits.
inline constexpr unsigned kMaxSemilength = 35;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` one item per line, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyck::cli
