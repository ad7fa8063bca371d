#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeshift {

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, diagnostics to `err`. Returns 0 for a positive verdict, 1 for a
/// negative one or a counterexample, 2 for unusable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

} // namespace freeshift
