#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpack::cli {

/// Subcommands: check, minimax, pack, certify, verify, oracle, gen.
/// Exit status 0 on success, 1 when the mathematics rejects the instance
/// (odd inner vertex, unlinked terminal for pack, failed verification), 2 on
/// I/O, parse or usage errors. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpack::cli
