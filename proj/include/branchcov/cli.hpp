#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace branchcov::cli {

enum ExitCode : int { pass = 0, contract_violation = 1, usage = 2 };

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out`; diagnostics and size warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace branchcov::cli
