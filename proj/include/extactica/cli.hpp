#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extactica::cli {

enum ExitCode : int { ok = 0, usage_error = 1, computation_error = 2 };

/// Runs one command. `args` excludes the program name. Reports and
/// structured errors go to `out`; help and usage text to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extactica::cli
