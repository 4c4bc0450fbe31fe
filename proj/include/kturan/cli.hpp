#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kturan {

/// Runs the command line. `args` excludes the program name.
/// Returns 0 on success, 1 when a verify check fails, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace kturan
