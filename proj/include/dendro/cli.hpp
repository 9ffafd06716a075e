#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendro {

// Runs the command-line tool on the given arguments (program name excluded).
// --in/--out default to "-", meaning the provided streams, so subcommands can
// be piped. Returns the process exit code: 0 success or verification pass,
// 1 verification failures, 2 usage/parse/validation/measure errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dendro
