// Command-line front end. Every verb prints a JSON report on `out` and a
// short human summary on `err`; the exit code is 0 iff all checks passed.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atfkit::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atfkit::cli
