#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsq::cli {

/// Runs one command line (arguments after the program name). Returns 0 when
/// every check passes, 1 on a failed check, 2 on usage, parse or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsq::cli
