#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bihom::cli {

/// Runs one command line (without the program name). Writes a JSON document
/// to `out` and diagnostics to `err`. Returns 0 when every check passes or the
/// construction succeeds, 1 when a mathematical check fails, 2 on input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihom::cli
