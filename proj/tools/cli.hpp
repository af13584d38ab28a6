#pragma once

#include <iosfwd>

namespace evlogic::cli {

/// Command-line entry point. Writes reports to `out` and diagnostics to
/// `err`. Returns 0 on success, 1 on a domain error (total conflict,
/// infeasible system, invalid scenario content), 2 on usage or parse
/// errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace evlogic::cli
