#pragma once

#include <iosfwd>

namespace blvoa {

/// Exit codes: 0 success, 1 usage, 2 resource guard, 3 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blvoa
