#pragma once

#include <iosfwd>

namespace fibercav {

// Compact invariant suite for `fibercav selftest`: one summary line per group.
// Returns the number of failed groups.
int run_selftest(std::ostream& log);

}  // namespace fibercav
