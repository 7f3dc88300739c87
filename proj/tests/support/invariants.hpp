#pragma once

#include <string>
#include <vector>

#include "craigtab/interpolate.hpp"

namespace craigtab::testing {

struct InvariantSelection {
  bool universal = false;    // F is U-range-restricted
  bool existential = false;  // ¬G is U-range-restricted
  bool placeholders = false; // additionally the free-variable preconditions
};

// Checks the node invariants of a hyper, leaf-closed, two-sided ground
// tableau against its ipol values, and that every inner node has a clause of
// negative literals at or below it. Returns one message per violation.
std::vector<std::string> check_node_invariants(const InterpolationResult& r,
                                               const InvariantSelection& which);

}  // namespace craigtab::testing
