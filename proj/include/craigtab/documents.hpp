#pragma once

#include <string>
#include <string_view>

#include "craigtab/tableau.hpp"

namespace craigtab {

// Tableau document: the line `tableau`, then one line per non-root node in
// pre-order, indented two spaces per level below the root's children:
//
//   tableau
//   p [F]
//     ~p [F] {->1}
//
// Each node line is `literal [side] {->depth}` with side and target optional.
// Lines starting with `%` and blank lines are ignored.
std::string write_tableau(const Tableau& t);
Tableau read_tableau(std::string_view text);

// True if the first meaningful line of `text` is `tableau`.
bool looks_like_tableau(std::string_view text);

}  // namespace craigtab
