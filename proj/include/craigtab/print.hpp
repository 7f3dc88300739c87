#pragma once

#include <string>

#include "craigtab/formula.hpp"
#include "craigtab/normalize.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

// TPTP FOF spelling: `~p(X)`, `X = Y`, `X != Y`, `$true`, `$false`,
// `! [X] : ...`, `? [X] : ...`.
std::string to_string(const Term& t);
std::string to_string(const Literal& l);
// Disjunction `p | ~q`; the empty clause prints as `$false`.
std::string to_string(const Clause& c);
std::string to_string(const Formula& f);
std::string to_string(const PrenexNormalForm& f);

}  // namespace craigtab
