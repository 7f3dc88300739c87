#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

// One `fof(name, role, formula).` or `cnf(name, role, clause).` entry.
struct AnnotatedFormula {
  std::string language;  // "fof" or "cnf"
  std::string name;
  std::string role;
  Formula formula;
};

// Reads a TPTP file with fof and cnf entries. Words starting with an upper
// case letter or `_` are variables; everything else is a function or
// predicate. Throws ParseError with line and column.
std::vector<AnnotatedFormula> parse_tptp(std::string_view text);

// A bare formula, e.g. `! [X] : (p(X) => q(X))`.
Formula parse_formula(std::string_view text);
// A disjunction of literals, or `$false` for the empty clause.
Clause parse_clause(std::string_view text);
Literal parse_literal(std::string_view text);
Term parse_term(std::string_view text);

// Roles `conjecture` and `negated_conjecture` go to the second group,
// everything else to the first.
struct SplitProblem {
  std::vector<Formula> premises;
  std::vector<Formula> conclusions;
  std::vector<Formula> negated_conclusions;
};
SplitProblem split_roles(const std::vector<AnnotatedFormula>& entries);

// The universal closure over the free variables, in sorted order.
Formula universal_closure(const Formula& f);
// Converts a quantifier-free disjunction of literals (as produced for cnf
// entries) into a clause.
Clause formula_to_clause(const Formula& f);

}  // namespace craigtab
