#pragma once

#include <set>
#include <string>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/normalize.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

struct RestrictionWitness {
  Clause clause;
  std::string culprit;    // offending variable, or the literal or formula
  std::string condition;  // id of the violated condition
};

struct RestrictionReport {
  bool verdict = true;
  std::vector<RestrictionWitness> witnesses;

  void fail(Clause clause, std::string culprit, std::string condition);
};

// Condition ids used in witnesses.
inline constexpr const char* kCondUniversal = "cnf-universal-negative";
inline constexpr const char* kCondExistential = "dnf-existential-positive";
inline constexpr const char* kCondFree = "dnf-free-positive";
inline constexpr const char* kCondNoNegativeClause = "f-no-all-negative-clause";
inline constexpr const char* kCondNegativeClauseCoversX = "g-negative-clause-covers-x";
inline constexpr const char* kCondXNegative = "g-x-negative";

std::set<Symbol> vpos(const Clause& c);
std::set<Symbol> vneg(const Clause& c);

// Every universal variable of a cnf(F) clause occurs in one of its negative
// literals.
RestrictionReport is_u_range_restricted(const Formula& f,
                                        std::size_t max_clauses = kDefaultClauseLimit);

// U-range-restriction, plus: every existential variable of a dnf(F)
// conjunctive clause occurs in one of its positive literals, and so does
// every free variable of F.
RestrictionReport is_vgt_range_restricted(const Formula& f,
                                          std::size_t max_clauses = kDefaultClauseLimit);

// Built from Horn clauses with ∧, ∃ and ∀. Checked on nnf(F).
bool is_horn(const Formula& f);
bool is_horn_clause(const Clause& c);

// literal | ⊤ | ⊥ | conjunction of Horn-like formulas | disjunction of
// negative literals, ⊥ and at most one Horn-like formula.
bool is_horn_like(const Formula& f);

// F and ¬G are U-range-restricted, and (1) no cnf(F) clause is all-negative,
// (2) every all-negative cnf(¬G) clause has X among its negative variables,
// (3) every variable of X in a cnf(¬G) clause occurs negatively there.
// Throws ContractError unless var(F) = var(G) = X.
RestrictionReport check_vx_preconditions(const Formula& f, const Formula& g,
                                         const std::set<Symbol>& x,
                                         std::size_t max_clauses = kDefaultClauseLimit);

// Prenex with only universal (existential) quantifiers.
bool is_universal(const Formula& f);
bool is_existential(const Formula& f);

struct Prop4Item {
  std::string name;
  bool applicable = true;
  bool lhs = false;  // VGT-range-restricted
  bool rhs = false;
  bool agrees() const { return !applicable || lhs == rhs; }
};

struct Prop4Report {
  std::vector<Prop4Item> items;
  bool consistent() const;
};

// Compares VGT-range-restriction of a sentence against: U-range-restriction
// of F and ¬F; of F alone when F is universal; of ¬F alone when F is
// existential. Throws ContractError when F has free variables.
Prop4Report prop4_check(const Formula& f, std::size_t max_clauses = kDefaultClauseLimit);

}  // namespace craigtab
