#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"

namespace craigtab::testing {

// body → head with universally read body variables. An empty head is ⊥.
struct Rule {
  std::vector<Literal> body;
  std::vector<Literal> head;
  std::vector<Symbol> existentials;
  bool disjunctive = false;
};

struct WorldShape {
  bool horn = false;          // no disjunctive heads; Horn clause spelling
  bool tgds = true;           // existential heads
  bool disjunctions = true;   // disjunctive heads (ignored when horn)
  bool constraints = false;   // rules with head ⊥
  std::size_t max_facts = 5;
  std::size_t max_rules = 6;
};

// Facts and rules over p/1, q/1, r/2, s/1 and the constants a, b, c,
// together with what a bounded restricted chase derives from them.
struct World {
  std::vector<Literal> facts;
  std::vector<Rule> rules;
  std::vector<Formula> conjuncts;  // facts first, then rules
  std::vector<Literal> derived;    // chase result, nulls as constants n0, n1, ...
  std::set<Symbol> nulls;
  bool consistent = true;

  Formula formula() const;
};

Formula rule_formula(const Rule& rule, bool horn_spelling);

// Chase of `facts` under `rules`. Disjunctive rules are skipped, so every
// derived fact is entailed with nulls read existentially.
struct ChaseResult {
  std::vector<Literal> facts;
  std::set<Symbol> nulls;
  bool consistent = true;
};
ChaseResult chase(std::vector<Literal> facts, const std::vector<Rule>& rules,
                  std::size_t rounds = 4, std::size_t max_nulls = 8);

World random_world(std::mt19937& rng, const WorldShape& shape);

// ∃-closure of a conjunction of derived facts in which every null and,
// with probability `generalize`, every other constant becomes a variable.
// Constants in `free` become the given free variables instead.
Formula existential_query(const std::vector<Literal>& facts, const std::set<Symbol>& nulls,
                          const std::map<Symbol, Symbol>& free, double generalize,
                          std::mt19937& rng);

struct Instance {
  std::string kind;
  Formula f;
  Formula g;
  std::set<Symbol> free_x;
};

// U-range-restricted F and a weakening G.
Instance range_restricted_instance(std::mt19937& rng);
// Sentences F and G with ¬G built to be U-range-restricted.
Instance sentence_instance(std::mt19937& rng);
// F = K ∧ Q(X) and G a positive existential consequence with free variables X.
Instance free_variable_instance(std::mt19937& rng);
// Horn F with an entailed G.
Instance horn_instance(std::mt19937& rng);

}  // namespace craigtab::testing
