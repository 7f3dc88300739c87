#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab::testing {

using Env = std::map<Symbol, std::size_t>;

// Interpretation over the domain {0, ..., domain-1}. Tables are indexed by the
// argument tuple read as a number in base `domain`. `=` is identity.
struct Model {
  std::size_t domain = 1;
  std::map<Symbol, std::vector<std::size_t>> functions;
  std::map<Symbol, std::vector<bool>> predicates;

  std::size_t eval(const Term& t, const Env& env) const;
  bool eval(const Literal& l, const Env& env) const;
  bool eval(const Formula& f, Env& env) const;
};

Model random_model(const Signature& sig, std::size_t domain, std::mt19937& rng);

// True under every assignment of the free variables.
bool valid_in(const Model& m, const Formula& f);
// Universal closure of every clause holds.
bool clauses_hold(const Model& m, const std::vector<Clause>& clauses);

// Signature of several formulas together.
Signature signature_of(std::initializer_list<Formula> fs);

// Truth table satisfiability of a ground clause set.
bool ground_satisfiable(const std::vector<Clause>& clauses);

}  // namespace craigtab::testing
