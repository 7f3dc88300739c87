#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"

namespace craigtab::testing {

struct FormulaShape {
  std::vector<std::pair<std::string, std::size_t>> predicates{
      {"p", 1}, {"q", 1}, {"r", 2}, {"s", 0}};
  std::vector<std::string> constants{"a", "b"};
  std::vector<std::string> unary_functions{"f"};
  std::vector<std::string> variables{"X", "Y", "Z"};
  std::size_t max_depth = 4;
  bool quantifiers = true;
  bool implications = true;
  bool truth_constants = true;
};

class FormulaGenerator {
 public:
  FormulaGenerator(FormulaShape shape, std::uint32_t seed) : shape_(std::move(shape)), rng_(seed) {}

  std::mt19937& rng() { return rng_; }
  const FormulaShape& shape() const { return shape_; }

  Term term(std::size_t nesting = 1);
  Literal literal();
  // Any connective and quantifier; free variables are likely.
  Formula formula(std::size_t depth);
  Formula formula() { return formula(shape_.max_depth); }
  // Literals, truth constants, ∧ and ∨ only.
  Formula qf_nnf(std::size_t depth);
  // Universal closure of a random formula.
  Formula sentence(std::size_t depth);
  // Prenex with one kind of quantifier over a quantifier-free NNF matrix.
  Formula prenex_sentence(bool universal, std::size_t depth);

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

 private:
  Symbol variable() { return Symbol(shape_.variables[below(shape_.variables.size())]); }

  FormulaShape shape_;
  std::mt19937 rng_;
};

// Ground clauses over the 0-ary atoms a0 .. a(atoms-1).
std::vector<Clause> random_ground_clauses(std::mt19937& rng, std::size_t atoms);

}  // namespace craigtab::testing
