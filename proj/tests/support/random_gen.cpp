#include "random_gen.hpp"

#include "craigtab/parse.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab::testing {

Term FormulaGenerator::term(std::size_t nesting) {
  std::size_t pick = below(10);
  if (nesting > 0 && pick < 2 && !shape_.unary_functions.empty()) {
    Symbol f(shape_.unary_functions[below(shape_.unary_functions.size())]);
    return Term::function(f, {term(nesting - 1)});
  }
  if (pick < 6 || shape_.constants.empty()) return Term::variable(variable());
  return Term::function(Symbol(shape_.constants[below(shape_.constants.size())]));
}

Literal FormulaGenerator::literal() {
  const auto& [name, arity] = shape_.predicates[below(shape_.predicates.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(term());
  return Literal(chance(0.5), Symbol(name), std::move(args));
}

Formula FormulaGenerator::formula(std::size_t depth) {
  if (depth == 0 || chance(0.25)) {
    if (shape_.truth_constants && chance(0.05)) return Formula::truth(chance(0.5));
    return Formula::literal(literal());
  }
  std::size_t kinds = shape_.quantifiers ? 8 : 6;
  switch (below(kinds)) {
    case 0:
    case 1: {
      std::vector<Formula> ops;
      std::size_t n = 2 + below(2);
      for (std::size_t i = 0; i < n; ++i) ops.push_back(formula(depth - 1));
      return Formula::conjunction(std::move(ops));
    }
    case 2:
    case 3: {
      std::vector<Formula> ops;
      std::size_t n = 2 + below(2);
      for (std::size_t i = 0; i < n; ++i) ops.push_back(formula(depth - 1));
      return Formula::disjunction(std::move(ops));
    }
    case 4:
      return Formula::negation(formula(depth - 1));
    case 5:
      if (!shape_.implications) return Formula::negation(formula(depth - 1));
      if (chance(0.15)) return Formula::equivalence(formula(depth - 1), Formula::literal(literal()));
      return Formula::implication(formula(depth - 1), formula(depth - 1));
    default:
      return Formula::quantifier(chance(0.5), variable(), formula(depth - 1));
  }
}

Formula FormulaGenerator::qf_nnf(std::size_t depth) {
  if (depth == 0 || chance(0.3)) {
    if (shape_.truth_constants && chance(0.05)) return Formula::truth(chance(0.5));
    return Formula::literal(literal());
  }
  std::vector<Formula> ops;
  std::size_t n = 2 + below(2);
  for (std::size_t i = 0; i < n; ++i) ops.push_back(qf_nnf(depth - 1));
  return chance(0.5) ? Formula::conjunction(std::move(ops)) : Formula::disjunction(std::move(ops));
}

Formula FormulaGenerator::sentence(std::size_t depth) {
  return universal_closure(formula(depth));
}

Formula FormulaGenerator::prenex_sentence(bool universal, std::size_t depth) {
  Formula f = qf_nnf(depth);
  std::set<Symbol> fv = free_vars(f);
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) f = Formula::quantifier(universal, *it, f);
  return f;
}

std::vector<Clause> random_ground_clauses(std::mt19937& rng, std::size_t atoms) {
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::size_t count = 1 + below(3 * atoms);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < count; ++i) {
    Clause c;
    std::size_t len = below(10) == 0 ? 0 : 1 + below(3);
    for (std::size_t j = 0; j < len; ++j) {
      Symbol a("a" + std::to_string(below(atoms)));
      c.push_back(Literal(below(2) == 0, a));
    }
    clauses.push_back(std::move(c));
  }
  return clauses;
}

}  // namespace craigtab::testing
