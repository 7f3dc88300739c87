#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "craigtab/symbol.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

enum class FormulaKind {
  literal,
  top,
  bottom,
  conjunction,
  disjunction,
  negation,
  implication,
  equivalence,
  forall,
  exists,
};

// First-order formula. Truth constants are leaves of their own kind and never
// literals. Immutable, with shared structure.
class Formula {
 public:
  // ⊤
  Formula();

  static Formula literal(Literal lit);
  static Formula top();
  static Formula bottom();
  static Formula truth(bool value) { return value ? top() : bottom(); }
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula negation(Formula operand);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula forall(Symbol var, Formula body);
  static Formula exists(Symbol var, Formula body);
  static Formula quantifier(bool universal, Symbol var, Formula body) {
    return universal ? forall(var, std::move(body))
                     : exists(var, std::move(body));
  }

  FormulaKind kind() const;
  bool is_literal() const { return kind() == FormulaKind::literal; }
  bool is_quantifier() const {
    return kind() == FormulaKind::forall || kind() == FormulaKind::exists;
  }
  bool is_truth_constant() const {
    return kind() == FormulaKind::top || kind() == FormulaKind::bottom;
  }

  const Literal& lit() const;
  // Conjuncts, disjuncts, the negated formula, or the two sides of an
  // implication or equivalence.
  std::span<const Formula> operands() const;
  Symbol bound_var() const;
  const Formula& body() const;

  std::size_t hash() const;
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// No flattening. A single operand is returned as is, none gives a truth
// constant.
Formula conjoin(std::vector<Formula> operands);
Formula disjoin(std::vector<Formula> operands);

// Rebuilds `f` with every literal replaced by `map(literal)`. Binders are kept
// as they are, so the caller is responsible for avoiding capture.
Formula map_literals(const Formula& f,
                     const std::function<Literal(const Literal&)>& map);

}  // namespace craigtab

template <>
struct std::hash<craigtab::Formula> {
  std::size_t operator()(const craigtab::Formula& f) const noexcept {
    return f.hash();
  }
};
