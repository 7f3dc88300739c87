#include "craigtab/formula.hpp"

#include <cassert>

namespace craigtab {

struct Formula::Node {
  FormulaKind kind;
  Literal lit;
  std::vector<Formula> operands;
  Symbol var;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::literal(Literal lit) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::literal;
  n->hash = mix(1, lit.hash());
  n->size = 1;
  n->lit = std::move(lit);
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula instance = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::top;
    n->hash = 0x7070;
    n->size = 1;
    return Formula(std::move(n));
  }();
  return instance;
}

Formula Formula::bottom() {
  static const Formula instance = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::bottom;
    n->hash = 0x0b0b;
    n->size = 1;
    return Formula(std::move(n));
  }();
  return instance;
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> make_compound(FormulaKind kind,
                                     std::vector<Formula> operands) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  std::size_t h = mix(static_cast<std::size_t>(kind) * 7919, operands.size());
  std::size_t size = 1;
  for (const Formula& f : operands) {
    h = mix(h, f.hash());
    size += f.size();
  }
  n->hash = h;
  n->size = size;
  n->operands = std::move(operands);
  return n;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> operands) {
  return Formula(
      make_compound<Node>(FormulaKind::conjunction, std::move(operands)));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  return Formula(
      make_compound<Node>(FormulaKind::disjunction, std::move(operands)));
}

Formula Formula::negation(Formula operand) {
  std::vector<Formula> ops;
  ops.push_back(std::move(operand));
  return Formula(make_compound<Node>(FormulaKind::negation, std::move(ops)));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  std::vector<Formula> ops;
  ops.push_back(std::move(antecedent));
  ops.push_back(std::move(consequent));
  return Formula(make_compound<Node>(FormulaKind::implication, std::move(ops)));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  std::vector<Formula> ops;
  ops.push_back(std::move(lhs));
  ops.push_back(std::move(rhs));
  return Formula(make_compound<Node>(FormulaKind::equivalence, std::move(ops)));
}

Formula Formula::forall(Symbol var, Formula body) {
  std::vector<Formula> ops;
  ops.push_back(std::move(body));
  auto n = make_compound<Node>(FormulaKind::forall, std::move(ops));
  n->var = var;
  n->hash = mix(n->hash, var.id());
  return Formula(std::move(n));
}

Formula Formula::exists(Symbol var, Formula body) {
  std::vector<Formula> ops;
  ops.push_back(std::move(body));
  auto n = make_compound<Node>(FormulaKind::exists, std::move(ops));
  n->var = var;
  n->hash = mix(n->hash, var.id());
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }

const Literal& Formula::lit() const {
  assert(node_->kind == FormulaKind::literal);
  return node_->lit;
}

std::span<const Formula> Formula::operands() const { return node_->operands; }

Symbol Formula::bound_var() const {
  assert(is_quantifier());
  return node_->var;
}

const Formula& Formula::body() const {
  assert(is_quantifier());
  return node_->operands.front();
}

std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case FormulaKind::literal:
      return x.lit == y.lit;
    case FormulaKind::top:
    case FormulaKind::bottom:
      return true;
    case FormulaKind::forall:
    case FormulaKind::exists:
      if (x.var != y.var) return false;
      break;
    default:
      break;
  }
  return x.operands == y.operands;
}

Formula conjoin(std::vector<Formula> operands) {
  if (operands.empty()) return Formula::top();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula::conjunction(std::move(operands));
}

Formula disjoin(std::vector<Formula> operands) {
  if (operands.empty()) return Formula::bottom();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula::disjunction(std::move(operands));
}

Formula map_literals(const Formula& f,
                     const std::function<Literal(const Literal&)>& map) {
  switch (f.kind()) {
    case FormulaKind::literal:
      return Formula::literal(map(f.lit()));
    case FormulaKind::top:
    case FormulaKind::bottom:
      return f;
    case FormulaKind::forall:
    case FormulaKind::exists:
      return Formula::quantifier(f.kind() == FormulaKind::forall,
                                 f.bound_var(), map_literals(f.body(), map));
    default:
      break;
  }
  std::vector<Formula> ops;
  ops.reserve(f.operands().size());
  for (const Formula& g : f.operands()) ops.push_back(map_literals(g, map));
  switch (f.kind()) {
    case FormulaKind::conjunction:
      return Formula::conjunction(std::move(ops));
    case FormulaKind::disjunction:
      return Formula::disjunction(std::move(ops));
    case FormulaKind::negation:
      return Formula::negation(std::move(ops[0]));
    case FormulaKind::implication:
      return Formula::implication(std::move(ops[0]), std::move(ops[1]));
    default:
      return Formula::equivalence(std::move(ops[0]), std::move(ops[1]));
  }
}

}  // namespace craigtab
