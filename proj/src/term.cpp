#include "craigtab/term.hpp"

#include <algorithm>
#include <unordered_set>

namespace craigtab {

struct Term::Node {
  bool variable;
  Symbol symbol;
  std::vector<Term> args;
  std::size_t hash;
  std::size_t depth;
  bool ground;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::variable(Symbol name) {
  auto node = std::make_shared<Node>();
  node->variable = true;
  node->symbol = name;
  node->hash = mix(0x51ed27, name.id());
  node->depth = 1;
  node->ground = false;
  return Term(std::move(node));
}

Term Term::function(Symbol f, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->variable = false;
  node->symbol = f;
  std::size_t h = mix(0x7f4a7c, f.id());
  std::size_t depth = 0;
  bool ground = true;
  for (const Term& a : args) {
    h = mix(h, a.hash());
    depth = std::max(depth, a.depth());
    ground = ground && a.is_ground();
  }
  node->hash = h;
  node->depth = depth + 1;
  node->ground = ground;
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::is_variable() const { return node_->variable; }
Symbol Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::args() const { return node_->args; }
bool Term::is_ground() const { return node_->ground; }
std::size_t Term::depth() const { return node_->depth; }
std::size_t Term::hash() const { return node_->hash; }

bool Term::contains(const Term& t) const {
  if (*this == t) return true;
  if (node_->depth <= t.depth()) return false;
  for (const Term& a : node_->args) {
    if (a.contains(t)) return true;
  }
  return false;
}

bool Term::contains_variable(Symbol var) const {
  if (node_->variable) return node_->symbol == var;
  if (node_->ground) return false;
  for (const Term& a : node_->args) {
    if (a.contains_variable(var)) return true;
  }
  return false;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  if (a.node_->variable != b.node_->variable) return false;
  if (a.node_->symbol != b.node_->symbol) return false;
  return a.node_->args == b.node_->args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.node_->variable != b.node_->variable) {
    return a.node_->variable ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  if (auto c = a.node_->symbol <=> b.node_->symbol; c != 0) return c;
  const auto& x = a.node_->args;
  const auto& y = b.node_->args;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Literal::Literal(bool positive, Symbol predicate, std::vector<Term> args)
    : positive_(positive), predicate_(predicate), args_(std::move(args)) {
  std::size_t h = mix(positive_ ? 0x1234 : 0x4321, predicate_.id());
  for (const Term& a : args_) h = mix(h, a.hash());
  hash_ = h;
}

bool Literal::is_ground() const {
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& t) { return t.is_ground(); });
}

bool Literal::complements(const Literal& other) const {
  return positive_ != other.positive_ && same_atom(other);
}

bool Literal::same_atom(const Literal& other) const {
  return predicate_ == other.predicate_ && args_ == other.args_;
}

bool operator==(const Literal& a, const Literal& b) {
  return a.hash_ == b.hash_ && a.positive_ == b.positive_ &&
         a.predicate_ == b.predicate_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  // negative before positive
  if (a.positive_ == b.positive_) return std::strong_ordering::equal;
  return a.positive_ ? std::strong_ordering::greater
                     : std::strong_ordering::less;
}

bool same_literal_set(const Clause& a, const Clause& b) {
  std::unordered_set<Literal> sa(a.begin(), a.end());
  std::unordered_set<Literal> sb(b.begin(), b.end());
  return sa == sb;
}

Clause dedup_literals(Clause clause) {
  Clause out;
  out.reserve(clause.size());
  std::unordered_set<Literal> seen;
  for (Literal& l : clause) {
    if (seen.insert(l).second) out.push_back(std::move(l));
  }
  return out;
}

bool is_tautology(const Clause& clause) {
  std::unordered_set<Literal> seen(clause.begin(), clause.end());
  for (const Literal& l : clause) {
    if (seen.count(l.complement())) return true;
  }
  return false;
}

}  // namespace craigtab
