#include "craigtab/unify.hpp"

#include <functional>
#include <set>

namespace craigtab {

const Term* Substitution::lookup(Symbol var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (map_.empty() || t.is_ground()) return t;
  if (t.is_variable()) {
    const Term* v = lookup(t.symbol());
    return v ? *v : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !(args.back() == a);
  }
  if (!changed) return t;
  return Term::function(t.symbol(), std::move(args));
}

Literal Substitution::apply(const Literal& l) const {
  if (map_.empty() || l.is_ground()) return l;
  std::vector<Term> args;
  args.reserve(l.args().size());
  for (const Term& a : l.args()) args.push_back(apply(a));
  return Literal(l.positive(), l.predicate(), std::move(args));
}

Clause Substitution::apply(const Clause& c) const {
  Clause out;
  out.reserve(c.size());
  for (const Literal& l : c) out.push_back(apply(l));
  return out;
}

Formula Substitution::apply(const Formula& f) const {
  if (map_.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::literal:
      return Formula::literal(apply(f.lit()));
    case FormulaKind::top:
    case FormulaKind::bottom:
      return f;
    case FormulaKind::forall:
    case FormulaKind::exists: {
      if (!lookup(f.bound_var())) {
        return Formula::quantifier(f.kind() == FormulaKind::forall,
                                   f.bound_var(), apply(f.body()));
      }
      Substitution inner = *this;
      inner.map_.erase(f.bound_var());
      return Formula::quantifier(f.kind() == FormulaKind::forall,
                                 f.bound_var(), inner.apply(f.body()));
    }
    default:
      break;
  }
  std::vector<Formula> ops;
  for (const Formula& g : f.operands()) ops.push_back(apply(g));
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

void BindingStore::undo(Mark m) {
  while (trail_.size() > m) {
    bindings_.erase(trail_.back());
    trail_.pop_back();
  }
}

Term BindingStore::walk(Term t) const {
  while (t.is_variable()) {
    auto it = bindings_.find(t.symbol());
    if (it == bindings_.end()) break;
    t = it->second;
  }
  return t;
}

Term BindingStore::resolve(const Term& t) const {
  if (t.is_ground() || bindings_.empty()) return t;
  Term w = walk(t);
  if (w.is_variable() || w.is_ground()) return w;
  std::vector<Term> args;
  args.reserve(w.arity());
  for (const Term& a : w.args()) args.push_back(resolve(a));
  return Term::function(w.symbol(), std::move(args));
}

Literal BindingStore::resolve(const Literal& l) const {
  if (l.is_ground() || bindings_.empty()) return l;
  std::vector<Term> args;
  args.reserve(l.args().size());
  for (const Term& a : l.args()) args.push_back(resolve(a));
  return Literal(l.positive(), l.predicate(), std::move(args));
}

bool BindingStore::occurs(Symbol var, const Term& t) const {
  Term w = walk(t);
  if (w.is_variable()) return w.symbol() == var;
  if (w.is_ground()) return false;
  for (const Term& a : w.args()) {
    if (occurs(var, a)) return true;
  }
  return false;
}

void BindingStore::bind(Symbol var, Term value) {
  bindings_.emplace(var, std::move(value));
  trail_.push_back(var);
}

bool BindingStore::unify(const Term& a, const Term& b) {
  Term x = walk(a);
  Term y = walk(b);
  if (x == y) return true;
  if (x.is_variable()) {
    if (occurs(x.symbol(), y)) return false;
    bind(x.symbol(), y);
    return true;
  }
  if (y.is_variable()) {
    if (occurs(y.symbol(), x)) return false;
    bind(y.symbol(), x);
    return true;
  }
  if (x.symbol() != y.symbol() || x.arity() != y.arity()) return false;
  return unify_args(x.args(), y.args());
}

bool BindingStore::unify_args(std::span<const Term> a, std::span<const Term> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!unify(a[i], b[i])) return false;
  }
  return true;
}

bool BindingStore::unify_atoms(const Literal& a, const Literal& b) {
  if (a.predicate() != b.predicate()) return false;
  return unify_args(a.args(), b.args());
}

Substitution BindingStore::to_substitution() const {
  Substitution s;
  for (const auto& [var, value] : bindings_) s.bind(var, resolve(value));
  return s;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  BindingStore store;
  if (!store.unify(a, b)) return std::nullopt;
  return store.to_substitution();
}

std::optional<Substitution> unify_args(std::span<const Term> a,
                                       std::span<const Term> b) {
  BindingStore store;
  if (!store.unify_args(a, b)) return std::nullopt;
  return store.to_substitution();
}

bool match(const Term& pattern, const Term& target, Substitution& sub) {
  if (pattern.is_variable()) {
    if (const Term* bound = sub.lookup(pattern.symbol())) {
      return *bound == target;
    }
    sub.bind(pattern.symbol(), target);
    return true;
  }
  if (target.is_variable() || pattern.symbol() != target.symbol() ||
      pattern.arity() != target.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], sub)) return false;
  }
  return true;
}

bool match(const Literal& pattern, const Literal& target, Substitution& sub) {
  if (pattern.positive() != target.positive() ||
      pattern.predicate() != target.predicate() ||
      pattern.args().size() != target.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], sub)) return false;
  }
  return true;
}

namespace {

// Every literal of `general` is mapped onto some literal of `instance` and
// every literal of `instance` is hit.
bool match_as_sets(const Clause& instance, const Clause& general,
                   std::size_t index, Substitution& sub,
                   std::vector<int>& hits) {
  if (index == general.size()) {
    for (int h : hits) {
      if (h == 0) return false;
    }
    return true;
  }
  for (std::size_t j = 0; j < instance.size(); ++j) {
    Substitution trial = sub;
    if (!match(general[index], instance[j], trial)) continue;
    ++hits[j];
    if (match_as_sets(instance, general, index + 1, trial, hits)) {
      sub = std::move(trial);
      return true;
    }
    --hits[j];
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_clause(const Clause& instance, const Clause& general) {
  if (instance.size() == general.size()) {
    Substitution sub;
    bool ok = true;
    for (std::size_t i = 0; ok && i < general.size(); ++i) {
      ok = match(general[i], instance[i], sub);
    }
    if (ok) return sub;
  }
  if (general.empty() || instance.empty()) {
    if (general.empty() && instance.empty()) return Substitution{};
    return std::nullopt;
  }
  Clause inst = dedup_literals(instance);
  Substitution sub;
  std::vector<int> hits(inst.size(), 0);
  if (match_as_sets(inst, general, 0, sub, hits)) return sub;
  return std::nullopt;
}

bool is_instance_of(const Clause& instance, const Clause& general) {
  return match_clause(instance, general).has_value();
}

bool is_variant(const Clause& a, const Clause& b) {
  Clause x = dedup_literals(a);
  Clause y = dedup_literals(b);
  if (x.size() != y.size()) return false;
  return is_instance_of(x, y) && is_instance_of(y, x);
}

}  // namespace craigtab
