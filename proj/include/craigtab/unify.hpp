#pragma once

#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

// Finite map from variables to terms, applied simultaneously.
class Substitution {
 public:
  Substitution() = default;

  void bind(Symbol var, Term value) { map_[var] = std::move(value); }
  const Term* lookup(Symbol var) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<Symbol, Term>& bindings() const { return map_; }

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;
  // Replaces free occurrences only; the substituted terms must not contain
  // variables bound in `f`.
  Formula apply(const Formula& f) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Symbol, Term> map_;
};

// Triangular binding store with an undo trail, used by the prover and by
// unify(). Bindings are never cyclic because every bind goes through the
// occurs check.
class BindingStore {
 public:
  using Mark = std::size_t;

  Mark mark() const { return trail_.size(); }
  // Variables bound since `m`, oldest first.
  std::span<const Symbol> bound_since(Mark m) const {
    return std::span<const Symbol>(trail_).subspan(m);
  }
  void undo(Mark m);

  // Follows variable bindings at the top of `t` only.
  Term walk(Term t) const;
  // Applies all bindings recursively.
  Term resolve(const Term& t) const;
  Literal resolve(const Literal& l) const;

  bool unify(const Term& a, const Term& b);
  bool unify_args(std::span<const Term> a, std::span<const Term> b);
  // Unifies the atoms of two literals, ignoring their signs.
  bool unify_atoms(const Literal& a, const Literal& b);

  std::size_t size() const { return trail_.size(); }
  // The bindings as an idempotent substitution.
  Substitution to_substitution() const;

 private:
  bool occurs(Symbol var, const Term& t) const;
  void bind(Symbol var, Term value);

  std::unordered_map<Symbol, Term> bindings_;
  std::vector<Symbol> trail_;
};

// Most general unifier with occurs check. nullopt when the terms do not unify.
std::optional<Substitution> unify(const Term& a, const Term& b);
std::optional<Substitution> unify_args(std::span<const Term> a,
                                       std::span<const Term> b);

// One-way matching: extends `sub` so that pattern·sub == target. Variables of
// `target` are treated as constants.
bool match(const Term& pattern, const Term& target, Substitution& sub);
bool match(const Literal& pattern, const Literal& target, Substitution& sub);

// True if some substitution maps `general` onto `instance`, literal by literal
// in order, or (failing that) as literal sets.
bool is_instance_of(const Clause& instance, const Clause& general);
// The substitution found by is_instance_of.
std::optional<Substitution> match_clause(const Clause& instance, const Clause& general);

// True if the clauses are equal up to a bijective variable renaming, compared
// as literal sets.
bool is_variant(const Clause& a, const Clause& b);

}  // namespace craigtab
