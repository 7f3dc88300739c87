#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "craigtab/symbol.hpp"

namespace craigtab {

// First-order term: a variable or a function symbol applied to arguments.
// Constants are 0-ary functions. Nodes are immutable and shared, so copying a
// Term is cheap.
class Term {
 public:
  Term() = default;

  static Term variable(Symbol name);
  static Term function(Symbol f, std::vector<Term> args = {});

  bool is_variable() const;
  Symbol symbol() const;
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }

  bool is_ground() const;
  // A constant has depth 1, f(a) depth 2, and a variable depth 1.
  std::size_t depth() const;
  std::size_t hash() const;

  // True if `t` occurs in this term (including the term itself).
  bool contains(const Term& t) const;
  bool contains_variable(Symbol var) const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Atom or negated atom.
class Literal {
 public:
  Literal() = default;
  Literal(bool positive, Symbol predicate, std::vector<Term> args = {});

  bool positive() const { return positive_; }
  bool negative() const { return !positive_; }
  Symbol predicate() const { return predicate_; }
  std::span<const Term> args() const { return args_; }
  const std::vector<Term>& arg_vector() const { return args_; }
  std::size_t hash() const { return hash_; }
  bool is_ground() const;

  Literal complement() const { return Literal(!positive_, predicate_, args_); }
  Literal with_sign(bool positive) const {
    return Literal(positive, predicate_, args_);
  }
  bool complements(const Literal& other) const;
  // Same predicate and arguments, ignoring sign.
  bool same_atom(const Literal& other) const;

  friend bool operator==(const Literal& a, const Literal& b);
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  bool positive_ = true;
  Symbol predicate_;
  std::vector<Term> args_;
  std::size_t hash_ = 0;
};

// Disjunction of literals, or a conjunction when used as a conjunctive clause
// of a DNF matrix. The empty clause is permitted.
using Clause = std::vector<Literal>;

// Clause equality as literal sets.
bool same_literal_set(const Clause& a, const Clause& b);
// Removes repeated literals, keeping first occurrences.
Clause dedup_literals(Clause clause);
bool is_tautology(const Clause& clause);

}  // namespace craigtab

template <>
struct std::hash<craigtab::Term> {
  std::size_t operator()(const craigtab::Term& t) const noexcept {
    return t.hash();
  }
};

template <>
struct std::hash<craigtab::Literal> {
  std::size_t operator()(const craigtab::Literal& l) const noexcept {
    return l.hash();
  }
};
