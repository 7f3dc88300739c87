#include "craigtab/vocabulary.hpp"

#include <algorithm>
#include <string>

#include "craigtab/errors.hpp"

namespace craigtab {

bool Vocabulary::subset_of(const Vocabulary& other) const {
  return std::includes(other.functions.begin(), other.functions.end(),
                       functions.begin(), functions.end()) &&
         std::includes(other.predicates.begin(), other.predicates.end(),
                       predicates.begin(), predicates.end());
}

Vocabulary Vocabulary::intersect(const Vocabulary& other) const {
  Vocabulary out;
  std::set_intersection(functions.begin(), functions.end(),
                        other.functions.begin(), other.functions.end(),
                        std::inserter(out.functions, out.functions.end()));
  std::set_intersection(predicates.begin(), predicates.end(),
                        other.predicates.begin(), other.predicates.end(),
                        std::inserter(out.predicates, out.predicates.end()));
  return out;
}

namespace {

void record(std::map<Symbol, std::size_t>& table, Symbol s, std::size_t arity,
            const char* what) {
  auto [it, inserted] = table.emplace(s, arity);
  if (!inserted && it->second != arity) {
    throw ContractError(std::string(what) + " '" + std::string(s.name()) +
                        "' used with arities " + std::to_string(it->second) +
                        " and " + std::to_string(arity));
  }
}

}  // namespace

void Signature::add(const Term& t) {
  if (t.is_variable()) return;
  record(functions, t.symbol(), t.arity(), "function");
  for (const Term& a : t.args()) add(a);
}

void Signature::add(const Literal& l) {
  record(predicates, l.predicate(), l.args().size(), "predicate");
  for (const Term& a : l.args()) add(a);
}

void Signature::add(const Clause& c) {
  for (const Literal& l : c) add(l);
}

void Signature::add(const Formula& f) {
  if (f.is_literal()) {
    add(f.lit());
    return;
  }
  for (const Formula& g : f.operands()) add(g);
}

void collect_vars(const Term& t, std::set<Symbol>& out) {
  if (t.is_ground()) return;
  if (t.is_variable()) {
    out.insert(t.symbol());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<Symbol> vars(const Literal& l) {
  std::set<Symbol> out;
  for (const Term& a : l.args()) collect_vars(a, out);
  return out;
}

std::set<Symbol> vars(const Clause& c) {
  std::set<Symbol> out;
  for (const Literal& l : c) {
    for (const Term& a : l.args()) collect_vars(a, out);
  }
  return out;
}

namespace {

void free_vars_rec(const Formula& f, std::set<Symbol>& bound,
                   std::set<Symbol>& out) {
  switch (f.kind()) {
    case FormulaKind::literal: {
      std::set<Symbol> vs = vars(f.lit());
      for (Symbol v : vs) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    }
    case FormulaKind::forall:
    case FormulaKind::exists: {
      bool fresh = bound.insert(f.bound_var()).second;
      free_vars_rec(f.body(), bound, out);
      if (fresh) bound.erase(f.bound_var());
      return;
    }
    default:
      for (const Formula& g : f.operands()) free_vars_rec(g, bound, out);
  }
}

// polarity: +1 positive, -1 negative, 0 both
void polarity_rec(const Formula& f, int polarity, std::set<Symbol>& bound,
                  PolarityVars& out, Vocabulary* voc) {
  switch (f.kind()) {
    case FormulaKind::literal: {
      const Literal& l = f.lit();
      int effective = l.positive() ? polarity : -polarity;
      std::set<Symbol> vs = vars(l);
      for (Symbol v : vs) {
        if (bound.count(v)) continue;
        if (effective >= 0) out.positive.insert(v);
        if (effective <= 0) out.negative.insert(v);
      }
      if (voc) {
        if (effective >= 0) voc->predicates.emplace(l.predicate(), Polarity::positive);
        if (effective <= 0) voc->predicates.emplace(l.predicate(), Polarity::negative);
        for (const Term& a : l.args()) collect_functions(a, voc->functions);
      }
      return;
    }
    case FormulaKind::top:
    case FormulaKind::bottom:
      return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
      for (const Formula& g : f.operands()) polarity_rec(g, polarity, bound, out, voc);
      return;
    case FormulaKind::negation:
      polarity_rec(f.operands()[0], -polarity, bound, out, voc);
      return;
    case FormulaKind::implication:
      polarity_rec(f.operands()[0], -polarity, bound, out, voc);
      polarity_rec(f.operands()[1], polarity, bound, out, voc);
      return;
    case FormulaKind::equivalence:
      polarity_rec(f.operands()[0], 0, bound, out, voc);
      polarity_rec(f.operands()[1], 0, bound, out, voc);
      return;
    case FormulaKind::forall:
    case FormulaKind::exists: {
      bool fresh = bound.insert(f.bound_var()).second;
      polarity_rec(f.body(), polarity, bound, out, voc);
      if (fresh) bound.erase(f.bound_var());
      return;
    }
  }
}

}  // namespace

std::set<Symbol> free_vars(const Formula& f) {
  std::set<Symbol> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

PolarityVars polarity_vars(const Formula& f) {
  std::set<Symbol> bound;
  PolarityVars out;
  polarity_rec(f, 1, bound, out, nullptr);
  return out;
}

PolarityVars polarity_vars(const Clause& c) {
  PolarityVars out;
  for (const Literal& l : c) {
    std::set<Symbol> vs = vars(l);
    (l.positive() ? out.positive : out.negative).insert(vs.begin(), vs.end());
  }
  return out;
}

void collect_functions(const Term& t, std::set<Symbol>& out) {
  if (t.is_variable()) return;
  out.insert(t.symbol());
  for (const Term& a : t.args()) collect_functions(a, out);
}

Vocabulary vocabulary(const Formula& f) {
  std::set<Symbol> bound;
  PolarityVars ignored;
  Vocabulary voc;
  polarity_rec(f, 1, bound, ignored, &voc);
  return voc;
}

Vocabulary vocabulary(const Clause& c) {
  Vocabulary voc;
  for (const Literal& l : c) {
    voc.predicates.emplace(l.predicate(), l.positive() ? Polarity::positive
                                                       : Polarity::negative);
    for (const Term& a : l.args()) collect_functions(a, voc.functions);
  }
  return voc;
}

std::set<Symbol> functions(const Formula& f) { return vocabulary(f).functions; }

TermClass term_set(std::set<Term> members) {
  return [members = std::move(members)](const Term& t) {
    return members.count(t) > 0;
  };
}

namespace {

void smax_term(const TermClass& s, const Term& t, std::set<Term>& out) {
  if (s(t)) {
    out.insert(t);
    return;
  }
  for (const Term& a : t.args()) smax_term(s, a, out);
}

bool accepts(OccurrenceFilter filter, bool positive) {
  switch (filter) {
    case OccurrenceFilter::all:
      return true;
    case OccurrenceFilter::positive:
      return positive;
    case OccurrenceFilter::negative:
      return !positive;
  }
  return true;
}

void smax_formula(const TermClass& s, const Formula& f, OccurrenceFilter filter,
                  std::set<Term>& out) {
  if (f.is_literal()) {
    if (!accepts(filter, f.lit().positive())) return;
    for (const Term& a : f.lit().args()) smax_term(s, a, out);
    return;
  }
  if (f.kind() == FormulaKind::negation || f.kind() == FormulaKind::implication ||
      f.kind() == FormulaKind::equivalence) {
    throw ContractError("smax expects an NNF formula");
  }
  for (const Formula& g : f.operands()) smax_formula(s, g, filter, out);
}

}  // namespace

std::set<Term> smax(const TermClass& s, const Formula& f,
                    OccurrenceFilter filter) {
  std::set<Term> out;
  smax_formula(s, f, filter, out);
  return out;
}

std::set<Term> smax(const TermClass& s, std::span<const Literal> lits,
                    OccurrenceFilter filter) {
  std::set<Term> out;
  for (const Literal& l : lits) {
    if (!accepts(filter, l.positive())) continue;
    for (const Term& a : l.args()) smax_term(s, a, out);
  }
  return out;
}

std::set<Term> smax(const TermClass& s, const Clause& c,
                    OccurrenceFilter filter) {
  return smax(s, std::span<const Literal>(c), filter);
}

}  // namespace craigtab
