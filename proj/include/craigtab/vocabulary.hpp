#pragma once

#include <functional>
#include <map>
#include <set>
#include <span>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

enum class Polarity { positive, negative };

struct PolarityVars {
  std::set<Symbol> positive;
  std::set<Symbol> negative;
};

struct Vocabulary {
  std::set<Symbol> functions;
  std::set<std::pair<Symbol, Polarity>> predicates;

  bool subset_of(const Vocabulary& other) const;
  Vocabulary intersect(const Vocabulary& other) const;
  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

// Function and predicate arities of a problem. Function and predicate names
// live in separate namespaces.
struct Signature {
  std::map<Symbol, std::size_t> functions;
  std::map<Symbol, std::size_t> predicates;

  // Records the symbols of `f`; throws ContractError on an arity conflict.
  void add(const Formula& f);
  void add(const Clause& c);
  void add(const Literal& l);
  void add(const Term& t);
};

std::set<Symbol> free_vars(const Formula& f);
std::set<Symbol> vars(const Clause& c);
std::set<Symbol> vars(const Literal& l);
void collect_vars(const Term& t, std::set<Symbol>& out);

// Free variables with an occurrence in an atom of positive (negative)
// polarity. Antecedents of implications flip polarity; both sides of an
// equivalence count with both polarities.
PolarityVars polarity_vars(const Formula& f);
PolarityVars polarity_vars(const Clause& c);

Vocabulary vocabulary(const Formula& f);
Vocabulary vocabulary(const Clause& c);
std::set<Symbol> functions(const Formula& f);
void collect_functions(const Term& t, std::set<Symbol>& out);

enum class OccurrenceFilter { all, positive, negative };

// Classifies terms as members of some (possibly infinite) term set S.
using TermClass = std::function<bool(const Term&)>;

TermClass term_set(std::set<Term> members);

// S-terms occurring in `f` at a position that is not inside another S-term,
// restricted to literals of the given sign. `f` must be quantifier-free NNF.
std::set<Term> smax(const TermClass& s, const Formula& f,
                    OccurrenceFilter filter = OccurrenceFilter::all);
std::set<Term> smax(const TermClass& s, const Clause& c,
                    OccurrenceFilter filter = OccurrenceFilter::all);
std::set<Term> smax(const TermClass& s, std::span<const Literal> lits,
                    OccurrenceFilter filter = OccurrenceFilter::all);

}  // namespace craigtab
