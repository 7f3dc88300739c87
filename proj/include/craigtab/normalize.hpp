#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/term.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab {

inline constexpr std::size_t kDefaultClauseLimit = 100000;

enum class Quantifier { forall, exists };

struct QuantifiedVar {
  Quantifier quantifier;
  Symbol var;
  friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

enum class MatrixKind { cnf, dnf };

// Quantifier prefix over a clause matrix. For kind cnf the matrix is a
// conjunction of clauses, for dnf a disjunction of conjunctive clauses.
struct PrenexNormalForm {
  std::vector<QuantifiedVar> prefix;
  std::vector<Clause> matrix;
  MatrixKind kind = MatrixKind::cnf;

  std::set<Symbol> universal_vars() const;
  std::set<Symbol> existential_vars() const;
  Formula to_formula() const;

  friend bool operator==(const PrenexNormalForm&,
                         const PrenexNormalForm&) = default;
};

// Negation normal form over literals, truth constants, conjunction,
// disjunction and quantifiers. The two polarities are exact duals of each
// other, so nnf(¬F) is the dual of nnf(F) node for node.
Formula nnf(const Formula& f);

// Renames bound variables of an NNF formula apart from each other and from
// the free variables. A bound name is kept when it is still unused, otherwise
// it becomes name_N. The walk is pre-order, so dual formulas get the same
// names.
Formula standardize_apart(const Formula& f);

// Pushes quantifiers of an NNF formula inward: ∀ over ∧ and ∃ over ∨ are
// distributed, operands without the bound variable are moved out, and
// vacuous quantifiers are dropped. The result is equivalent to `f`.
Formula miniscope(const Formula& f);

// Pulls quantifiers of a standardized NNF formula to the front, left to right.
struct Prenexed {
  std::vector<QuantifiedVar> prefix;
  Formula matrix;
};
Prenexed prenex(const Formula& f);

// Switches quantifiers, conjunction and disjunction, truth constants, and
// complements literals. Throws ContractError unless `f` is prenex with an NNF
// matrix.
Formula dual(const Formula& f);
PrenexNormalForm dual(const PrenexNormalForm& f);

// Naive distribution after nnf, standardization and prenexing. Repeated
// literals inside a clause and clauses equal as literal sets are dropped;
// nothing else is. Throws ResourceError past `max_clauses`.
PrenexNormalForm cnf(const Formula& f, std::size_t max_clauses = kDefaultClauseLimit);
PrenexNormalForm dnf(const Formula& f, std::size_t max_clauses = kDefaultClauseLimit);

// Hands out names not occurring in a reserved set.
class FreshSymbols {
 public:
  FreshSymbols() = default;
  explicit FreshSymbols(std::set<std::string> reserved)
      : reserved_(std::move(reserved)) {}

  void reserve(std::string_view name) { reserved_.emplace(name); }
  void reserve(const Vocabulary& voc);
  // prefix + counter, e.g. sk0, sk1, ...
  Symbol next(const std::string& prefix);
  // `base` itself if unused, else base_1, base_2, ...
  Symbol fresh_like(const std::string& base);

 private:
  std::set<std::string> reserved_;
  std::map<std::string, std::size_t> counters_;
};

struct FrozenPair {
  Formula f;
  Formula g;
  // Placeholders of variables free in both F and G.
  std::set<Symbol> shared;
  std::map<Symbol, Symbol> var_to_const;
  std::map<Symbol, Symbol> const_to_var;
};

// Replaces each free variable x of F or G by a dedicated fresh constant c_x.
FrozenPair freeze_free_vars(const Formula& f, const Formula& g);

// Replaces constants by variables according to `const_to_var`.
Formula unfreeze(const Formula& f, const std::map<Symbol, Symbol>& const_to_var);

struct ClausificationResult {
  std::vector<Clause> clauses;
  std::set<Symbol> skolem_functions;
  std::set<Symbol> universal_vars;
};

enum class ClausifyPolarity { as_stated, negated };

// cnf of the sentence (or of its negation) with existential variables replaced
// by Skolem terms over the universal variables quantified before them.
ClausificationResult skolemize_clausify(const Formula& sentence,
                                        ClausifyPolarity polarity,
                                        FreshSymbols& fresh,
                                        std::size_t max_clauses = kDefaultClauseLimit);

inline const Symbol& equality_symbol() {
  static const Symbol eq("=");
  return eq;
}

// Reflexivity, symmetry, transitivity, and substitutivity for each argument
// position of every function and predicate (other than `=`) of `sig`.
std::vector<Clause> equality_axioms(const Signature& sig);

}  // namespace craigtab
