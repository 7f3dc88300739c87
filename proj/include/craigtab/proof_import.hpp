#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "craigtab/normalize.hpp"
#include "craigtab/tableau.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

// Resolution proof document, one step per line:
//
//   1 input p.
//   2 input ~p | q.
//   3 resolve(1, 2, p) q.
//
// `resolve(a, b, A)` resolves upon the atom A, which occurs positively in the
// clause of step a and negatively in that of step b. Steps may only cite
// earlier steps. The last step is the conclusion. `$false` is the empty
// clause; lines starting with `#` or `%` are comments.
enum class ProofRule { input, resolve };

struct ProofStep {
  std::string id;
  ProofRule rule = ProofRule::input;
  std::string left;
  std::string right;
  Literal atom;
  Clause clause;
  std::size_t line = 0;

  friend bool operator==(const ProofStep& a, const ProofStep& b) {
    return a.id == b.id && a.rule == b.rule && a.left == b.left && a.right == b.right &&
           a.atom == b.atom && a.clause == b.clause;
  }
};

struct ProofDocument {
  std::vector<ProofStep> steps;

  const ProofStep* find(std::string_view id) const;
  std::vector<Clause> input_clauses() const;
  friend bool operator==(const ProofDocument&, const ProofDocument&) = default;
};

// Syntax only. Throws ParseError for malformed lines, repeated ids, dangling
// references and rules other than input and resolve (paramodulation gets its
// own diagnostic).
ProofDocument read_proof(std::string_view text);
std::string write_proof(const ProofDocument& doc);

// Tree of resolution steps. Leaves are input clause instances; a resolve node
// has exactly two children, the first containing `atom`, the second its
// complement.
struct DeductionNode {
  ProofRule rule = ProofRule::input;
  std::string step;
  Clause clause;
  Literal atom;
  std::vector<DeductionNode> children;
};

std::size_t deduction_size(const DeductionNode& d);

// Checks every resolve step against the recomputed resolvent (equal up to
// variable renaming, as literal sets) and expands the DAG below the last step
// into a tree whose clauses are the instances each use needs. Throws
// StructuralError for an invalid step and ResourceError past `max_nodes`.
inline constexpr std::size_t kDefaultMaxProofNodes = 10'000'000;
DeductionNode expand_proof(const ProofDocument& doc,
                           std::size_t max_nodes = kDefaultMaxProofNodes);

// read_proof followed by expand_proof.
DeductionNode parse_proof(std::string_view text,
                          std::size_t max_nodes = kDefaultMaxProofNodes);

// Maps the remaining variables to fresh constants, in pre-order of first
// occurrence, and checks every step as a ground resolution step: the first
// parent contains A, the second ¬A, and the rest of both is contained in the
// node's clause.
DeductionNode ground_deduction(const DeductionNode& d, FreshSymbols& fresh);
DeductionNode ground_deduction(const DeductionNode& d);

// A closed ground tableau whose inner clauses are atomic cuts ¬A ∨ A and whose
// clauses above leaves are input clause instances. Below ¬A goes the parent
// containing A, below A the other one. Throws ContractError unless `d` is a
// ground refutation.
Tableau to_cut_normal_form(const DeductionNode& d,
                           const std::vector<Clause>& input_clauses = {});

}  // namespace craigtab
