#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "craigtab/normalize.hpp"
#include "craigtab/term.hpp"

namespace craigtab {

enum class Side { F, G };

inline char side_char(Side s) { return s == Side::F ? 'F' : 'G'; }

// The root carries no literal. The literals of a node's children form its
// clause. `target_depth` is the depth (root = 0) of the ancestor a closing
// node closes against; is_closed() and simplify() fill it in.
struct TableauNode {
  std::optional<Literal> literal;
  std::optional<Side> side;
  std::vector<TableauNode> children;
  std::optional<std::size_t> target_depth;

  bool is_leaf() const { return children.empty(); }
  Clause clause() const;

  friend bool operator==(const TableauNode&, const TableauNode&) = default;
};

// Clausal tableau for the clause set `clauses`. The clause set may be left
// empty when it is not known (for example for a document read from disk).
struct Tableau {
  TableauNode root;
  std::vector<Clause> clauses;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// True if every branch contains complementary literals. A tableau whose root
// has no children is closed only when its clause set contains the empty
// clause. Sets target_depth of every closing node to its nearest complementary
// ancestor and clears it elsewhere.
bool is_closed(Tableau& t);
bool is_closed(const Tableau& t);

// Closing nodes are exactly the leaves.
bool is_leaf_closed(const Tableau& t);
// No node repeats the literal of one of its ancestors.
bool is_regular(const Tableau& t);
// Nodes with a negative literal are exactly the leaves.
bool is_hyper(const Tableau& t);
bool is_ground(const Tableau& t);

// Number of inner nodes, root included.
std::size_t tree_size(const Tableau& t);
std::size_t node_count(const Tableau& t);
// The clause of every inner node, in pre-order.
std::vector<Clause> tableau_clauses(const Tableau& t);

struct SimplifyStats {
  std::size_t regularity = 0;
  std::size_t closing = 0;
};

// Applies the two simplification rules until neither applies: a node that
// repeats an ancestor literal hands its children to its parent, and a closing
// inner node loses its children. Nodes are visited in pre-order.
Tableau simplify(const Tableau& t, SimplifyStats* stats = nullptr);
void simplify_in_place(TableauNode& root, SimplifyStats* stats = nullptr);

struct ProverLimits {
  std::size_t max_depth = 64;
  std::uint64_t max_inferences = 50'000'000;
  std::optional<std::chrono::milliseconds> timeout;
};

enum class ProofStatus { proved, satisfiable, resource_out };

std::string to_string(ProofStatus s);

struct ProofResult {
  ProofStatus status = ProofStatus::resource_out;
  Tableau tableau;
  std::uint64_t inferences = 0;
  std::size_t depth_reached = 0;
  // Why the search stopped when status is resource_out.
  std::string reason;
};

// Connection tableau search with iterative deepening on branch length.
// `satisfiable` is reported only when a complete iteration ran without being
// cut off by the depth bound. On success the tableau is closed and
// leaf-closed, with variables instantiated by the final unifier.
ProofResult prove(const std::vector<Clause>& clauses, const ProverLimits& limits = {});

enum class GroundingPolicy { f_side, g_side, round_robin };

struct GroundingResult {
  Tableau tableau;
  std::set<Symbol> fresh_f;
  std::set<Symbol> fresh_g;
};

// Maps each variable left in the tableau to a dedicated fresh constant, in
// order of first occurrence in pre-order.
GroundingResult ground_tableau(const Tableau& t, GroundingPolicy policy,
                               FreshSymbols& fresh);

enum class TiePolicy { prefer_f, prefer_g };

// Labels each clause with the side whose clause set it instantiates. Throws
// StructuralError for a clause that instantiates neither.
Tableau assign_sides(const Tableau& t, const std::vector<Clause>& f_clauses,
                     const std::vector<Clause>& g_clauses,
                     TiePolicy tie = TiePolicy::prefer_f);

}  // namespace craigtab
