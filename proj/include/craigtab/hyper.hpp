#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "craigtab/tableau.hpp"

namespace craigtab {

inline constexpr std::size_t kDefaultMaxNodes = 10'000'000;

// The string I1 ... In ω b for a node N′: Ii counts the right siblings of the
// i-th node on the path from the root (I1 = 0) to N′, and b is the number of
// distinct negative literals labeling inner descendants of N′. Strings compare
// lexicographically with ω above every number.
struct Measure {
  std::vector<std::uint64_t> code;
  std::uint64_t badlits = 0;

  std::vector<std::uint64_t> sequence() const;
  std::string to_string() const;  // e.g. "0 ω 2"

  friend std::strong_ordering operator<=>(const Measure& a, const Measure& b);
  friend bool operator==(const Measure& a, const Measure& b) = default;
};

// Child indices from the root.
using NodePath = std::vector<std::size_t>;

const TableauNode& node_at(const TableauNode& root, const NodePath& path);
TableauNode& node_at(TableauNode& root, const NodePath& path);

Measure measure(const Tableau& t, const NodePath& path);

struct ConversionRound {
  NodePath selected;  // N′
  Measure measure;
  std::size_t size_after = 0;
  SimplifyStats simplify;
};

struct ConversionTrace {
  SimplifyStats initial_simplify;
  std::vector<ConversionRound> rounds;

  std::size_t total_rounds() const { return rounds.size(); }
  std::size_t regularity_firings() const;
  // Every round's measure is strictly below the previous one.
  bool strictly_decreasing() const;
};

struct HyperOptions {
  std::size_t max_nodes = kDefaultMaxNodes;
  bool record_trace = true;
};

struct HyperResult {
  Tableau tableau;
  ConversionTrace trace;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  std::size_t rounds = 0;
};

// Converts a closed tableau into a regular, leaf-closed hyper tableau whose
// clauses are clauses of the input. Throws ContractError for an open tableau
// and ResourceError when the tree exceeds max_nodes nodes.
HyperResult hyper_convert(const Tableau& t, const HyperOptions& options = {});

// Leftmost inner child with a negative literal of the first node in pre-order
// that has one. Empty when the tableau is hyper.
std::optional<NodePath> select_round_node(const Tableau& t);

}  // namespace craigtab
