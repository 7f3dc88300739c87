#include "craigtab/hyper.hpp"

#include <limits>
#include <set>

#include "craigtab/errors.hpp"

namespace craigtab {

namespace {

constexpr std::uint64_t kOmega = std::numeric_limits<std::uint64_t>::max();

bool has_bad_child(const TableauNode& n) {
  for (const TableauNode& c : n.children) {
    if (!c.is_leaf() && c.literal->negative()) return true;
  }
  return false;
}

bool find_selected(const TableauNode& n, NodePath& path) {
  if (has_bad_child(n)) return true;
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    if (find_selected(n.children[i], path)) return true;
    path.pop_back();
  }
  return false;
}

void collect_badlits(const TableauNode& n, std::set<Literal>& out) {
  for (const TableauNode& c : n.children) {
    if (!c.is_leaf()) {
      if (c.literal->negative()) out.insert(*c.literal);
      collect_badlits(c, out);
    }
  }
}

std::size_t count_nodes(const TableauNode& n) {
  std::size_t k = 1;
  for (const TableauNode& c : n.children) k += count_nodes(c);
  return k;
}

void collect_leaves(TableauNode& n, const Literal& lit, std::vector<TableauNode*>& out) {
  for (TableauNode& c : n.children) {
    if (c.is_leaf()) {
      if (*c.literal == lit) out.push_back(&c);
    } else {
      collect_leaves(c, lit, out);
    }
  }
}

}  // namespace

std::vector<std::uint64_t> Measure::sequence() const {
  std::vector<std::uint64_t> s = code;
  s.push_back(kOmega);
  s.push_back(badlits);
  return s;
}

std::string Measure::to_string() const {
  std::string out;
  for (std::uint64_t i : code) out += std::to_string(i) + " ";
  out += "ω " + std::to_string(badlits);
  return out;
}

std::strong_ordering operator<=>(const Measure& a, const Measure& b) {
  std::vector<std::uint64_t> x = a.sequence();
  std::vector<std::uint64_t> y = b.sequence();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

const TableauNode& node_at(const TableauNode& root, const NodePath& path) {
  const TableauNode* n = &root;
  for (std::size_t i : path) {
    if (i >= n->children.size()) throw ContractError("node path out of range");
    n = &n->children[i];
  }
  return *n;
}

TableauNode& node_at(TableauNode& root, const NodePath& path) {
  return const_cast<TableauNode&>(node_at(static_cast<const TableauNode&>(root), path));
}

Measure measure(const Tableau& t, const NodePath& path) {
  Measure m;
  m.code.push_back(0);
  const TableauNode* n = &t.root;
  for (std::size_t i : path) {
    if (i >= n->children.size()) throw ContractError("node path out of range");
    m.code.push_back(n->children.size() - i - 1);
    n = &n->children[i];
  }
  std::set<Literal> bad;
  collect_badlits(*n, bad);
  m.badlits = bad.size();
  return m;
}

std::size_t ConversionTrace::regularity_firings() const {
  std::size_t k = initial_simplify.regularity;
  for (const ConversionRound& r : rounds) k += r.simplify.regularity;
  return k;
}

bool ConversionTrace::strictly_decreasing() const {
  for (std::size_t i = 1; i < rounds.size(); ++i) {
    if (!(rounds[i].measure < rounds[i - 1].measure)) return false;
  }
  return true;
}

std::optional<NodePath> select_round_node(const Tableau& t) {
  NodePath path;
  if (find_selected(t.root, path)) return path;
  return std::nullopt;
}

HyperResult hyper_convert(const Tableau& input, const HyperOptions& options) {
  if (!is_closed(input)) throw ContractError("hyper conversion needs a closed tableau");
  HyperResult result;
  result.size_before = tree_size(input);
  Tableau t = input;
  simplify_in_place(t.root, &result.trace.initial_simplify);

  for (;;) {
    std::optional<NodePath> selected = select_round_node(t);
    if (!selected) break;
    ConversionRound round;
    if (options.record_trace) {
      round.selected = *selected;
      round.measure = measure(t, *selected);
    }

    TableauNode& prime = node_at(t.root, *selected);
    std::size_t n_index = 0;
    while (prime.children[n_index].is_leaf() || prime.children[n_index].literal->positive()) {
      ++n_index;
    }
    Literal n_literal = *prime.children[n_index].literal;

    std::vector<TableauNode> u = prime.children;
    u[n_index].children.clear();
    std::size_t u_size = 0;
    for (const TableauNode& c : u) u_size += count_nodes(c);

    std::vector<TableauNode> moved = std::move(prime.children[n_index].children);
    prime.children = std::move(moved);

    std::vector<TableauNode*> targets;
    collect_leaves(prime, n_literal.complement(), targets);
    std::size_t total = count_nodes(t.root);
    if (total + targets.size() * u_size > options.max_nodes) {
      throw ResourceError("hyper conversion exceeds node limit of " +
                          std::to_string(options.max_nodes));
    }
    for (TableauNode* m : targets) m->children = u;

    simplify_in_place(t.root, &round.simplify);
    ++result.rounds;
    if (options.record_trace) {
      round.size_after = tree_size(t);
      result.trace.rounds.push_back(std::move(round));
    }
  }
  result.size_after = tree_size(t);
  result.tableau = std::move(t);
  return result;
}

}  // namespace craigtab
