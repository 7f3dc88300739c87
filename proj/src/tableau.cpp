#include "craigtab/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "craigtab/errors.hpp"
#include "craigtab/print.hpp"
#include "craigtab/unify.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab {

Clause TableauNode::clause() const {
  Clause c;
  c.reserve(children.size());
  for (const TableauNode& child : children) c.push_back(*child.literal);
  return c;
}

namespace {

bool mark_rec(TableauNode& n, std::vector<const Literal*>& path) {
  n.target_depth.reset();
  if (n.literal) {
    for (std::size_t j = path.size(); j-- > 0;) {
      if (path[j]->complements(*n.literal)) {
        n.target_depth = j + 1;
        break;
      }
    }
  }
  bool closing = n.target_depth.has_value();
  if (n.children.empty()) return closing;
  if (n.literal) path.push_back(&*n.literal);
  bool all = true;
  for (TableauNode& c : n.children) all = mark_rec(c, path) && all;
  if (n.literal) path.pop_back();
  return closing || all;
}

bool mark_targets(TableauNode& root) {
  std::vector<const Literal*> path;
  return mark_rec(root, path);
}

template <typename Visit>
void preorder(const TableauNode& n, Visit&& visit) {
  visit(n);
  for (const TableauNode& c : n.children) preorder(c, visit);
}

bool leaf_closing_rec(const TableauNode& n, bool is_root) {
  if (!is_root && n.is_leaf() != n.target_depth.has_value()) return false;
  for (const TableauNode& c : n.children) {
    if (!leaf_closing_rec(c, false)) return false;
  }
  return true;
}

bool regular_rec(const TableauNode& n, std::vector<const Literal*>& path) {
  if (n.literal) {
    for (const Literal* a : path) {
      if (*a == *n.literal) return false;
    }
    path.push_back(&*n.literal);
  }
  bool ok = true;
  for (const TableauNode& c : n.children) {
    if (!regular_rec(c, path)) {
      ok = false;
      break;
    }
  }
  if (n.literal) path.pop_back();
  return ok;
}

bool in_path(const std::vector<Literal>& path, const Literal& l) {
  return std::find(path.begin(), path.end(), l) != path.end();
}

bool complement_in_path(const std::vector<Literal>& path, const Literal& l) {
  for (const Literal& a : path) {
    if (a.complements(l)) return true;
  }
  return false;
}

void simplify_rec(TableauNode& n, std::vector<Literal>& path,
                  SimplifyStats& stats) {
  bool replaced = true;
  while (replaced) {
    replaced = false;
    for (TableauNode& child : n.children) {
      if (in_path(path, *child.literal)) {
        std::vector<TableauNode> grand = std::move(child.children);
        n.children = std::move(grand);
        ++stats.regularity;
        replaced = true;
        break;
      }
    }
  }
  for (TableauNode& child : n.children) {
    if (complement_in_path(path, *child.literal)) {
      if (!child.children.empty()) {
        child.children.clear();
        ++stats.closing;
      }
      continue;
    }
    path.push_back(*child.literal);
    simplify_rec(child, path, stats);
    path.pop_back();
  }
}

}  // namespace

bool is_closed(Tableau& t) {
  if (t.root.children.empty()) {
    return std::any_of(t.clauses.begin(), t.clauses.end(),
                       [](const Clause& c) { return c.empty(); });
  }
  return mark_targets(t.root);
}

bool is_closed(const Tableau& t) {
  Tableau copy = t;
  return is_closed(copy);
}

bool is_leaf_closed(const Tableau& t) {
  Tableau copy = t;
  if (!is_closed(copy)) return false;
  return leaf_closing_rec(copy.root, true);
}

bool is_regular(const Tableau& t) {
  std::vector<const Literal*> path;
  return regular_rec(t.root, path);
}

bool is_hyper(const Tableau& t) {
  bool ok = true;
  preorder(t.root, [&](const TableauNode& n) {
    if (n.literal && n.literal->negative() != n.is_leaf()) ok = false;
  });
  return ok;
}

bool is_ground(const Tableau& t) {
  bool ok = true;
  preorder(t.root, [&](const TableauNode& n) {
    if (n.literal && !n.literal->is_ground()) ok = false;
  });
  return ok;
}

std::size_t tree_size(const Tableau& t) {
  std::size_t n = 0;
  preorder(t.root, [&](const TableauNode& node) {
    if (!node.is_leaf() || !node.literal) ++n;
  });
  return n;
}

std::size_t node_count(const Tableau& t) {
  std::size_t n = 0;
  preorder(t.root, [&](const TableauNode&) { ++n; });
  return n;
}

std::vector<Clause> tableau_clauses(const Tableau& t) {
  std::vector<Clause> out;
  preorder(t.root, [&](const TableauNode& n) {
    if (!n.is_leaf()) out.push_back(n.clause());
  });
  return out;
}

void simplify_in_place(TableauNode& root, SimplifyStats* stats) {
  SimplifyStats local;
  std::vector<Literal> path;
  simplify_rec(root, path, stats ? *stats : local);
  mark_targets(root);
}

Tableau simplify(const Tableau& t, SimplifyStats* stats) {
  Tableau out = t;
  simplify_in_place(out.root, stats);
  return out;
}

std::string to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::proved:
      return "proved";
    case ProofStatus::satisfiable:
      return "satisfiable";
    case ProofStatus::resource_out:
      return "resource_out";
  }
  return "unknown";
}

namespace {

struct SearchAbort {
  std::string reason;
};

class ConnectionProver {
 public:
  ConnectionProver(const std::vector<Clause>& clauses, const ProverLimits& limits)
      : clauses_(clauses), limits_(limits) {
    // A tautology would repeat its goal on the path.
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (!is_tautology(clauses[i])) order_.push_back(i);
    }
    if (limits.timeout) {
      deadline_ = std::chrono::steady_clock::now() + *limits.timeout;
    }
  }

  ProofResult run() {
    ProofResult result;
    result.tableau.clauses = clauses_;
    bool any_start = std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) {
      return std::all_of(c.begin(), c.end(), [](const Literal& l) { return l.positive(); });
    });
    if (!any_start) {
      // Every clause has a negative literal, so making all atoms false is a model.
      result.status = ProofStatus::satisfiable;
      return result;
    }
    try {
      for (bound_ = 1; bound_ <= limits_.max_depth; ++bound_) {
        cut_off_ = false;
        result.depth_reached = bound_;
        if (search_start()) {
          result.status = ProofStatus::proved;
          result.tableau.root = build(0);
          simplify_in_place(result.tableau.root);
          result.inferences = inferences_;
          return result;
        }
        if (!cut_off_) {
          result.status = ProofStatus::satisfiable;
          result.inferences = inferences_;
          return result;
        }
      }
      result.reason = "depth limit " + std::to_string(limits_.max_depth) + " reached";
    } catch (const SearchAbort& abort) {
      result.reason = abort.reason;
    }
    result.status = ProofStatus::resource_out;
    result.inferences = inferences_;
    return result;
  }

 private:
  using Cont = std::function<bool()>;

  struct SearchNode {
    Literal lit;
    std::vector<std::size_t> children;
  };

  void tick() {
    ++inferences_;
    if (inferences_ > limits_.max_inferences) {
      throw SearchAbort{"inference limit " + std::to_string(limits_.max_inferences) +
                        " reached"};
    }
    if (deadline_ && (inferences_ & 0xff) == 0 &&
        std::chrono::steady_clock::now() > *deadline_) {
      throw SearchAbort{"timeout"};
    }
  }

  Term rename(const Term& t, std::map<Symbol, Term>& names) {
    if (t.is_ground()) return t;
    if (t.is_variable()) {
      auto it = names.find(t.symbol());
      if (it != names.end()) return it->second;
      Term v = Term::variable(Symbol("_" + std::to_string(var_counter_++)));
      names.emplace(t.symbol(), v);
      return v;
    }
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(rename(a, names));
    return Term::function(t.symbol(), std::move(args));
  }

  // Appends a renamed copy of `c` as children of node `parent`.
  std::vector<std::size_t> attach(std::size_t parent, const Clause& c) {
    std::map<Symbol, Term> names;
    std::vector<std::size_t> ids;
    for (const Literal& l : c) {
      std::vector<Term> args;
      for (const Term& a : l.args()) args.push_back(rename(a, names));
      arena_.push_back({Literal(l.positive(), l.predicate(), std::move(args)), {}});
      ids.push_back(arena_.size() - 1);
    }
    arena_[parent].children = ids;
    return ids;
  }

  bool search_start() {
    arena_.clear();
    arena_.push_back({Literal(), {}});
    path_.clear();
    var_counter_ = 0;
    for (std::size_t index : order_) {
      const Clause& c = clauses_[index];
      bool positive = std::all_of(c.begin(), c.end(),
                                  [](const Literal& l) { return l.positive(); });
      if (!positive) continue;
      tick();
      BindingStore::Mark m = store_.mark();
      std::size_t vars = var_counter_;
      std::vector<std::size_t> goals = attach(0, c);
      if (solve_goals(goals, 0, [] { return true; })) return true;
      store_.undo(m);
      arena_.resize(1);
      arena_[0].children.clear();
      var_counter_ = vars;
    }
    return false;
  }

  bool solve_goals(const std::vector<std::size_t>& goals, std::size_t i,
                   const Cont& k) {
    if (i == goals.size()) return k();
    return solve_literal(goals[i], [&] { return solve_goals(goals, i + 1, k); });
  }

  // True if everything bound since `m` is a variable created after `vars`.
  bool binds_only_newer(BindingStore::Mark m, std::size_t vars) const {
    for (Symbol v : store_.bound_since(m)) {
      std::string_view name = v.name().substr(1);
      std::size_t id = 0;
      std::from_chars(name.data(), name.data() + name.size(), id);
      if (id < vars) return false;
    }
    return true;
  }

  bool solve_literal(std::size_t g, const Cont& kont) {
    struct Frame {
      std::size_t& depth;
      explicit Frame(std::size_t& d) : depth(++d) {}
      ~Frame() { --depth; }
    } guard(frame_depth_);
    const std::size_t frame = frame_depth_;
    const BindingStore::Mark entry = store_.mark();
    const std::size_t entry_vars = var_counter_;
    bool cut_here = false;
    Cont k = [&] {
      bool local = binds_only_newer(entry, entry_vars);
      if (kont()) return true;
      if (local) {
        cut_here = true;
        cut_to_ = frame;
      }
      return false;
    };
    auto abandon = [&] {
      if (cut_here) {
        cut_to_ = 0;
        return true;
      }
      return cut_to_ != 0 && cut_to_ < frame;
    };
    const Literal goal = arena_[g].lit;
    Literal current = store_.resolve(goal);
    for (std::size_t p : path_) {
      if (store_.resolve(arena_[p].lit) == current) return false;
    }

    for (std::size_t i = path_.size(); i-- > 0;) {
      const Literal a = arena_[path_[i]].lit;
      if (a.positive() == goal.positive() || a.predicate() != goal.predicate()) {
        continue;
      }
      BindingStore::Mark m = store_.mark();
      if (store_.unify_atoms(goal, a)) {
        tick();
        if (k()) return true;
      }
      store_.undo(m);
      if (abandon()) return false;
    }

    std::size_t depth = path_.size() + 1;
    for (std::size_t index : order_) {
      const Clause& c = clauses_[index];
      for (std::size_t j = 0; j < c.size(); ++j) {
        const Literal& l = c[j];
        if (l.positive() == goal.positive() || l.predicate() != goal.predicate()) {
          continue;
        }
        if (depth + 1 > bound_) {
          cut_off_ = true;
          return false;
        }
        BindingStore::Mark m = store_.mark();
        std::size_t arena_mark = arena_.size();
        std::size_t vars = var_counter_;
        std::vector<std::size_t> ids = attach(g, c);
        if (store_.unify_atoms(goal, arena_[ids[j]].lit)) {
          tick();
          std::vector<std::size_t> rest;
          for (std::size_t x = 0; x < ids.size(); ++x) {
            if (x != j) rest.push_back(ids[x]);
          }
          path_.push_back(g);
          bool ok = solve_goals(rest, 0, [&] {
            path_.pop_back();
            if (k()) return true;
            path_.push_back(g);
            return false;
          });
          if (ok) return true;
          path_.pop_back();
        }
        store_.undo(m);
        arena_.resize(arena_mark);
        arena_[g].children.clear();
        var_counter_ = vars;
        if (abandon()) return false;
      }
    }
    return false;
  }

  TableauNode build(std::size_t id) const {
    TableauNode n;
    if (id != 0) n.literal = store_.resolve(arena_[id].lit);
    for (std::size_t c : arena_[id].children) n.children.push_back(build(c));
    return n;
  }

  static bool is_tautology(const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return l.positive() && std::find(c.begin(), c.end(), l.complement()) != c.end();
    });
  }

  const std::vector<Clause>& clauses_;
  std::vector<std::size_t> order_;
  ProverLimits limits_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  BindingStore store_;
  std::vector<SearchNode> arena_;
  std::vector<std::size_t> path_;
  std::size_t var_counter_ = 0;
  std::uint64_t inferences_ = 0;
  std::size_t bound_ = 1;
  bool cut_off_ = false;
  std::size_t frame_depth_ = 0;
  std::size_t cut_to_ = 0;
};

}  // namespace

ProofResult prove(const std::vector<Clause>& clauses, const ProverLimits& limits) {
  if (clauses.empty()) {
    ProofResult r;
    r.status = ProofStatus::satisfiable;
    return r;
  }
  for (const Clause& c : clauses) {
    if (c.empty()) {
      ProofResult r;
      r.status = ProofStatus::proved;
      r.tableau.clauses = clauses;
      return r;
    }
  }
  return ConnectionProver(clauses, limits).run();
}

namespace {

Term ground_term(const Term& t, const std::map<Symbol, Term>& m) {
  if (t.is_ground()) return t;
  if (t.is_variable()) return m.at(t.symbol());
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(ground_term(a, m));
  return Term::function(t.symbol(), std::move(args));
}

void collect_in_order(const Term& t, std::vector<Symbol>& order,
                      std::set<Symbol>& seen) {
  if (t.is_ground()) return;
  if (t.is_variable()) {
    if (seen.insert(t.symbol()).second) order.push_back(t.symbol());
    return;
  }
  for (const Term& a : t.args()) collect_in_order(a, order, seen);
}

void ground_rec(TableauNode& n, const std::map<Symbol, Term>& m) {
  if (n.literal && !n.literal->is_ground()) {
    std::vector<Term> args;
    for (const Term& a : n.literal->args()) args.push_back(ground_term(a, m));
    n.literal = Literal(n.literal->positive(), n.literal->predicate(), std::move(args));
  }
  for (TableauNode& c : n.children) ground_rec(c, m);
}

void assign_rec(TableauNode& n, const std::vector<Clause>& f_clauses,
                const std::vector<Clause>& g_clauses, TiePolicy tie) {
  if (n.children.empty()) return;
  Clause c = n.clause();
  auto instance_of_any = [&](const std::vector<Clause>& set) {
    return std::any_of(set.begin(), set.end(),
                       [&](const Clause& general) { return is_instance_of(c, general); });
  };
  bool in_f = instance_of_any(f_clauses);
  bool in_g = instance_of_any(g_clauses);
  if (!in_f && !in_g) {
    throw StructuralError("tableau clause " + to_string(c) +
                          " is an instance of neither side's clauses");
  }
  Side side = in_f && in_g ? (tie == TiePolicy::prefer_f ? Side::F : Side::G)
                           : (in_f ? Side::F : Side::G);
  for (TableauNode& child : n.children) {
    child.side = side;
    assign_rec(child, f_clauses, g_clauses, tie);
  }
}

}  // namespace

GroundingResult ground_tableau(const Tableau& t, GroundingPolicy policy,
                               FreshSymbols& fresh) {
  std::vector<Symbol> order;
  std::set<Symbol> seen;
  preorder(t.root, [&](const TableauNode& n) {
    if (!n.literal) return;
    for (const Term& a : n.literal->args()) collect_in_order(a, order, seen);
  });

  GroundingResult out;
  out.tableau = t;
  if (order.empty()) return out;
  std::map<Symbol, Term> m;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Symbol c = fresh.next("g");
    m.emplace(order[i], Term::function(c));
    bool f_side = policy == GroundingPolicy::f_side ||
                  (policy == GroundingPolicy::round_robin && i % 2 == 0);
    (f_side ? out.fresh_f : out.fresh_g).insert(c);
  }
  ground_rec(out.tableau.root, m);
  mark_targets(out.tableau.root);
  return out;
}

Tableau assign_sides(const Tableau& t, const std::vector<Clause>& f_clauses,
                     const std::vector<Clause>& g_clauses, TiePolicy tie) {
  Tableau out = t;
  assign_rec(out.root, f_clauses, g_clauses, tie);
  return out;
}

}  // namespace craigtab
