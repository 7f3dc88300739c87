#include "craigtab/proof_import.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "craigtab/errors.hpp"
#include "craigtab/parse.hpp"
#include "craigtab/print.hpp"
#include "craigtab/unify.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab {

const ProofStep* ProofDocument::find(std::string_view id) const {
  for (const ProofStep& s : steps) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<Clause> ProofDocument::input_clauses() const {
  std::vector<Clause> out;
  for (const ProofStep& s : steps) {
    if (s.rule == ProofRule::input) out.push_back(s.clause);
  }
  return out;
}

namespace {

bool is_paramodulation(std::string_view rule) {
  return rule == "paramod" || rule == "para" || rule == "paramodulation" ||
         rule == "demod" || rule == "rewrite" || rule == "superposition";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Strips the "line:col: " prefix of a nested ParseError.
std::string bare_message(const ParseError& e) {
  std::string what = e.what();
  if (e.line() == 0) return what;
  std::size_t pos = what.find(": ");
  return pos == std::string::npos ? what : what.substr(pos + 2);
}

template <typename T, typename Fn>
T parse_at(std::string_view text, std::size_t line, std::size_t column, Fn fn) {
  try {
    return fn(text);
  } catch (const ParseError& e) {
    std::size_t col = column + (e.column() ? e.column() - 1 : 0);
    throw ParseError(bare_message(e), line, col);
  }
}

ProofStep parse_step(std::string_view raw, std::size_t line) {
  std::size_t offset = raw.find_first_not_of(" \t");
  std::string_view text = trim(raw);
  if (text.back() != '.') throw ParseError("step must end with '.'", line, offset + text.size());
  text.remove_suffix(1);
  auto column = [&](std::size_t i) { return offset + i + 1; };

  ProofStep step;
  step.line = line;
  std::size_t i = 0;
  while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  step.id = std::string(text.substr(0, i));
  for (char ch : step.id) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') {
      throw ParseError("invalid step id '" + step.id + "'", line, column(0));
    }
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t rule_start = i;
  while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
  std::string rule(text.substr(rule_start, i - rule_start));
  if (rule.empty()) throw ParseError("expected a rule", line, column(rule_start));

  if (rule == "input") {
    step.rule = ProofRule::input;
  } else if (rule == "resolve") {
    step.rule = ProofRule::resolve;
    if (i >= text.size() || text[i] != '(') {
      throw ParseError("expected '(' after resolve", line, column(i));
    }
    std::size_t open = i++;
    int depth = 1;
    std::vector<std::size_t> commas;
    for (; i < text.size() && depth > 0; ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] == ',' && depth == 1) commas.push_back(i);
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", line, column(open));
    std::size_t close = i - 1;
    if (commas.size() != 2) {
      throw ParseError("resolve takes two step ids and an atom", line, column(open));
    }
    step.left = std::string(trim(text.substr(open + 1, commas[0] - open - 1)));
    step.right = std::string(trim(text.substr(commas[0] + 1, commas[1] - commas[0] - 1)));
    std::string_view atom_text = text.substr(commas[1] + 1, close - commas[1] - 1);
    std::size_t atom_col = column(commas[1] + 1);
    step.atom = parse_at<Literal>(atom_text, line, atom_col, parse_literal);
    if (step.atom.negative()) throw ParseError("resolved atom must be positive", line, atom_col);
  } else if (is_paramodulation(rule)) {
    throw ParseError("paramodulation step '" + rule +
                         "' is not supported; add equality axioms and re-prove with "
                         "binary resolution",
                     line, column(rule_start));
  } else {
    throw ParseError("unsupported rule '" + rule + "'; only input and binary resolve",
                     line, column(rule_start));
  }

  std::string_view clause_text = text.substr(i);
  step.clause = parse_at<Clause>(clause_text, line, column(i), parse_clause);
  return step;
}

std::set<Symbol> clause_vars(const Clause& c) { return vars(c); }

Term fresh_variable(const std::string& prefix, std::size_t& counter) {
  return Term::variable(Symbol(prefix + std::to_string(counter++)));
}

struct StepInfo {
  Substitution sigma;  // mgu over the left clause and the renamed right clause
  Substitution beta;   // renames the right clause apart
  Clause resolvent;
  Literal resolved;    // σ(L)
  Substitution rho;    // resolvent variables onto the declared clause
};

// Literal set of c without any literal equal to `drop`.
void append_without(const Clause& c, const Literal& drop, Clause& out) {
  for (const Literal& l : c) {
    if (!(l == drop)) out.push_back(l);
  }
}

std::optional<Substitution> renaming_onto(const Clause& declared, const Clause& computed) {
  Clause a = dedup_literals(declared), b = dedup_literals(computed);
  if (a.size() != b.size()) return std::nullopt;
  std::optional<Substitution> rho = match_clause(a, b);
  if (!rho) return std::nullopt;
  std::set<Symbol> images;
  for (const auto& [v, t] : rho->bindings()) {
    if (!t.is_variable() || !images.insert(t.symbol()).second) return std::nullopt;
  }
  return rho;
}

StepInfo check_resolve(const ProofStep& s, const Clause& a, const Clause& b) {
  std::set<Symbol> taken = clause_vars(a);
  for (Symbol v : clause_vars(s.clause)) taken.insert(v);
  StepInfo info;
  std::size_t counter = 0;
  for (Symbol v : clause_vars(b)) {
    Term fresh;
    do {
      fresh = fresh_variable("_R", counter);
    } while (taken.contains(fresh.symbol()));
    info.beta.bind(v, fresh);
  }
  Clause b2 = info.beta.apply(b);

  for (const Literal& l : a) {
    if (l.negative() || l.predicate() != s.atom.predicate()) continue;
    for (const Literal& m : b2) {
      if (m.positive() || m.predicate() != l.predicate()) continue;
      std::optional<Substitution> sigma = unify_args(l.args(), m.args());
      if (!sigma) continue;
      Literal resolved = sigma->apply(l);
      Clause r;
      append_without(sigma->apply(a), resolved, r);
      append_without(sigma->apply(b2), resolved.complement(), r);
      r = dedup_literals(std::move(r));
      std::optional<Substitution> rho = renaming_onto(s.clause, r);
      if (!rho) continue;
      bool atom_ok = is_variant({s.atom}, {resolved}) || is_variant({s.atom}, {l});
      if (!atom_ok) continue;
      info.sigma = std::move(*sigma);
      info.resolvent = std::move(r);
      info.resolved = std::move(resolved);
      info.rho = std::move(*rho);
      return info;
    }
  }
  throw StructuralError("step " + s.id + " (line " + std::to_string(s.line) +
                        "): declared clause " + to_string(s.clause) +
                        " is not a resolvent of steps " + s.left + " and " + s.right +
                        " upon " + to_string(s.atom));
}

class Expander {
 public:
  Expander(const ProofDocument& doc, std::size_t max_nodes) : doc_(doc), max_nodes_(max_nodes) {
    for (const ProofStep& s : doc.steps) {
      index_[s.id] = &s;
      if (s.rule == ProofRule::resolve) {
        info_.emplace(s.id, check_resolve(s, index_.at(s.left)->clause,
                                          index_.at(s.right)->clause));
      }
    }
  }

  DeductionNode expand(const ProofStep& s, const Substitution& phi) {
    if (++nodes_ > max_nodes_) {
      throw ResourceError("proof tree exceeds " + std::to_string(max_nodes_) + " nodes");
    }
    DeductionNode node;
    node.rule = s.rule;
    node.step = s.id;
    node.clause = phi.apply(s.clause);
    if (s.rule == ProofRule::input) return node;

    const StepInfo& info = info_.at(s.id);
    const ProofStep& left = *index_.at(s.left);
    const ProofStep& right = *index_.at(s.right);
    std::set<Symbol> in_resolvent = clause_vars(info.resolvent);
    Substitution kappa;
    std::set<Symbol> pending = clause_vars(info.sigma.apply(left.clause));
    for (Symbol v : clause_vars(info.sigma.apply(info.beta.apply(right.clause)))) {
      pending.insert(v);
    }
    for (Symbol v : pending) {
      if (in_resolvent.contains(v)) {
        kappa.bind(v, phi.apply(info.rho.apply(Term::variable(v))));
      } else {
        kappa.bind(v, fresh_variable("_E", fresh_));
      }
    }
    auto through = [&](const Clause& c, const Substitution* beta) {
      Substitution psi;
      for (Symbol v : clause_vars(c)) {
        Term t = Term::variable(v);
        if (beta) t = beta->apply(t);
        psi.bind(v, kappa.apply(info.sigma.apply(t)));
      }
      return psi;
    };
    node.atom = kappa.apply(info.resolved);
    node.children.push_back(expand(left, through(left.clause, nullptr)));
    node.children.push_back(expand(right, through(right.clause, &info.beta)));
    return node;
  }

  const ProofStep& step(const std::string& id) const { return *index_.at(id); }

 private:
  const ProofDocument& doc_;
  std::size_t max_nodes_;
  std::map<std::string, const ProofStep*> index_;
  std::map<std::string, StepInfo> info_;
  std::size_t nodes_ = 0;
  std::size_t fresh_ = 0;
};

void collect_ground_order(const DeductionNode& d, std::vector<Symbol>& order,
                          std::set<Symbol>& seen) {
  auto visit = [&](const Literal& l) {
    std::function<void(const Term&)> walk = [&](const Term& t) {
      if (t.is_variable()) {
        if (seen.insert(t.symbol()).second) order.push_back(t.symbol());
        return;
      }
      for (const Term& a : t.args()) walk(a);
    };
    for (const Term& a : l.args()) walk(a);
  };
  for (const Literal& l : d.clause) visit(l);
  if (d.rule == ProofRule::resolve) visit(d.atom);
  for (const DeductionNode& c : d.children) collect_ground_order(c, order, seen);
}

DeductionNode apply_to_tree(const DeductionNode& d, const Substitution& sub) {
  DeductionNode out;
  out.rule = d.rule;
  out.step = d.step;
  out.clause = sub.apply(d.clause);
  out.atom = d.rule == ProofRule::resolve ? sub.apply(d.atom) : d.atom;
  for (const DeductionNode& c : d.children) out.children.push_back(apply_to_tree(c, sub));
  return out;
}

bool contains(const Clause& c, const Literal& l) {
  return std::find(c.begin(), c.end(), l) != c.end();
}

void check_ground_step(const DeductionNode& d) {
  if (d.rule != ProofRule::resolve) return;
  const Clause& left = d.children[0].clause;
  const Clause& right = d.children[1].clause;
  Literal neg = d.atom.complement();
  bool ok = contains(left, d.atom) && contains(right, neg);
  for (const Literal& l : left) {
    if (!(l == d.atom) && !contains(d.clause, l)) ok = false;
  }
  for (const Literal& l : right) {
    if (!(l == neg) && !contains(d.clause, l)) ok = false;
  }
  if (!ok) {
    throw StructuralError("step " + d.step + " is not a ground resolution step upon " +
                          to_string(d.atom));
  }
  for (const DeductionNode& c : d.children) check_ground_step(c);
}

void collect_vocabulary(const DeductionNode& d, FreshSymbols& fresh) {
  for (const Literal& l : d.clause) fresh.reserve(vocabulary(Clause{l}));
  for (const DeductionNode& c : d.children) collect_vocabulary(c, fresh);
}

bool ground_tree(const DeductionNode& d) {
  for (const Literal& l : d.clause) {
    if (!l.is_ground()) return false;
  }
  if (d.rule == ProofRule::resolve && !d.atom.is_ground()) return false;
  return std::all_of(d.children.begin(), d.children.end(), ground_tree);
}

std::vector<TableauNode> translate(const DeductionNode& d) {
  std::vector<TableauNode> out;
  if (d.rule == ProofRule::input) {
    for (const Literal& l : d.clause) out.push_back(TableauNode{l, std::nullopt, {}, std::nullopt});
    return out;
  }
  TableauNode neg{d.atom.complement(), std::nullopt, translate(d.children[0]), std::nullopt};
  TableauNode pos{d.atom, std::nullopt, translate(d.children[1]), std::nullopt};
  out.push_back(std::move(neg));
  out.push_back(std::move(pos));
  return out;
}

void collect_leaf_clauses(const DeductionNode& d, std::vector<Clause>& out) {
  if (d.rule == ProofRule::input) {
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const Clause& c) { return same_literal_set(c, d.clause); });
    if (!seen) out.push_back(d.clause);
    return;
  }
  for (const DeductionNode& c : d.children) collect_leaf_clauses(c, out);
}

}  // namespace

ProofDocument read_proof(std::string_view text) {
  ProofDocument doc;
  std::set<std::string> ids;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#' || t.front() == '%') continue;
    ProofStep step = parse_step(raw, line);
    if (step.rule == ProofRule::resolve) {
      for (const std::string& ref : {step.left, step.right}) {
        if (!ids.contains(ref)) {
          throw ParseError("step " + step.id + " cites unknown step '" + ref + "'", line, 1);
        }
      }
    }
    if (!ids.insert(step.id).second) {
      throw ParseError("repeated step id '" + step.id + "'", line, 1);
    }
    doc.steps.push_back(std::move(step));
  }
  return doc;
}

std::string write_proof(const ProofDocument& doc) {
  std::string out;
  for (const ProofStep& s : doc.steps) {
    out += s.id;
    if (s.rule == ProofRule::input) {
      out += " input ";
    } else {
      out += " resolve(" + s.left + ", " + s.right + ", " + to_string(s.atom) + ") ";
    }
    out += to_string(s.clause);
    out += ".\n";
  }
  return out;
}

std::size_t deduction_size(const DeductionNode& d) {
  std::size_t n = 1;
  for (const DeductionNode& c : d.children) n += deduction_size(c);
  return n;
}

DeductionNode expand_proof(const ProofDocument& doc, std::size_t max_nodes) {
  if (doc.steps.empty()) throw StructuralError("proof has no steps");
  Expander expander(doc, max_nodes);
  return expander.expand(doc.steps.back(), Substitution{});
}

DeductionNode parse_proof(std::string_view text, std::size_t max_nodes) {
  return expand_proof(read_proof(text), max_nodes);
}

DeductionNode ground_deduction(const DeductionNode& d, FreshSymbols& fresh) {
  std::vector<Symbol> order;
  std::set<Symbol> seen;
  collect_ground_order(d, order, seen);
  Substitution sub;
  for (Symbol v : order) sub.bind(v, Term::function(fresh.next("g")));
  DeductionNode out = apply_to_tree(d, sub);
  check_ground_step(out);
  return out;
}

DeductionNode ground_deduction(const DeductionNode& d) {
  FreshSymbols fresh;
  collect_vocabulary(d, fresh);
  return ground_deduction(d, fresh);
}

Tableau to_cut_normal_form(const DeductionNode& d, const std::vector<Clause>& input_clauses) {
  if (!d.clause.empty()) throw ContractError("proof does not derive the empty clause");
  if (!ground_tree(d)) throw ContractError("cut normal form needs a ground proof");
  Tableau t;
  t.root.children = translate(d);
  t.clauses = input_clauses;
  if (t.clauses.empty()) collect_leaf_clauses(d, t.clauses);
  is_closed(t);
  return t;
}

}  // namespace craigtab
