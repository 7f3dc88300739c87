#include "instances.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "craigtab/unify.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab::testing {

namespace {

struct Pred {
  const char* name;
  std::size_t arity;
};

constexpr Pred kPredicates[] = {{"p", 1}, {"q", 1}, {"r", 2}, {"s", 1}};
constexpr const char* kConstants[] = {"a", "b", "c"};

std::size_t below(std::mt19937& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Term constant(std::string_view name) { return Term::function(Symbol(name)); }

Literal atom_over(std::mt19937& rng, const std::vector<Term>& pool) {
  const Pred& p = kPredicates[below(rng, 4)];
  std::vector<Term> args;
  for (std::size_t i = 0; i < p.arity; ++i) args.push_back(pool[below(rng, pool.size())]);
  return Literal(true, Symbol(p.name), std::move(args));
}

Literal ground_atom(std::mt19937& rng) {
  std::vector<Term> pool;
  for (const char* c : kConstants) pool.push_back(constant(c));
  return atom_over(rng, pool);
}

std::set<Symbol> literal_vars(const std::vector<Literal>& lits) {
  std::set<Symbol> out;
  for (const Literal& l : lits) {
    for (Symbol v : vars(l)) out.insert(v);
  }
  return out;
}

Formula conjoin_literals(const std::vector<Literal>& lits) {
  std::vector<Formula> ops;
  for (const Literal& l : lits) ops.push_back(Formula::literal(l));
  return conjoin(std::move(ops));
}

Formula close(bool universal, const std::set<Symbol>& vs, Formula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = Formula::quantifier(universal, *it, body);
  return body;
}

Rule random_rule(std::mt19937& rng, const WorldShape& shape) {
  Rule rule;
  std::vector<Term> pool{Term::variable(Symbol("X")), Term::variable(Symbol("Y"))};
  std::vector<Term> body_pool = pool;
  if (chance(rng, 0.15)) body_pool.push_back(constant(kConstants[below(rng, 3)]));
  std::size_t n = 1 + below(rng, 2);
  for (std::size_t i = 0; i < n; ++i) rule.body.push_back(atom_over(rng, body_pool));

  std::vector<Term> head_pool;
  for (Symbol v : literal_vars(rule.body)) head_pool.push_back(Term::variable(v));
  if (head_pool.empty() || chance(rng, 0.1)) head_pool.push_back(constant(kConstants[below(rng, 3)]));

  double roll = std::uniform_real_distribution<double>(0, 1)(rng);
  if (shape.constraints && roll < 0.1) return rule;
  if (shape.tgds && roll < 0.35) {
    Symbol w("W");
    rule.existentials.push_back(w);
    std::vector<Term> with_w = head_pool;
    with_w.push_back(Term::variable(w));
    std::size_t heads = 1 + below(rng, 2);
    for (std::size_t i = 0; i < heads; ++i) rule.head.push_back(atom_over(rng, with_w));
    if (!literal_vars(rule.head).contains(w)) {
      rule.head[0] = Literal(true, Symbol("r"), {head_pool[below(rng, head_pool.size())], Term::variable(w)});
    }
    return rule;
  }
  if (!shape.horn && shape.disjunctions && roll < 0.55) {
    rule.disjunctive = true;
    rule.head.push_back(atom_over(rng, head_pool));
    rule.head.push_back(atom_over(rng, head_pool));
    return rule;
  }
  rule.head.push_back(atom_over(rng, head_pool));
  return rule;
}

// Extends `sub` to map every pattern onto one of `facts`, calling `found` for each
// complete match until it returns false.
bool match_all(const std::vector<Literal>& patterns, std::size_t k, const std::vector<Literal>& facts,
               const Substitution& sub, const std::function<bool(const Substitution&)>& found) {
  if (k == patterns.size()) return found(sub);
  for (const Literal& fact : facts) {
    Substitution ext = sub;
    if (match(patterns[k], fact, ext)) {
      if (!match_all(patterns, k + 1, facts, ext, found)) return false;
    }
  }
  return true;
}

}  // namespace

Formula rule_formula(const Rule& rule, bool horn_spelling) {
  std::set<Symbol> universals = literal_vars(rule.body);
  std::set<Symbol> head_vars = literal_vars(rule.head);
  std::set<Symbol> ex(rule.existentials.begin(), rule.existentials.end());
  for (Symbol v : head_vars) {
    if (!ex.contains(v)) universals.insert(v);
  }
  Formula body = conjoin_literals(rule.body);
  if (rule.head.empty()) return close(true, universals, Formula::implication(body, Formula::bottom()));
  if (horn_spelling) {
    std::vector<Formula> parts;
    for (const Literal& h : rule.head) parts.push_back(Formula::implication(body, Formula::literal(h)));
    return close(true, universals, close(false, ex, conjoin(std::move(parts))));
  }
  std::vector<Formula> heads;
  for (const Literal& h : rule.head) heads.push_back(Formula::literal(h));
  Formula head = rule.disjunctive ? disjoin(std::move(heads)) : conjoin(std::move(heads));
  return close(true, universals, Formula::implication(body, close(false, ex, head)));
}

Formula World::formula() const { return conjoin(conjuncts); }

ChaseResult chase(std::vector<Literal> facts, const std::vector<Rule>& rules, std::size_t rounds,
                  std::size_t max_nulls) {
  ChaseResult out;
  auto add = [&](const Literal& l) {
    if (std::find(facts.begin(), facts.end(), l) != facts.end()) return false;
    facts.push_back(l);
    return true;
  };
  for (std::size_t round = 0; round < rounds; ++round) {
    bool changed = false;
    for (const Rule& rule : rules) {
      if (rule.disjunctive) continue;
      std::vector<Substitution> matches;
      match_all(rule.body, 0, facts, Substitution(), [&](const Substitution& s) {
        matches.push_back(s);
        return true;
      });
      for (const Substitution& s : matches) {
        if (rule.head.empty()) {
          out.consistent = false;
          continue;
        }
        if (rule.existentials.empty()) {
          for (const Literal& h : rule.head) changed |= add(s.apply(h));
          continue;
        }
        bool satisfied = false;
        match_all(rule.head, 0, facts, s, [&](const Substitution&) {
          satisfied = true;
          return false;
        });
        if (satisfied || out.nulls.size() + rule.existentials.size() > max_nulls) continue;
        Substitution ext = s;
        for (Symbol w : rule.existentials) {
          Symbol null("n" + std::to_string(out.nulls.size()));
          out.nulls.insert(null);
          ext.bind(w, Term::function(null));
        }
        for (const Literal& h : rule.head) changed |= add(ext.apply(h));
      }
    }
    if (!changed) break;
  }
  out.facts = std::move(facts);
  return out;
}

World random_world(std::mt19937& rng, const WorldShape& shape) {
  World w;
  std::size_t nf = 1 + below(rng, shape.max_facts);
  for (std::size_t i = 0; i < nf; ++i) {
    Literal l = ground_atom(rng);
    if (std::find(w.facts.begin(), w.facts.end(), l) == w.facts.end()) w.facts.push_back(l);
  }
  std::size_t nr = 1 + below(rng, shape.max_rules);
  for (std::size_t i = 0; i < nr; ++i) w.rules.push_back(random_rule(rng, shape));
  for (const Literal& l : w.facts) w.conjuncts.push_back(Formula::literal(l));
  for (const Rule& r : w.rules) w.conjuncts.push_back(rule_formula(r, shape.horn));
  ChaseResult c = chase(w.facts, w.rules);
  w.derived = std::move(c.facts);
  w.nulls = std::move(c.nulls);
  w.consistent = c.consistent;
  return w;
}

Formula existential_query(const std::vector<Literal>& facts, const std::set<Symbol>& nulls,
                          const std::map<Symbol, Symbol>& free, double generalize,
                          std::mt19937& rng) {
  std::map<Symbol, Term> replacement;
  std::set<Symbol> bound;
  std::size_t counter = 0;
  auto term_for = [&](const Term& t) -> Term {
    if (t.is_variable() || t.arity() > 0) return t;
    auto it = replacement.find(t.symbol());
    if (it != replacement.end()) return it->second;
    Term out = t;
    if (auto f = free.find(t.symbol()); f != free.end()) {
      out = Term::variable(f->second);
    } else if (nulls.contains(t.symbol()) || chance(rng, generalize)) {
      Symbol v("Q" + std::to_string(++counter));
      bound.insert(v);
      out = Term::variable(v);
    }
    replacement.emplace(t.symbol(), out);
    return out;
  };
  std::vector<Literal> lits;
  for (const Literal& l : facts) {
    std::vector<Term> args;
    for (const Term& a : l.args()) args.push_back(term_for(a));
    lits.push_back(Literal(true, l.predicate(), std::move(args)));
  }
  return close(false, bound, conjoin_literals(lits));
}

namespace {

// Mostly facts that needed a rule, later chase rounds preferred.
Literal pick_fact(std::mt19937& rng, const std::vector<Literal>& derived, const std::vector<Literal>& given) {
  std::vector<Literal> fresh;
  for (const Literal& l : derived) {
    if (std::find(given.begin(), given.end(), l) == given.end()) fresh.push_back(l);
  }
  if (fresh.empty() || chance(rng, 0.2)) return derived[below(rng, derived.size())];
  return fresh[std::max({below(rng, fresh.size()), below(rng, fresh.size()), below(rng, fresh.size())})];
}

std::vector<Literal> pick_facts(std::mt19937& rng, const World& w, std::size_t n) {
  std::vector<Literal> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pick_fact(rng, w.derived, w.facts));
  return out;
}

// (∀x̄ (P(x̄) → w(x̄))) → w(t̄) for a derived ground fact P(t̄) without nulls.
std::optional<Formula> transfer_query(std::mt19937& rng, const World& w) {
  std::vector<Literal> plain;
  for (const Literal& l : w.derived) {
    bool has_null = false;
    for (const Term& t : l.args()) has_null |= w.nulls.contains(t.symbol());
    if (!has_null) plain.push_back(l);
  }
  if (plain.empty()) return std::nullopt;
  const Literal fact = pick_fact(rng, plain, w.facts);
  std::vector<Term> xs;
  std::set<Symbol> vs;
  for (std::size_t i = 0; i < fact.args().size(); ++i) {
    Symbol v("V" + std::to_string(i + 1));
    xs.push_back(Term::variable(v));
    vs.insert(v);
  }
  Symbol t("t");
  Formula rule = close(true, vs,
                       Formula::implication(Formula::literal(Literal(true, fact.predicate(), xs)),
                                            Formula::literal(Literal(true, t, xs))));
  return Formula::implication(rule, Formula::literal(Literal(true, t, fact.arg_vector())));
}

Formula weakened_rule(std::mt19937& rng, const World& w) {
  std::vector<const Rule*> candidates;
  for (const Rule& r : w.rules) {
    if (!r.head.empty()) candidates.push_back(&r);
  }
  if (candidates.empty()) return w.conjuncts[below(rng, w.conjuncts.size())];
  Rule r = *candidates[below(rng, candidates.size())];
  std::vector<Term> pool{Term::variable(Symbol("X")), Term::variable(Symbol("Y")),
                         Term::variable(Symbol("Z"))};
  r.body.push_back(atom_over(rng, pool));
  return rule_formula(r, false);
}

Formula conjunct_subset(std::mt19937& rng, const World& w) {
  std::vector<Formula> ops;
  for (const Formula& c : w.conjuncts) {
    if (chance(rng, 0.5)) ops.push_back(c);
  }
  if (ops.empty()) ops.push_back(w.conjuncts[below(rng, w.conjuncts.size())]);
  return conjoin(std::move(ops));
}

Formula query(std::mt19937& rng, const World& w, double generalize) {
  return existential_query(pick_facts(rng, w, 1 + below(rng, 2)), w.nulls, {}, generalize, rng);
}

Formula weakening(std::mt19937& rng, const World& w) {
  switch (below(rng, 5)) {
    case 0:
      return query(rng, w, 0.3);
    case 1:
      if (auto t = transfer_query(rng, w)) return *t;
      return query(rng, w, 0.0);
    case 2: {
      Formula other = chance(rng, 0.5)
                          ? Formula::forall(Symbol("X"), Formula::literal(Literal(true, Symbol("s"),
                                                                                   {Term::variable(Symbol("X"))})))
                          : Formula::literal(ground_atom(rng));
      return Formula::disjunction({query(rng, w, 0.3), other});
    }
    case 3:
      return conjunct_subset(rng, w);
    default:
      return weakened_rule(rng, w);
  }
}

}  // namespace

Instance range_restricted_instance(std::mt19937& rng) {
  WorldShape shape;
  shape.constraints = true;
  World w = random_world(rng, shape);
  return {"u-rr", w.formula(), weakening(rng, w), {}};
}

Instance sentence_instance(std::mt19937& rng) {
  WorldShape shape;
  shape.constraints = true;
  World w = random_world(rng, shape);
  Formula g = weakening(rng, w);
  if (chance(rng, 0.3)) g = Formula::disjunction({query(rng, w, 0.5), query(rng, w, 0.5)});
  return {"vgt-rr", w.formula(), g, {}};
}

Instance free_variable_instance(std::mt19937& rng) {
  WorldShape shape;
  shape.disjunctions = chance(rng, 0.3);
  World w = random_world(rng, shape);

  std::size_t nx = 1 + below(rng, 2);
  std::map<Symbol, Symbol> frozen;
  std::vector<Term> q_pool;
  std::set<Symbol> x;
  for (std::size_t i = 1; i <= nx; ++i) {
    Symbol var("X" + std::to_string(i));
    frozen.emplace(Symbol("x" + std::to_string(i)), var);
    x.insert(var);
    q_pool.push_back(Term::variable(var));
  }
  Symbol z("Z");
  bool with_z = chance(rng, 0.5);
  if (with_z) q_pool.push_back(Term::variable(z));
  if (chance(rng, 0.3)) q_pool.push_back(constant(kConstants[below(rng, 3)]));

  std::vector<Literal> q_atoms;
  std::size_t nq = 1 + below(rng, 2);
  for (std::size_t i = 0; i < nq; ++i) q_atoms.push_back(atom_over(rng, q_pool));
  std::set<Symbol> missing = x;
  for (Symbol v : literal_vars(q_atoms)) missing.erase(v);
  for (Symbol v : missing) q_atoms.push_back(Literal(true, Symbol("q"), {Term::variable(v)}));
  std::set<Symbol> q_ex;
  if (literal_vars(q_atoms).contains(z)) q_ex.insert(z);
  Formula q = close(false, q_ex, conjoin_literals(q_atoms));

  Substitution freeze;
  for (const auto& [c, v] : frozen) freeze.bind(v, Term::function(c));
  std::set<Symbol> nulls = w.nulls;
  Symbol z_null("nz");
  freeze.bind(z, Term::function(z_null));
  nulls.insert(z_null);
  std::vector<Literal> start = w.facts;
  for (const Literal& l : q_atoms) start.push_back(freeze.apply(l));
  ChaseResult c = chase(start, w.rules);
  nulls.insert(c.nulls.begin(), c.nulls.end());

  std::vector<Literal> chosen;
  std::vector<Literal> with_x;
  for (const Literal& l : c.facts) {
    for (const Term& t : l.args()) {
      if (frozen.contains(t.symbol())) {
        with_x.push_back(l);
        break;
      }
    }
  }
  std::size_t pick = 1 + below(rng, 2);
  for (std::size_t i = 0; i < pick; ++i) chosen.push_back(pick_fact(rng, with_x, start));
  auto covered = [&]() {
    std::set<Symbol> seen;
    for (const Literal& l : chosen) {
      for (const Term& t : l.args()) {
        if (frozen.contains(t.symbol())) seen.insert(t.symbol());
      }
    }
    return seen.size() == frozen.size();
  };
  for (const Literal& l : with_x) {
    if (covered()) break;
    chosen.push_back(l);
  }

  std::vector<Formula> f_parts = w.conjuncts;
  f_parts.push_back(q);
  Formula g = existential_query(chosen, nulls, frozen, 0.3, rng);
  return {"vx", conjoin(std::move(f_parts)), g, x};
}

Instance horn_instance(std::mt19937& rng) {
  WorldShape shape;
  shape.horn = true;
  shape.constraints = true;
  World w = random_world(rng, shape);
  if (chance(rng, 0.2)) {
    Symbol x("X");
    w.conjuncts.push_back(Formula::forall(x, Formula::literal(Literal(true, Symbol("s"), {Term::variable(x)}))));
  }
  return {"horn", w.formula(), weakening(rng, w), {}};
}

}  // namespace craigtab::testing
