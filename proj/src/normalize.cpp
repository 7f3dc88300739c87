#include "craigtab/normalize.hpp"

#include <algorithm>
#include <optional>

#include "craigtab/errors.hpp"
#include "craigtab/unify.hpp"

namespace craigtab {

std::set<Symbol> PrenexNormalForm::universal_vars() const {
  std::set<Symbol> out;
  for (const QuantifiedVar& q : prefix) {
    if (q.quantifier == Quantifier::forall) out.insert(q.var);
  }
  return out;
}

std::set<Symbol> PrenexNormalForm::existential_vars() const {
  std::set<Symbol> out;
  for (const QuantifiedVar& q : prefix) {
    if (q.quantifier == Quantifier::exists) out.insert(q.var);
  }
  return out;
}

Formula PrenexNormalForm::to_formula() const {
  std::vector<Formula> outer;
  outer.reserve(matrix.size());
  for (const Clause& c : matrix) {
    std::vector<Formula> lits;
    for (const Literal& l : c) lits.push_back(Formula::literal(l));
    outer.push_back(kind == MatrixKind::cnf ? disjoin(std::move(lits))
                                            : conjoin(std::move(lits)));
  }
  Formula result = kind == MatrixKind::cnf ? conjoin(std::move(outer))
                                           : disjoin(std::move(outer));
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    result = Formula::quantifier(it->quantifier == Quantifier::forall, it->var,
                                 std::move(result));
  }
  return result;
}

namespace {

Formula nnf_rec(const Formula& f, bool positive) {
  switch (f.kind()) {
    case FormulaKind::literal:
      return positive ? f : Formula::literal(f.lit().complement());
    case FormulaKind::top:
      return Formula::truth(positive);
    case FormulaKind::bottom:
      return Formula::truth(!positive);
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      std::vector<Formula> ops;
      ops.reserve(f.operands().size());
      for (const Formula& g : f.operands()) ops.push_back(nnf_rec(g, positive));
      bool conj = (f.kind() == FormulaKind::conjunction) == positive;
      return conj ? Formula::conjunction(std::move(ops))
                  : Formula::disjunction(std::move(ops));
    }
    case FormulaKind::negation:
      return nnf_rec(f.operands()[0], !positive);
    case FormulaKind::implication: {
      const Formula& a = f.operands()[0];
      const Formula& b = f.operands()[1];
      if (positive) {
        return Formula::disjunction({nnf_rec(a, false), nnf_rec(b, true)});
      }
      return Formula::conjunction({nnf_rec(a, true), nnf_rec(b, false)});
    }
    case FormulaKind::equivalence: {
      const Formula& a = f.operands()[0];
      const Formula& b = f.operands()[1];
      if (positive) {
        return Formula::conjunction(
            {Formula::disjunction({nnf_rec(a, false), nnf_rec(b, true)}),
             Formula::disjunction({nnf_rec(a, true), nnf_rec(b, false)})});
      }
      return Formula::disjunction(
          {Formula::conjunction({nnf_rec(a, true), nnf_rec(b, false)}),
           Formula::conjunction({nnf_rec(a, false), nnf_rec(b, true)})});
    }
    case FormulaKind::forall:
    case FormulaKind::exists: {
      bool universal = (f.kind() == FormulaKind::forall) == positive;
      return Formula::quantifier(universal, f.bound_var(),
                                 nnf_rec(f.body(), positive));
    }
  }
  return f;
}

Term rename_term(const Term& t, const std::map<Symbol, Symbol>& names) {
  if (t.is_ground()) return t;
  if (t.is_variable()) {
    auto it = names.find(t.symbol());
    return it == names.end() ? t : Term::variable(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(rename_term(a, names));
  return Term::function(t.symbol(), std::move(args));
}

class Standardizer {
 public:
  explicit Standardizer(std::set<Symbol> used) {
    for (Symbol s : used) used_.insert(std::string(s.name()));
  }

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::literal: {
        if (names_.empty() || f.lit().is_ground()) return f;
        std::vector<Term> args;
        for (const Term& a : f.lit().args()) args.push_back(rename_term(a, names_));
        return Formula::literal(
            Literal(f.lit().positive(), f.lit().predicate(), std::move(args)));
      }
      case FormulaKind::top:
      case FormulaKind::bottom:
        return f;
      case FormulaKind::forall:
      case FormulaKind::exists: {
        Symbol old = f.bound_var();
        Symbol fresh = pick(old);
        auto saved = names_.find(old);
        std::optional<Symbol> previous;
        if (saved != names_.end()) previous = saved->second;
        names_[old] = fresh;
        Formula body = run(f.body());
        if (previous) {
          names_[old] = *previous;
        } else {
          names_.erase(old);
        }
        return Formula::quantifier(f.kind() == FormulaKind::forall, fresh,
                                   std::move(body));
      }
      case FormulaKind::conjunction:
      case FormulaKind::disjunction: {
        std::vector<Formula> ops;
        for (const Formula& g : f.operands()) ops.push_back(run(g));
        return f.kind() == FormulaKind::conjunction
                   ? Formula::conjunction(std::move(ops))
                   : Formula::disjunction(std::move(ops));
      }
      default:
        throw ContractError("standardize_apart expects an NNF formula");
    }
  }

 private:
  Symbol pick(Symbol var) {
    std::string base(var.name());
    if (used_.insert(base).second) return var;
    std::size_t& n = counters_[base];
    std::string name;
    do {
      name = base + "_" + std::to_string(++n);
    } while (used_.count(name));
    used_.insert(name);
    return Symbol(name);
  }

  std::set<std::string> used_;
  std::map<std::string, std::size_t> counters_;
  std::map<Symbol, Symbol> names_;
};

void prenex_rec(const Formula& f, std::vector<QuantifiedVar>& prefix,
                Formula& matrix) {
  switch (f.kind()) {
    case FormulaKind::forall:
    case FormulaKind::exists:
      prefix.push_back({f.kind() == FormulaKind::forall ? Quantifier::forall
                                                         : Quantifier::exists,
                        f.bound_var()});
      prenex_rec(f.body(), prefix, matrix);
      return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      std::vector<Formula> ops;
      for (const Formula& g : f.operands()) {
        Formula m;
        prenex_rec(g, prefix, m);
        ops.push_back(std::move(m));
      }
      matrix = f.kind() == FormulaKind::conjunction
                   ? Formula::conjunction(std::move(ops))
                   : Formula::disjunction(std::move(ops));
      return;
    }
    case FormulaKind::literal:
    case FormulaKind::top:
    case FormulaKind::bottom:
      matrix = f;
      return;
    default:
      throw ContractError("prenex expects an NNF formula");
  }
}

Formula dual_matrix(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::literal:
      return Formula::literal(f.lit().complement());
    case FormulaKind::top:
      return Formula::bottom();
    case FormulaKind::bottom:
      return Formula::top();
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      std::vector<Formula> ops;
      for (const Formula& g : f.operands()) ops.push_back(dual_matrix(g));
      return f.kind() == FormulaKind::conjunction
                 ? Formula::disjunction(std::move(ops))
                 : Formula::conjunction(std::move(ops));
    }
    default:
      throw ContractError("dual expects a prenex formula with an NNF matrix");
  }
}

// Clause list without repeated literal sets, first occurrence wins.
class ClauseSet {
 public:
  void add(Clause c) {
    Clause key = c;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (seen_.insert(std::move(key)).second) clauses_.push_back(std::move(c));
  }
  std::vector<Clause> take() { return std::move(clauses_); }
  std::size_t size() const { return clauses_.size(); }

 private:
  std::set<Clause> seen_;
  std::vector<Clause> clauses_;
};

// `junction` is the connective whose operands are concatenated (∧ for cnf);
// the other one distributes.
std::vector<Clause> distribute(const Formula& f, FormulaKind junction,
                               std::size_t limit) {
  FormulaKind product = junction == FormulaKind::conjunction
                            ? FormulaKind::disjunction
                            : FormulaKind::conjunction;
  FormulaKind unit = junction == FormulaKind::conjunction ? FormulaKind::top
                                                          : FormulaKind::bottom;
  if (f.is_literal()) return {Clause{f.lit()}};
  if (f.kind() == unit) return {};
  if (f.is_truth_constant()) return {Clause{}};
  if (f.kind() == junction) {
    ClauseSet out;
    for (const Formula& g : f.operands()) {
      for (Clause& c : distribute(g, junction, limit)) {
        out.add(std::move(c));
        if (out.size() > limit) {
          throw ResourceError("normal form exceeds clause limit of " +
                              std::to_string(limit));
        }
      }
    }
    return out.take();
  }
  if (f.kind() != product) {
    throw ContractError("clause distribution expects a quantifier-free NNF");
  }
  std::vector<Clause> acc{Clause{}};
  for (const Formula& g : f.operands()) {
    std::vector<Clause> part = distribute(g, junction, limit);
    ClauseSet next;
    for (const Clause& a : acc) {
      for (const Clause& b : part) {
        Clause c = a;
        c.insert(c.end(), b.begin(), b.end());
        next.add(dedup_literals(std::move(c)));
        if (next.size() > limit) {
          throw ResourceError("normal form exceeds clause limit of " +
                              std::to_string(limit));
        }
      }
    }
    acc = next.take();
  }
  return acc;
}

PrenexNormalForm normal_form(const Formula& f, MatrixKind kind,
                             std::size_t max_clauses) {
  Prenexed p = prenex(standardize_apart(nnf(f)));
  PrenexNormalForm out;
  out.kind = kind;
  out.prefix = std::move(p.prefix);
  out.matrix = distribute(p.matrix,
                          kind == MatrixKind::cnf ? FormulaKind::conjunction
                                                  : FormulaKind::disjunction,
                          max_clauses);
  return out;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_rec(f, true); }

Formula standardize_apart(const Formula& f) {
  return Standardizer(free_vars(f)).run(f);
}

namespace {

Formula junction(FormulaKind kind, std::vector<Formula> ops) {
  return kind == FormulaKind::conjunction ? conjoin(std::move(ops)) : disjoin(std::move(ops));
}

Formula push_quantifier(bool universal, const Symbol& x, const Formula& body) {
  if (!free_vars(body).contains(x)) return body;
  if (body.kind() != FormulaKind::conjunction && body.kind() != FormulaKind::disjunction) {
    return Formula::quantifier(universal, x, body);
  }
  bool distributes = universal == (body.kind() == FormulaKind::conjunction);
  std::vector<Formula> out;
  std::vector<Formula> dependent;
  for (const Formula& op : body.operands()) {
    if (distributes) {
      out.push_back(push_quantifier(universal, x, op));
    } else if (free_vars(op).contains(x)) {
      dependent.push_back(op);
    } else {
      out.push_back(op);
    }
  }
  if (!distributes) {
    if (out.empty()) return Formula::quantifier(universal, x, body);
    out.push_back(dependent.size() == 1
                      ? push_quantifier(universal, x, dependent.front())
                      : Formula::quantifier(universal, x, junction(body.kind(), std::move(dependent))));
  }
  return junction(body.kind(), std::move(out));
}

}  // namespace

Formula miniscope(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      std::vector<Formula> ops;
      for (const Formula& g : f.operands()) ops.push_back(miniscope(g));
      return junction(f.kind(), std::move(ops));
    }
    case FormulaKind::forall:
    case FormulaKind::exists:
      return push_quantifier(f.kind() == FormulaKind::forall, f.bound_var(), miniscope(f.body()));
    default:
      return f;
  }
}

Prenexed prenex(const Formula& f) {
  Prenexed out;
  prenex_rec(f, out.prefix, out.matrix);
  return out;
}

Formula dual(const Formula& f) {
  if (f.is_quantifier()) {
    return Formula::quantifier(f.kind() != FormulaKind::forall, f.bound_var(),
                               dual(f.body()));
  }
  return dual_matrix(f);
}

PrenexNormalForm dual(const PrenexNormalForm& f) {
  PrenexNormalForm out;
  out.kind = f.kind == MatrixKind::cnf ? MatrixKind::dnf : MatrixKind::cnf;
  for (const QuantifiedVar& q : f.prefix) {
    out.prefix.push_back({q.quantifier == Quantifier::forall ? Quantifier::exists
                                                             : Quantifier::forall,
                          q.var});
  }
  for (const Clause& c : f.matrix) {
    Clause d;
    for (const Literal& l : c) d.push_back(l.complement());
    out.matrix.push_back(std::move(d));
  }
  return out;
}

PrenexNormalForm cnf(const Formula& f, std::size_t max_clauses) {
  return normal_form(f, MatrixKind::cnf, max_clauses);
}

PrenexNormalForm dnf(const Formula& f, std::size_t max_clauses) {
  return normal_form(f, MatrixKind::dnf, max_clauses);
}

void FreshSymbols::reserve(const Vocabulary& voc) {
  for (Symbol s : voc.functions) reserve(s.name());
  for (const auto& [p, pol] : voc.predicates) reserve(p.name());
}

Symbol FreshSymbols::next(const std::string& prefix) {
  std::size_t& n = counters_[prefix];
  std::string name;
  do {
    name = prefix + std::to_string(n++);
  } while (reserved_.count(name));
  reserved_.insert(name);
  return Symbol(name);
}

Symbol FreshSymbols::fresh_like(const std::string& base) {
  if (reserved_.insert(base).second) return Symbol(base);
  std::size_t& n = counters_[base + "_"];
  std::string name;
  do {
    name = base + "_" + std::to_string(++n);
  } while (reserved_.count(name));
  reserved_.insert(name);
  return Symbol(name);
}

FrozenPair freeze_free_vars(const Formula& f, const Formula& g) {
  FreshSymbols fresh;
  fresh.reserve(vocabulary(f));
  fresh.reserve(vocabulary(g));
  std::set<Symbol> fv = free_vars(f);
  std::set<Symbol> gv = free_vars(g);
  std::set<Symbol> all = fv;
  all.insert(gv.begin(), gv.end());

  FrozenPair out;
  Substitution sub;
  for (Symbol v : all) {
    Symbol c = fresh.fresh_like("c_" + std::string(v.name()));
    out.var_to_const[v] = c;
    out.const_to_var[c] = v;
    sub.bind(v, Term::function(c));
    if (fv.count(v) && gv.count(v)) out.shared.insert(c);
  }
  out.f = sub.apply(f);
  out.g = sub.apply(g);
  return out;
}

namespace {

Term unfreeze_term(const Term& t, const std::map<Symbol, Symbol>& m) {
  if (t.is_variable()) return t;
  if (t.arity() == 0) {
    auto it = m.find(t.symbol());
    return it == m.end() ? t : Term::variable(it->second);
  }
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(unfreeze_term(a, m));
  return Term::function(t.symbol(), std::move(args));
}

}  // namespace

Formula unfreeze(const Formula& f, const std::map<Symbol, Symbol>& const_to_var) {
  if (const_to_var.empty()) return f;
  return map_literals(f, [&](const Literal& l) {
    std::vector<Term> args;
    for (const Term& a : l.args()) args.push_back(unfreeze_term(a, const_to_var));
    return Literal(l.positive(), l.predicate(), std::move(args));
  });
}

ClausificationResult skolemize_clausify(const Formula& sentence,
                                        ClausifyPolarity polarity,
                                        FreshSymbols& fresh,
                                        std::size_t max_clauses) {
  if (!free_vars(sentence).empty()) {
    throw ContractError("skolemize_clausify expects a sentence");
  }
  Formula input = polarity == ClausifyPolarity::negated
                      ? Formula::negation(sentence)
                      : sentence;
  PrenexNormalForm pnf = cnf(input, max_clauses);

  ClausificationResult out;
  Substitution sub;
  std::vector<Term> universals;
  for (const QuantifiedVar& q : pnf.prefix) {
    if (q.quantifier == Quantifier::forall) {
      universals.push_back(Term::variable(q.var));
      out.universal_vars.insert(q.var);
      continue;
    }
    Symbol sk = fresh.next("sk");
    out.skolem_functions.insert(sk);
    std::vector<Term> args;
    for (const Term& u : universals) args.push_back(sub.apply(u));
    sub.bind(q.var, Term::function(sk, std::move(args)));
  }
  out.clauses.reserve(pnf.matrix.size());
  for (const Clause& c : pnf.matrix) out.clauses.push_back(sub.apply(c));
  return out;
}

std::vector<Clause> equality_axioms(const Signature& sig) {
  const Symbol& eq = equality_symbol();
  auto var = [](const std::string& name) { return Term::variable(Symbol(name)); };
  auto equal = [&](bool positive, Term a, Term b) {
    return Literal(positive, eq, {std::move(a), std::move(b)});
  };
  Term x = var("X"), y = var("Y"), z = var("Z");

  std::vector<Clause> out;
  out.push_back({equal(true, x, x)});
  out.push_back({equal(false, x, y), equal(true, y, x)});
  out.push_back({equal(false, x, y), equal(false, y, z), equal(true, x, z)});

  auto arguments = [&](std::size_t n, std::size_t i, bool primed) {
    std::vector<Term> args;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i && primed) {
        args.push_back(var("Y" + std::to_string(k + 1)));
      } else {
        args.push_back(var("X" + std::to_string(k + 1)));
      }
    }
    return args;
  };

  for (const auto& [f, n] : sig.functions) {
    for (std::size_t i = 0; i < n; ++i) {
      Term xi = var("X" + std::to_string(i + 1));
      Term yi = var("Y" + std::to_string(i + 1));
      out.push_back({equal(false, xi, yi),
                     equal(true, Term::function(f, arguments(n, i, false)),
                           Term::function(f, arguments(n, i, true)))});
    }
  }
  for (const auto& [p, n] : sig.predicates) {
    if (p == eq) continue;
    for (std::size_t i = 0; i < n; ++i) {
      Term xi = var("X" + std::to_string(i + 1));
      Term yi = var("Y" + std::to_string(i + 1));
      out.push_back({equal(false, xi, yi), Literal(false, p, arguments(n, i, false)),
                     Literal(true, p, arguments(n, i, true))});
    }
  }
  return out;
}

}  // namespace craigtab
