#include "craigtab/interpolate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <set>

#include "craigtab/errors.hpp"
#include "craigtab/print.hpp"
#include "craigtab/restriction.hpp"

namespace craigtab {

bool InterpolationContext::is_f_term(const Term& t) const {
  return !t.is_variable() && funcs_f.contains(t.symbol());
}

bool InterpolationContext::is_g_term(const Term& t) const {
  return !t.is_variable() && funcs_g.contains(t.symbol());
}

bool InterpolationContext::is_v_term(const Term& t) const {
  if (is_f_term(t) || is_g_term(t)) return true;
  return !t.is_variable() && t.arity() == 0 && placeholders.contains(t.symbol());
}

TermClass InterpolationContext::f_terms() const {
  return [funcs = funcs_f](const Term& t) {
    return !t.is_variable() && funcs.contains(t.symbol());
  };
}

TermClass InterpolationContext::g_terms() const {
  return [funcs = funcs_g](const Term& t) {
    return !t.is_variable() && funcs.contains(t.symbol());
  };
}

TermClass InterpolationContext::v_terms() const {
  return [ctx = *this](const Term& t) { return ctx.is_v_term(t); };
}

TermClass InterpolationContext::placeholder_terms() const {
  return [c = placeholders](const Term& t) {
    return !t.is_variable() && t.arity() == 0 && c.contains(t.symbol());
  };
}

void InterpolationContext::compute_function_sets() {
  std::set<Symbol> in_f = functions(f_c);
  std::set<Symbol> in_g = functions(g_c);
  funcs_f = skolem_f;
  funcs_g = skolem_g;
  for (Symbol s : in_f) {
    if (!in_g.contains(s)) funcs_f.insert(s);
  }
  for (Symbol s : in_g) {
    if (!in_f.contains(s)) funcs_g.insert(s);
  }
  funcs_f.insert(grounding_f.begin(), grounding_f.end());
  funcs_g.insert(grounding_g.begin(), grounding_g.end());
}

Formula truth_simplify(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      bool conj = f.kind() == FormulaKind::conjunction;
      FormulaKind unit = conj ? FormulaKind::top : FormulaKind::bottom;
      std::vector<Formula> kept;
      for (const Formula& op : f.operands()) {
        Formula s = truth_simplify(op);
        if (s.kind() == unit) continue;
        if (s.is_truth_constant()) return s;
        kept.push_back(std::move(s));
      }
      return conj ? conjoin(std::move(kept)) : disjoin(std::move(kept));
    }
    case FormulaKind::negation: {
      Formula s = truth_simplify(f.operands()[0]);
      if (s.is_truth_constant()) return Formula::truth(s.kind() == FormulaKind::bottom);
      return Formula::negation(std::move(s));
    }
    case FormulaKind::implication:
      return Formula::implication(truth_simplify(f.operands()[0]),
                                  truth_simplify(f.operands()[1]));
    case FormulaKind::equivalence:
      return Formula::equivalence(truth_simplify(f.operands()[0]),
                                  truth_simplify(f.operands()[1]));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      Formula body = truth_simplify(f.body());
      if (body.is_truth_constant()) return body;
      return Formula::quantifier(f.kind() == FormulaKind::forall, f.bound_var(),
                                 std::move(body));
    }
    default:
      return f;
  }
}

namespace {

Formula tidy_structure(const Formula& f) {
  Formula s = truth_simplify(f);
  if (s.kind() != FormulaKind::conjunction && s.kind() != FormulaKind::disjunction) return s;
  FormulaKind kind = s.kind();
  FormulaKind dual_kind =
      kind == FormulaKind::conjunction ? FormulaKind::disjunction : FormulaKind::conjunction;
  std::vector<Formula> flat;
  auto add = [&](const Formula& op) {
    if (std::find(flat.begin(), flat.end(), op) == flat.end()) flat.push_back(op);
  };
  for (const Formula& op : s.operands()) {
    Formula t = tidy_structure(op);
    if (t.kind() == kind) {
      for (const Formula& inner : t.operands()) add(inner);
    } else {
      add(t);
    }
  }
  std::vector<Formula> kept;
  for (const Formula& op : flat) {
    bool absorbed = op.kind() == dual_kind &&
                    std::any_of(op.operands().begin(), op.operands().end(), [&](const Formula& x) {
                      return std::find(flat.begin(), flat.end(), x) != flat.end();
                    });
    if (!absorbed) kept.push_back(op);
  }
  return kind == FormulaKind::conjunction ? conjoin(std::move(kept)) : disjoin(std::move(kept));
}

// Replaces literals assumed true by ⊤ and their complements by ⊥. Literal
// operands of a conjunction are assumed in their siblings, complements of
// literal operands of a disjunction likewise.
Formula in_context(const Formula& f, const std::set<Literal>& assumed) {
  switch (f.kind()) {
    case FormulaKind::literal:
      if (assumed.contains(f.lit())) return Formula::top();
      if (assumed.contains(f.lit().complement())) return Formula::bottom();
      return f;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      bool conj = f.kind() == FormulaKind::conjunction;
      std::set<Literal> inner = assumed;
      for (const Formula& op : f.operands()) {
        if (op.kind() == FormulaKind::literal) inner.insert(conj ? op.lit() : op.lit().complement());
      }
      std::vector<Formula> ops;
      for (const Formula& op : f.operands()) {
        ops.push_back(op.kind() == FormulaKind::literal ? in_context(op, assumed) : in_context(op, inner));
      }
      return conj ? Formula::conjunction(std::move(ops)) : Formula::disjunction(std::move(ops));
    }
    default:
      return f;
  }
}

}  // namespace

Formula tidy(const Formula& f) {
  Formula current = tidy_structure(f);
  for (;;) {
    Formula next = tidy_structure(in_context(current, {}));
    if (next == current) return current;
    current = std::move(next);
  }
}

namespace {

// sides[d] is the side of the node at depth d on the current branch.
IpolTree ipol_node(const TableauNode& n, std::vector<Side>& sides) {
  if (n.is_leaf()) {
    if (!n.target_depth || *n.target_depth == 0 || *n.target_depth >= sides.size()) {
      throw StructuralError("leaf " + to_string(*n.literal) + " does not close its branch");
    }
    Side own = sides.back();
    Side target = sides[*n.target_depth];
    const Literal& lit = *n.literal;
    if (own == Side::F) {
      return {target == Side::F ? Formula::bottom() : Formula::literal(lit), {}};
    }
    return {target == Side::F ? Formula::literal(lit.complement()) : Formula::top(), {}};
  }
  IpolTree out;
  std::vector<Formula> values;
  Side side = *n.children.front().side;
  for (const TableauNode& c : n.children) {
    sides.push_back(*c.side);
    out.children.push_back(ipol_node(c, sides));
    sides.pop_back();
    values.push_back(out.children.back().value);
  }
  Formula combined = side == Side::F ? Formula::disjunction(std::move(values))
                                     : Formula::conjunction(std::move(values));
  out.value = truth_simplify(combined);
  return out;
}

void check_two_sided(const TableauNode& n, bool root) {
  if (!root) {
    if (!n.side) throw StructuralError("tableau node without side label");
    if (!n.literal || !n.literal->is_ground()) {
      throw StructuralError("tableau is not ground");
    }
  }
  for (const TableauNode& c : n.children) {
    if (c.side != n.children.front().side) {
      throw StructuralError("children of one node carry different sides");
    }
    check_two_sided(c, false);
  }
}

void lifting_occurrences(const Term& t, const InterpolationContext& ctx,
                         std::vector<Term>& out) {
  if (t.is_variable()) return;
  if (ctx.is_f_term(t) || ctx.is_g_term(t)) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return;
  }
  for (const Term& a : t.args()) lifting_occurrences(a, ctx, out);
}

void collect_literals(const Formula& f, std::vector<Literal>& out) {
  if (f.is_literal()) {
    out.push_back(f.lit());
    return;
  }
  if (f.is_quantifier()) {
    collect_literals(f.body(), out);
    return;
  }
  for (const Formula& op : f.operands()) collect_literals(op, out);
}

Term replace_maximal(const Term& t, const InterpolationContext& ctx,
                     const std::map<Term, Symbol>& names) {
  if (t.is_variable()) return t;
  if (ctx.is_f_term(t) || ctx.is_g_term(t)) return Term::variable(names.at(t));
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(replace_maximal(a, ctx, names));
  return Term::function(t.symbol(), std::move(args));
}

// Naive distribution of a quantifier-free NNF formula into clauses.
std::vector<Clause> distribute(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::literal:
      return {{f.lit()}};
    case FormulaKind::top:
      return {};
    case FormulaKind::bottom:
      return {{}};
    case FormulaKind::conjunction: {
      std::vector<Clause> out;
      for (const Formula& op : f.operands()) {
        for (Clause& c : distribute(op)) out.push_back(std::move(c));
      }
      return out;
    }
    case FormulaKind::disjunction: {
      std::vector<Clause> out{{}};
      for (const Formula& op : f.operands()) {
        std::vector<Clause> part = distribute(op);
        std::vector<Clause> next;
        for (const Clause& a : out) {
          for (const Clause& b : part) {
            Clause c = a;
            c.insert(c.end(), b.begin(), b.end());
            next.push_back(std::move(c));
          }
        }
        out = std::move(next);
      }
      return out;
    }
    default:
      throw ContractError("expected a quantifier-free NNF formula");
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

void add_equality_axioms(std::vector<Clause>& f_side, std::vector<Clause>& g_side) {
  Signature sf, sg;
  for (const Clause& c : f_side) sf.add(c);
  for (const Clause& c : g_side) sg.add(c);
  if (!sf.predicates.contains(equality_symbol()) &&
      !sg.predicates.contains(equality_symbol())) {
    return;
  }
  for (Clause& c : equality_axioms(sf)) f_side.push_back(std::move(c));
  for (Clause& c : equality_axioms(sg)) g_side.push_back(std::move(c));
}

ProverLimits headroom(const ProverLimits& limits) {
  ProverLimits out = limits;
  constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  out.max_inferences = limits.max_inferences > max / 4 ? max : limits.max_inferences * 4;
  if (limits.timeout) out.timeout = *limits.timeout * 4;
  return out;
}

bool check_requirement(Requirement r, const Formula& h, std::size_t max_clauses) {
  switch (r) {
    case Requirement::u_rr:
      return is_u_range_restricted(h, max_clauses).verdict;
    case Requirement::vgt_rr:
      return is_vgt_range_restricted(h, max_clauses).verdict;
    case Requirement::horn:
      return is_horn(h);
  }
  return false;
}

}  // namespace

IpolTree extract_ipol_tree(const Tableau& t) {
  Tableau copy = t;
  check_two_sided(copy.root, true);
  if (!is_closed(copy)) throw StructuralError("tableau is not closed");
  if (copy.root.is_leaf()) return {Formula::bottom(), {}};
  std::vector<Side> sides{Side::F};  // placeholder for the root
  return ipol_node(copy.root, sides);
}

Formula extract_ipol(const Tableau& t) { return extract_ipol_tree(t).value; }

std::vector<Term> lifting_terms(const Formula& h_grd, const InterpolationContext& ctx) {
  std::vector<Literal> lits;
  collect_literals(h_grd, lits);
  std::vector<Term> terms;
  for (const Literal& l : lits) {
    for (const Term& a : l.args()) lifting_occurrences(a, ctx, terms);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.depth() < b.depth();
  });
  return terms;
}

Formula lift(const Formula& h_grd, const InterpolationContext& ctx) {
  std::vector<Term> terms = lifting_terms(h_grd, ctx);
  if (terms.empty()) return h_grd;

  std::set<Symbol> taken = free_vars(ctx.f);
  for (Symbol v : free_vars(ctx.g)) taken.insert(v);
  std::map<Term, Symbol> names;
  std::vector<Symbol> order;
  std::size_t counter = 1;
  for (const Term& t : terms) {
    Symbol v;
    do {
      v = Symbol("V" + std::to_string(counter++));
    } while (taken.contains(v));
    names.emplace(t, v);
    order.push_back(v);
  }

  Formula out = map_literals(h_grd, [&](const Literal& l) {
    std::vector<Term> args;
    for (const Term& a : l.args()) args.push_back(replace_maximal(a, ctx, names));
    return Literal(l.positive(), l.predicate(), std::move(args));
  });
  for (std::size_t i = terms.size(); i-- > 0;) {
    out = Formula::quantifier(ctx.is_g_term(terms[i]), order[i], std::move(out));
  }
  return out;
}

Formula hornify(const Formula& f) {
  Formula s = truth_simplify(f);
  if (!is_horn_like(s)) throw ContractError("hornify expects a Horn-like formula");
  std::vector<Clause> clauses;
  for (Clause& c : distribute(s)) {
    c = dedup_literals(std::move(c));
    bool seen = std::any_of(clauses.begin(), clauses.end(),
                            [&](const Clause& d) { return same_literal_set(c, d); });
    if (!seen) clauses.push_back(std::move(c));
  }
  std::vector<Formula> conjuncts;
  for (const Clause& c : clauses) {
    if (c.empty()) return Formula::bottom();
    std::vector<Formula> lits;
    for (const Literal& l : c) lits.push_back(Formula::literal(l));
    conjuncts.push_back(disjoin(std::move(lits)));
  }
  return conjoin(std::move(conjuncts));
}

std::string to_string(Requirement r) {
  switch (r) {
    case Requirement::u_rr:
      return "u-rr";
    case Requirement::vgt_rr:
      return "vgt-rr";
    case Requirement::horn:
      return "horn";
  }
  return "?";
}

std::optional<Requirement> parse_requirement(std::string_view text) {
  if (text == "u-rr") return Requirement::u_rr;
  if (text == "vgt-rr") return Requirement::vgt_rr;
  if (text == "horn") return Requirement::horn;
  return std::nullopt;
}

std::string to_string(InterpolationStatus s) {
  switch (s) {
    case InterpolationStatus::ok:
      return "ok";
    case InterpolationStatus::not_entailed:
      return "not_entailed";
    case InterpolationStatus::not_proved:
      return "not_proved";
    case InterpolationStatus::requirement_failed:
      return "requirement_failed";
  }
  return "?";
}

InterpolationResult interpolate(const Formula& f, const Formula& g,
                                const InterpolationOptions& options) {
  using Clock = std::chrono::steady_clock;
  InterpolationResult r;
  InterpolationContext& ctx = r.context;
  InterpolationReport& report = r.report;
  auto stage = [&](const char* name, Clock::time_point since) {
    report.timings.push_back({name, elapsed_ms(since)});
  };

  auto start = Clock::now();
  ctx.f = f;
  ctx.g = g;
  FrozenPair frozen = freeze_free_vars(f, g);
  ctx.f_c = frozen.f;
  ctx.g_c = frozen.g;
  ctx.placeholders = frozen.shared;
  ctx.const_to_var = frozen.const_to_var;

  FreshSymbols fresh;
  fresh.reserve(vocabulary(ctx.f_c));
  fresh.reserve(vocabulary(ctx.g_c));
  ClausificationResult fc =
      skolemize_clausify(ctx.f_c, ClausifyPolarity::as_stated, fresh, options.max_clauses);
  ClausificationResult gc =
      skolemize_clausify(ctx.g_c, ClausifyPolarity::negated, fresh, options.max_clauses);
  ctx.f_clauses = std::move(fc.clauses);
  ctx.g_clauses = std::move(gc.clauses);
  ctx.skolem_f = std::move(fc.skolem_functions);
  ctx.skolem_g = std::move(gc.skolem_functions);
  if (options.equality_axioms) add_equality_axioms(ctx.f_clauses, ctx.g_clauses);
  ctx.compute_function_sets();
  stage("clausify", start);

  auto has_empty = [](const std::vector<Clause>& cs) {
    return std::any_of(cs.begin(), cs.end(), [](const Clause& c) { return c.empty(); });
  };
  if (has_empty(ctx.f_clauses) || has_empty(ctx.g_clauses)) {
    bool f_empty = has_empty(ctx.f_clauses);
    r.h_grd = Formula::truth(!f_empty);
    r.h = r.h_grd;
    report.shortcut = true;
    report.proof_status = ProofStatus::proved;
    r.status = InterpolationStatus::ok;
    for (Requirement req : options.require) {
      if (!check_requirement(req, r.h, options.max_clauses)) {
        report.failed_requirements.push_back(to_string(req));
      }
    }
    if (!report.failed_requirements.empty()) r.status = InterpolationStatus::requirement_failed;
    return r;
  }

  start = Clock::now();
  std::vector<Clause> all = ctx.f_clauses;
  all.insert(all.end(), ctx.g_clauses.begin(), ctx.g_clauses.end());
  ProofResult proof = prove(all, options.limits);
  stage("prove", start);
  report.proof_status = proof.status;
  report.inferences = proof.inferences;
  if (proof.status != ProofStatus::proved) {
    r.status = proof.status == ProofStatus::satisfiable ? InterpolationStatus::not_entailed
                                                        : InterpolationStatus::not_proved;
    report.message = proof.reason;
    return r;
  }

  start = Clock::now();
  GroundingResult grounded = ground_tableau(proof.tableau, options.grounding, fresh);
  ctx.grounding_f = std::move(grounded.fresh_f);
  ctx.grounding_g = std::move(grounded.fresh_g);
  ctx.compute_function_sets();
  Tableau tableau = std::move(grounded.tableau);
  stage("ground", start);

  if (!options.require.empty() || options.force_hyper) {
    start = Clock::now();
    HyperOptions hopts;
    hopts.max_nodes = options.max_nodes;
    HyperResult hyper = hyper_convert(tableau, hopts);
    report.size_before_hyper = hyper.size_before;
    report.size_after_hyper = hyper.size_after;
    report.hyper_rounds = hyper.rounds;
    r.trace = std::move(hyper.trace);
    tableau = std::move(hyper.tableau);
    stage("hyper", start);
  }

  start = Clock::now();
  tableau = assign_sides(tableau, ctx.f_clauses, ctx.g_clauses, options.tie);
  is_closed(tableau);
  stage("sides", start);

  start = Clock::now();
  r.ipol = extract_ipol_tree(tableau);
  r.h_grd = r.ipol->value;
  r.tableau = std::move(tableau);
  stage("extract", start);

  start = Clock::now();
  Formula ground = options.tidy ? tidy(r.h_grd) : r.h_grd;
  if (options.require.contains(Requirement::horn)) {
    if (is_horn_like(ground)) {
      ground = hornify(ground);
    } else {
      report.failed_requirements.push_back("horn-like");
    }
  }
  r.h = unfreeze(lift(ground, ctx), ctx.const_to_var);
  stage("lift", start);

  for (Requirement req : options.require) {
    if (!check_requirement(req, r.h, options.max_clauses)) {
      report.failed_requirements.push_back(to_string(req));
    }
  }
  r.status = report.failed_requirements.empty() ? InterpolationStatus::ok
                                                 : InterpolationStatus::requirement_failed;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const VerificationItem& i) { return i.verdict == Verdict::pass; });
}

namespace {

// Splits ∧ (also under ∀) of an NNF conclusion, or ∨ (also under ∃) of an NNF
// premise.
std::vector<Formula> split_junction(const Formula& f, FormulaKind junction, FormulaKind binder) {
  if (f.kind() == junction) return {f.operands().begin(), f.operands().end()};
  if (f.kind() == binder) {
    std::vector<Formula> parts = split_junction(f.body(), junction, binder);
    if (parts.size() > 1) {
      for (Formula& part : parts) {
        part = Formula::quantifier(binder == FormulaKind::forall, f.bound_var(), part);
      }
    }
    return parts;
  }
  return {f};
}

ProofStatus all_of(const std::vector<Formula>& parts,
                   const std::function<ProofStatus(const Formula&)>& check) {
  bool resource_out = false;
  for (const Formula& part : parts) {
    ProofStatus s = check(part);
    if (s == ProofStatus::satisfiable) return s;
    if (s == ProofStatus::resource_out) resource_out = true;
  }
  return resource_out ? ProofStatus::resource_out : ProofStatus::proved;
}

ProofStatus entails_by_refutation(const Formula& premise, const Formula& conclusion,
                                  const ProverLimits& limits, std::size_t max_clauses) {
  FrozenPair frozen = freeze_free_vars(premise, conclusion);
  FreshSymbols fresh;
  fresh.reserve(vocabulary(frozen.f));
  fresh.reserve(vocabulary(frozen.g));
  ClausificationResult a =
      skolemize_clausify(frozen.f, ClausifyPolarity::as_stated, fresh, max_clauses);
  ClausificationResult b =
      skolemize_clausify(frozen.g, ClausifyPolarity::negated, fresh, max_clauses);
  std::vector<Clause> clauses = std::move(a.clauses);
  clauses.insert(clauses.end(), b.clauses.begin(), b.clauses.end());
  Signature sig;
  for (const Clause& c : clauses) {
    if (c.empty()) return ProofStatus::proved;
    sig.add(c);
  }
  if (sig.predicates.contains(equality_symbol())) {
    for (Clause& c : equality_axioms(sig)) clauses.push_back(std::move(c));
  }
  return prove(clauses, limits).status;
}

}  // namespace

namespace {

using Clock = std::chrono::steady_clock;

ProofStatus entails_until(const Formula& premise, const Formula& conclusion, const ProverLimits& limits,
                          std::optional<Clock::time_point> deadline, std::size_t max_clauses) {
  ProverLimits part = limits;
  if (deadline) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now());
    if (left.count() <= 0) return ProofStatus::resource_out;
    part.timeout = left;
  }
  Formula c = miniscope(nnf(conclusion));
  std::vector<Formula> conjuncts = split_junction(c, FormulaKind::conjunction, FormulaKind::forall);
  if (conjuncts.size() > 1) {
    return all_of(conjuncts, [&](const Formula& g) {
      return entails_until(premise, g, limits, deadline, max_clauses);
    });
  }
  if (c.kind() == FormulaKind::disjunction) {
    // premise ⊨ A ∨ B iff premise ∧ ¬A ⊨ B, keeping a disjunct B that splits.
    const auto& ops = c.operands();
    auto kept = std::find_if(ops.begin(), ops.end(), [](const Formula& op) {
      return split_junction(op, FormulaKind::conjunction, FormulaKind::forall).size() > 1;
    });
    if (kept != ops.end()) {
      std::vector<Formula> assumptions{premise};
      for (auto it = ops.begin(); it != ops.end(); ++it) {
        if (it != kept) assumptions.push_back(nnf(Formula::negation(*it)));
      }
      return entails_until(conjoin(std::move(assumptions)), *kept, limits, deadline, max_clauses);
    }
  }
  Formula p = miniscope(nnf(premise));
  std::vector<Formula> disjuncts = split_junction(p, FormulaKind::disjunction, FormulaKind::exists);
  if (disjuncts.size() > 1) {
    return all_of(disjuncts, [&](const Formula& f) {
      return entails_until(f, c, limits, deadline, max_clauses);
    });
  }
  return entails_by_refutation(p, c, part, max_clauses);
}

}  // namespace

ProofStatus entails(const Formula& premise, const Formula& conclusion,
                    const ProverLimits& limits, std::size_t max_clauses) {
  std::optional<Clock::time_point> deadline;
  if (limits.timeout) deadline = Clock::now() + *limits.timeout;
  return entails_until(premise, conclusion, limits, deadline, max_clauses);
}

VerificationReport verify_interpolant(const Formula& f, const Formula& g, const Formula& h,
                                      const std::set<Requirement>& required,
                                      const ProverLimits& limits) {
  VerificationReport report;

  Vocabulary vf = vocabulary(f), vg = vocabulary(g), vh = vocabulary(h);
  Vocabulary shared = vf.intersect(vg);
  std::string missing;
  for (Symbol s : vh.functions) {
    if (!shared.functions.contains(s)) missing += " " + std::string(s.name());
  }
  for (const auto& entry : vh.predicates) {
    if (entry.first == equality_symbol()) continue;
    if (!shared.predicates.contains(entry)) {
      missing += std::string(" ") + (entry.second == Polarity::positive ? "+" : "-") +
                 std::string(entry.first.name());
    }
  }
  report.items.push_back({"vocabulary", missing.empty() ? Verdict::pass : Verdict::fail,
                          missing.empty() ? "" : "not shared:" + missing});

  std::set<Symbol> ff = free_vars(f), gf = free_vars(g);
  std::string extra;
  for (Symbol v : free_vars(h)) {
    if (!ff.contains(v) || !gf.contains(v)) extra += " " + std::string(v.name());
  }
  report.items.push_back({"free-variables", extra.empty() ? Verdict::pass : Verdict::fail,
                          extra.empty() ? "" : "not shared:" + extra});

  ProverLimits wide = headroom(limits);
  auto entailment = [&](const char* name, const Formula& a, const Formula& b) {
    ProofStatus s = entails(a, b, wide);
    Verdict v = s == ProofStatus::proved        ? Verdict::pass
                : s == ProofStatus::satisfiable ? Verdict::fail
                                                : Verdict::inconclusive;
    report.items.push_back({name, v, to_string(s)});
  };
  entailment("F entails H", f, h);
  entailment("H entails G", h, g);

  for (Requirement req : required) {
    bool ok = check_requirement(req, h, kDefaultClauseLimit);
    report.items.push_back({to_string(req), ok ? Verdict::pass : Verdict::fail, ""});
  }
  return report;
}

InterpolationResult synthesize_definition(const Formula& k, const Formula& q,
                                          const std::set<Symbol>& targets,
                                          const InterpolationOptions& options) {
  if (targets.empty()) throw ContractError("definition synthesis needs target predicates");
  FreshSymbols fresh;
  Vocabulary vk = vocabulary(k), vq = vocabulary(q);
  fresh.reserve(vk);
  fresh.reserve(vq);
  std::map<Symbol, Symbol> primed;
  for (const Vocabulary* v : {&vk, &vq}) {
    for (const auto& [p, pol] : v->predicates) {
      if (targets.contains(p) || p == equality_symbol() || primed.contains(p)) continue;
      primed.emplace(p, fresh.fresh_like(std::string(p.name()) + "_prime"));
    }
  }
  auto prime = [&](const Formula& f) {
    return map_literals(f, [&](const Literal& l) {
      auto it = primed.find(l.predicate());
      if (it == primed.end()) return l;
      return Literal(l.positive(), it->second, l.arg_vector());
    });
  };
  Formula lhs = Formula::conjunction({k, q});
  Formula rhs = Formula::disjunction({Formula::negation(prime(k)), prime(q)});
  return interpolate(lhs, rhs, options);
}

}  // namespace craigtab
