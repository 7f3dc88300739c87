#include "craigtab/restriction.hpp"

#include "craigtab/errors.hpp"
#include "craigtab/print.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab {

void RestrictionReport::fail(Clause clause, std::string culprit, std::string condition) {
  verdict = false;
  witnesses.push_back({std::move(clause), std::move(culprit), std::move(condition)});
}

namespace {

std::set<Symbol> signed_vars(const Clause& c, bool positive) {
  std::set<Symbol> out;
  for (const Literal& l : c) {
    if (l.positive() != positive) continue;
    for (const Term& t : l.args()) collect_vars(t, out);
  }
  return out;
}

// vall(C) ∩ vars ⊆ vneg(C) for every clause.
void check_negative_cover(const std::vector<Clause>& clauses, const std::set<Symbol>& vars_of_interest,
                          const char* condition, RestrictionReport& report) {
  for (const Clause& c : clauses) {
    std::set<Symbol> neg = vneg(c);
    for (Symbol v : vars(c)) {
      if (vars_of_interest.contains(v) && !neg.contains(v)) {
        report.fail(c, std::string(v.name()), condition);
      }
    }
  }
}

bool all_negative(const Clause& c) {
  for (const Literal& l : c) {
    if (l.positive()) return false;
  }
  return true;
}

void merge(RestrictionReport& into, const RestrictionReport& from, const std::string& prefix) {
  for (const RestrictionWitness& w : from.witnesses) {
    into.fail(w.clause, w.culprit, prefix + w.condition);
  }
}

bool horn_disjunct(const Formula& f, std::size_t& positives) {
  switch (f.kind()) {
    case FormulaKind::literal:
      if (f.lit().positive()) ++positives;
      return true;
    case FormulaKind::bottom:
      return true;
    case FormulaKind::disjunction:
      for (const Formula& op : f.operands()) {
        if (!horn_disjunct(op, positives)) return false;
      }
      return true;
    default:
      return false;
  }
}

bool horn_nnf(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::top:
    case FormulaKind::bottom:
    case FormulaKind::literal:
      return true;
    case FormulaKind::conjunction:
      for (const Formula& op : f.operands()) {
        if (!horn_nnf(op)) return false;
      }
      return true;
    case FormulaKind::forall:
    case FormulaKind::exists:
      return horn_nnf(f.body());
    case FormulaKind::disjunction: {
      std::size_t positives = 0;
      return horn_disjunct(f, positives) && positives <= 1;
    }
    default:
      return false;
  }
}

bool prenex_only(const Formula& f, FormulaKind quantifier) {
  const Formula* cur = &f;
  while (cur->is_quantifier()) {
    if (cur->kind() != quantifier) return false;
    cur = &cur->body();
  }
  std::function<bool(const Formula&)> quantifier_free = [&](const Formula& g) {
    if (g.is_quantifier()) return false;
    for (const Formula& op : g.operands()) {
      if (!quantifier_free(op)) return false;
    }
    return true;
  };
  return quantifier_free(*cur);
}

}  // namespace

std::set<Symbol> vpos(const Clause& c) { return signed_vars(c, true); }
std::set<Symbol> vneg(const Clause& c) { return signed_vars(c, false); }

RestrictionReport is_u_range_restricted(const Formula& f, std::size_t max_clauses) {
  PrenexNormalForm c = cnf(f, max_clauses);
  RestrictionReport report;
  check_negative_cover(c.matrix, c.universal_vars(), kCondUniversal, report);
  return report;
}

RestrictionReport is_vgt_range_restricted(const Formula& f, std::size_t max_clauses) {
  PrenexNormalForm c = cnf(f, max_clauses);
  PrenexNormalForm d = dnf(f, max_clauses);
  if (c.prefix != d.prefix) {
    throw Error("cnf and dnf disagree on the quantifier prefix");
  }
  RestrictionReport report;
  check_negative_cover(c.matrix, c.universal_vars(), kCondUniversal, report);
  std::set<Symbol> existential = d.existential_vars();
  std::set<Symbol> x = free_vars(f);
  for (const Clause& conj : d.matrix) {
    std::set<Symbol> pos = vpos(conj);
    for (Symbol v : vars(conj)) {
      if (existential.contains(v) && !pos.contains(v)) {
        report.fail(conj, std::string(v.name()), kCondExistential);
      }
    }
    for (Symbol v : x) {
      if (!pos.contains(v)) report.fail(conj, std::string(v.name()), kCondFree);
    }
  }
  return report;
}

bool is_horn_clause(const Clause& c) {
  std::size_t positives = 0;
  for (const Literal& l : c) positives += l.positive();
  return positives <= 1;
}

bool is_horn(const Formula& f) { return horn_nnf(nnf(f)); }

bool is_horn_like(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::literal:
    case FormulaKind::top:
    case FormulaKind::bottom:
      return true;
    case FormulaKind::conjunction:
      for (const Formula& op : f.operands()) {
        if (!is_horn_like(op)) return false;
      }
      return true;
    case FormulaKind::disjunction: {
      std::size_t others = 0;
      for (const Formula& op : f.operands()) {
        if (op.kind() == FormulaKind::bottom) continue;
        if (op.is_literal() && op.lit().negative()) continue;
        if (!is_horn_like(op) || ++others > 1) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

RestrictionReport check_vx_preconditions(const Formula& f, const Formula& g,
                                         const std::set<Symbol>& x,
                                         std::size_t max_clauses) {
  if (free_vars(f) != x || free_vars(g) != x) {
    throw ContractError("check_vx_preconditions expects var(F) = var(G) = X");
  }
  Formula not_g = Formula::negation(g);
  RestrictionReport report;
  merge(report, is_u_range_restricted(f, max_clauses), "f:");
  merge(report, is_u_range_restricted(not_g, max_clauses), "not-g:");

  for (const Clause& c : cnf(f, max_clauses).matrix) {
    if (all_negative(c)) report.fail(c, to_string(c), kCondNoNegativeClause);
  }
  std::vector<Clause> g_clauses = cnf(not_g, max_clauses).matrix;
  for (const Clause& c : g_clauses) {
    if (!all_negative(c)) continue;
    std::set<Symbol> neg = vneg(c);
    for (Symbol v : x) {
      if (!neg.contains(v)) {
        report.fail(c, std::string(v.name()), kCondNegativeClauseCoversX);
      }
    }
  }
  check_negative_cover(g_clauses, x, kCondXNegative, report);
  return report;
}

bool is_universal(const Formula& f) { return prenex_only(f, FormulaKind::forall); }
bool is_existential(const Formula& f) { return prenex_only(f, FormulaKind::exists); }

bool Prop4Report::consistent() const {
  for (const Prop4Item& item : items) {
    if (!item.agrees()) return false;
  }
  return true;
}

Prop4Report prop4_check(const Formula& f, std::size_t max_clauses) {
  if (!free_vars(f).empty()) throw ContractError("prop4_check expects a sentence");
  bool vgt = is_vgt_range_restricted(f, max_clauses).verdict;
  bool u_f = is_u_range_restricted(f, max_clauses).verdict;
  bool u_not_f = is_u_range_restricted(Formula::negation(f), max_clauses).verdict;

  Prop4Report report;
  report.items.push_back({"vgt iff u-rr(F) and u-rr(~F)", true, vgt, u_f && u_not_f});
  report.items.push_back({"universal: vgt iff u-rr(F)", is_universal(f), vgt, u_f});
  report.items.push_back({"existential: vgt iff u-rr(~F)", is_existential(f), vgt, u_not_f});
  return report;
}

}  // namespace craigtab
