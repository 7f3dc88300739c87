#include "craigtab/print.hpp"

namespace craigtab {

namespace {

void print_term(const Term& t, std::string& out) {
  out += t.symbol().name();
  if (t.is_variable() || t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    print_term(t.args()[i], out);
  }
  out += ')';
}

void print_literal(const Literal& l, std::string& out) {
  if (l.predicate() == equality_symbol() && l.args().size() == 2) {
    print_term(l.args()[0], out);
    out += l.positive() ? " = " : " != ";
    print_term(l.args()[1], out);
    return;
  }
  if (l.negative()) out += '~';
  out += l.predicate().name();
  if (l.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < l.args().size(); ++i) {
    if (i) out += ',';
    print_term(l.args()[i], out);
  }
  out += ')';
}

bool is_binary(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
      return f.operands().size() > 1;
    case FormulaKind::implication:
    case FormulaKind::equivalence:
      return true;
    default:
      return false;
  }
}

void print_formula(const Formula& f, std::string& out);

void print_operand(const Formula& f, std::string& out) {
  if (is_binary(f)) {
    out += '(';
    print_formula(f, out);
    out += ')';
  } else {
    print_formula(f, out);
  }
}

void print_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::literal:
      print_literal(f.lit(), out);
      return;
    case FormulaKind::top:
      out += "$true";
      return;
    case FormulaKind::bottom:
      out += "$false";
      return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      auto ops = f.operands();
      if (ops.empty()) {
        out += f.kind() == FormulaKind::conjunction ? "$true" : "$false";
        return;
      }
      const char* sep = f.kind() == FormulaKind::conjunction ? " & " : " | ";
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += sep;
        if (ops.size() == 1) {
          print_formula(ops[i], out);
        } else {
          print_operand(ops[i], out);
        }
      }
      return;
    }
    case FormulaKind::negation:
      out += '~';
      if (f.operands()[0].is_literal() || is_binary(f.operands()[0])) {
        out += '(';
        print_formula(f.operands()[0], out);
        out += ')';
      } else {
        print_formula(f.operands()[0], out);
      }
      return;
    case FormulaKind::implication:
    case FormulaKind::equivalence:
      print_operand(f.operands()[0], out);
      out += f.kind() == FormulaKind::implication ? " => " : " <=> ";
      print_operand(f.operands()[1], out);
      return;
    case FormulaKind::forall:
    case FormulaKind::exists:
      out += f.kind() == FormulaKind::forall ? "! [" : "? [";
      out += f.bound_var().name();
      out += "] : ";
      print_operand(f.body(), out);
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Literal& l) {
  std::string out;
  print_literal(l, out);
  return out;
}

std::string to_string(const Clause& c) {
  if (c.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    print_literal(c[i], out);
  }
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

std::string to_string(const PrenexNormalForm& f) { return to_string(f.to_formula()); }

}  // namespace craigtab
