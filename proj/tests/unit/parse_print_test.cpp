#include <gtest/gtest.h>

#include "craigtab/documents.hpp"
#include "craigtab/errors.hpp"
#include "craigtab/parse.hpp"
#include "craigtab/print.hpp"
#include "craigtab/vocabulary.hpp"
#include "goldens.hpp"
#include "random_gen.hpp"

using namespace craigtab;
using namespace craigtab::testing;

TEST(Parse, MixedJunctionsNeedParentheses) { EXPECT_THROW(parse_formula("p & q | r"), ParseError); }

TEST(Parse, BinaryConnectivesNeedParentheses) {
  EXPECT_THROW(parse_formula("p | r => s"), ParseError);
  Formula f = parse_formula("((p & q) | r) => s");
  ASSERT_EQ(f.kind(), FormulaKind::implication);
  EXPECT_EQ(f.operands()[0].kind(), FormulaKind::disjunction);
  EXPECT_EQ(f.operands()[0].operands()[0].kind(), FormulaKind::conjunction);
}

TEST(Parse, QuantifierListNestsLeftToRight) {
  Formula f = parse_formula("! [X, Y] : r(X, Y)");
  ASSERT_EQ(f.kind(), FormulaKind::forall);
  EXPECT_EQ(f.bound_var(), Symbol("X"));
  ASSERT_EQ(f.body().kind(), FormulaKind::forall);
  EXPECT_EQ(f.body().bound_var(), Symbol("Y"));
}

TEST(Parse, VariablesAreUpperCase) {
  Term t = parse_term("f(X, a)");
  EXPECT_TRUE(t.args()[0].is_variable());
  EXPECT_FALSE(t.args()[1].is_variable());
}

TEST(Parse, EqualityLiterals) {
  Literal eq = parse_literal("f(X) = a");
  EXPECT_EQ(eq.predicate(), Symbol("="));
  EXPECT_TRUE(eq.positive());
  Literal ne = parse_literal("X != a");
  EXPECT_EQ(ne.predicate(), Symbol("="));
  EXPECT_TRUE(ne.negative());
}

TEST(Parse, ErrorsCarryLocation) {
  try {
    parse_formula("p &\n  & q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_formula("p(a"), ParseError);
  EXPECT_THROW(parse_term("f(a) g"), ParseError);
}

TEST(Parse, TptpRolesAndClauses) {
  auto entries = parse_tptp(
      "% comment\n"
      "fof(a1, axiom, ! [X] : p(X)).\n"
      "cnf(c1, axiom, ~p(X) | q(X)).\n"
      "fof(goal, conjecture, q(a)).\n");
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[1].language, "cnf");
  SplitProblem s = split_roles(entries);
  ASSERT_EQ(s.premises.size(), 2u);
  EXPECT_TRUE(free_vars(s.premises[1]).empty());
  ASSERT_EQ(s.conclusions.size(), 1u);
  EXPECT_EQ(s.conclusions[0], parse_formula("q(a)"));
}

TEST(Parse, TptpRejectsIncludes) {
  EXPECT_THROW(parse_tptp("include('Axioms/SET001.ax')."), ParseError);
}

TEST(Parse, UniversalClosureBindsFreeVariables) {
  Formula f = universal_closure(parse_formula("p(X) | q(Y)"));
  EXPECT_TRUE(free_vars(f).empty());
  EXPECT_EQ(f.kind(), FormulaKind::forall);
}

TEST(Parse, FormulaToClause) {
  EXPECT_EQ(formula_to_clause(parse_formula("p | ~q(a)")), parse_clause("p | ~q(a)"));
  EXPECT_TRUE(formula_to_clause(Formula::bottom()).empty());
  EXPECT_THROW(formula_to_clause(parse_formula("p & q")), ContractError);
}

TEST(Print, Formulas) {
  EXPECT_EQ(to_string(parse_formula("! [X] : (p(X) | ~q(f(X)))")), "! [X] : (p(X) | ~q(f(X)))");
  EXPECT_EQ(to_string(parse_formula("X != a")), "X != a");
  EXPECT_EQ(to_string(Clause{}), "$false");
  EXPECT_EQ(to_string(parse_formula("~(p & q)")), "~(p & q)");
}

TEST(Print, RoundTripsRandomFormulas) {
  FormulaGenerator gen(FormulaShape{}, 17);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula();
    EXPECT_EQ(parse_formula(to_string(f)), f) << to_string(f);
  }
}

TEST(TableauDocument, RoundTrip) {
  Tableau t = read_tableau(kTwoSidedDocument);
  EXPECT_EQ(write_tableau(t), kTwoSidedDocument);
  EXPECT_EQ(read_tableau(write_tableau(t)), t);
}

TEST(TableauDocument, SidesAndTargets) {
  Tableau t = read_tableau("tableau\n% comment\n\np [F]\n  ~p [G] {->1}\n");
  ASSERT_EQ(t.root.children.size(), 1u);
  const TableauNode& p = t.root.children[0];
  EXPECT_EQ(p.side, Side::F);
  EXPECT_EQ(p.children[0].side, Side::G);
  EXPECT_EQ(p.children[0].target_depth, 1u);
  EXPECT_EQ(*p.children[0].literal, parse_literal("~p"));
}

TEST(TableauDocument, Recognition) {
  EXPECT_TRUE(looks_like_tableau("% header\n\ntableau\np\n"));
  EXPECT_FALSE(looks_like_tableau("1 input p.\n"));
}

TEST(TableauDocument, RejectsBadIndentation) {
  EXPECT_THROW(read_tableau("tableau\np\n    ~p\n"), ParseError);
  EXPECT_THROW(read_tableau("p\n"), ParseError);
}
