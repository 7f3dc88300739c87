#include <gtest/gtest.h>

#include <algorithm>

#include "craigtab/errors.hpp"
#include "craigtab/normalize.hpp"
#include "craigtab/parse.hpp"
#include "craigtab/print.hpp"
#include "craigtab/unify.hpp"
#include "craigtab/vocabulary.hpp"
#include "models.hpp"
#include "random_gen.hpp"
#include "suites.hpp"

using namespace craigtab;
using namespace craigtab::testing;

namespace {

bool same_clause_set(std::vector<Clause> a, std::vector<Clause> b) {
  if (a.size() != b.size()) return false;
  for (const Clause& c : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Clause& d) { return same_literal_set(c, d); });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::vector<Clause> clauses(std::initializer_list<const char*> texts) {
  std::vector<Clause> out;
  for (const char* t : texts) out.push_back(parse_clause(t));
  return out;
}

bool equivalent_on_models(const Formula& a, const Formula& b, std::mt19937& rng) {
  Signature sig = signature_of({a, b});
  for (std::size_t domain = 1; domain <= 3; ++domain) {
    for (int k = 0; k < 4; ++k) {
      if (!valid_in(random_model(sig, domain, rng), Formula::equivalence(a, b))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Nnf, DeMorgan) { EXPECT_EQ(nnf(parse_formula("~(p & q)")), parse_formula("~p | ~q")); }

TEST(Nnf, NegatedQuantifier) {
  EXPECT_EQ(nnf(parse_formula("~ ! [X] : p(X)")), parse_formula("? [X] : ~p(X)"));
}

TEST(Nnf, NegatedImplication) { EXPECT_EQ(nnf(parse_formula("~(p => q)")), parse_formula("p & ~q")); }

TEST(Nnf, NegatedImplicationByTruthTable) {
  Formula f = parse_formula("~(p => q)");
  Formula g = nnf(f);
  for (int v = 0; v < 4; ++v) {
    Model m;
    m.predicates[Symbol("p")] = {bool(v & 1)};
    m.predicates[Symbol("q")] = {bool(v & 2)};
    Env env;
    EXPECT_EQ(m.eval(f, env), m.eval(g, env)) << v;
  }
}

TEST(Nnf, TruthConstantsSwapUnderNegation) {
  EXPECT_EQ(nnf(parse_formula("~$true")), Formula::bottom());
  EXPECT_EQ(nnf(parse_formula("~$false")), Formula::top());
}

TEST(Dual, SwapsEverything) {
  EXPECT_EQ(dual(parse_formula("! [X] : (p(X) | ~q)")), parse_formula("? [X] : (~p(X) & q)"));
  EXPECT_EQ(dual(Formula::top()), Formula::bottom());
}

TEST(Dual, RejectsNonPrenex) {
  EXPECT_THROW(dual(parse_formula("p & ! [X] : q(X)")), ContractError);
  EXPECT_THROW(dual(parse_formula("p => q")), ContractError);
}

TEST(Dual, IsAnInvolutionOnRandomPrenexFormulas) {
  FormulaGenerator gen(FormulaShape{}, 5);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.prenex_sentence(gen.chance(0.5), 3);
    EXPECT_EQ(dual(dual(f)), f) << to_string(f);
  }
}

TEST(Dual, MatchesNnfOfNegation) {
  FormulaGenerator gen(FormulaShape{}, 6);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.prenex_sentence(gen.chance(0.5), 3);
    EXPECT_EQ(dual(f), nnf(Formula::negation(f))) << to_string(f);
  }
}

TEST(Cnf, OneDistribution) {
  PrenexNormalForm c = cnf(parse_formula("p | (q & r)"));
  EXPECT_TRUE(c.prefix.empty());
  EXPECT_EQ(c.kind, MatrixKind::cnf);
  EXPECT_TRUE(same_clause_set(c.matrix, clauses({"p | q", "p | r"})));
}

TEST(Cnf, ExistentialKept) {
  PrenexNormalForm c = cnf(parse_formula("? [X] : p(X)"));
  ASSERT_EQ(c.prefix.size(), 1u);
  EXPECT_EQ(c.prefix[0].quantifier, Quantifier::exists);
  ASSERT_EQ(c.matrix.size(), 1u);
  EXPECT_TRUE(is_variant(c.matrix[0], parse_clause("p(X)")));
}

TEST(Dnf, TupleGeneratingDependency) {
  PrenexNormalForm d = dnf(parse_formula("! [X, Y] : (~a(X, Y) | ? [Z] : b(Y, Z))"));
  EXPECT_EQ(d.kind, MatrixKind::dnf);
  ASSERT_EQ(d.prefix.size(), 3u);
  EXPECT_EQ(d.prefix[0].quantifier, Quantifier::forall);
  EXPECT_EQ(d.prefix[1].quantifier, Quantifier::forall);
  EXPECT_EQ(d.prefix[2].quantifier, Quantifier::exists);
  Symbol x = d.prefix[0].var, y = d.prefix[1].var, z = d.prefix[2].var;
  Clause a{Literal(false, Symbol("a"), {Term::variable(x), Term::variable(y)})};
  Clause b{Literal(true, Symbol("b"), {Term::variable(y), Term::variable(z)})};
  EXPECT_TRUE(same_clause_set(d.matrix, {a, b}));
  EXPECT_EQ(d.universal_vars(), (std::set<Symbol>{x, y}));
  EXPECT_EQ(d.existential_vars(), std::set<Symbol>{z});
}

TEST(Cnf, PrenexingRunsLeftToRight) {
  PrenexNormalForm c = cnf(parse_formula("(? [X] : p(X)) & (! [Y] : q(Y))"));
  ASSERT_EQ(c.prefix.size(), 2u);
  EXPECT_EQ(c.prefix[0].quantifier, Quantifier::exists);
  EXPECT_EQ(c.prefix[1].quantifier, Quantifier::forall);
}

TEST(Cnf, ClauseLimit) {
  std::string text = "(a1 & b1)";
  for (int i = 2; i <= 12; ++i) text += " | (a" + std::to_string(i) + " & b" + std::to_string(i) + ")";
  EXPECT_THROW(cnf(parse_formula(text), 1000), ResourceError);
  EXPECT_EQ(cnf(parse_formula(text), 5000).matrix.size(), 4096u);
}

TEST(StandardizeApart, RenamesClashingBinders) {
  Formula f = standardize_apart(nnf(parse_formula("(! [X] : p(X)) & (? [X] : q(X)) & r(X)")));
  std::set<Symbol> bound;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is_quantifier()) {
      EXPECT_TRUE(bound.insert(g.bound_var()).second);
      walk(g.body());
    }
    for (const Formula& o : g.operands()) walk(o);
  };
  walk(f);
  EXPECT_EQ(bound.size(), 2u);
  EXPECT_FALSE(bound.contains(Symbol("X")));
  EXPECT_EQ(free_vars(f), std::set<Symbol>{Symbol("X")});
}

TEST(Miniscope, DistributesAndDropsVacuousQuantifiers) {
  EXPECT_EQ(miniscope(parse_formula("! [X] : (p(X) & q)")), parse_formula("(! [X] : p(X)) & q"));
  EXPECT_EQ(miniscope(parse_formula("? [X] : (p(X) | q(X))")),
            parse_formula("(? [X] : p(X)) | (? [X] : q(X))"));
  EXPECT_EQ(miniscope(parse_formula("! [X] : p(a)")), parse_formula("p(a)"));
}

TEST(Miniscope, EquivalentOnRandomModels) {
  FormulaGenerator gen(FormulaShape{}, 9);
  for (int i = 0; i < 200; ++i) {
    Formula f = nnf(gen.formula());
    EXPECT_TRUE(equivalent_on_models(f, miniscope(f), gen.rng())) << to_string(f);
  }
}

TEST(NormalForms, AgreeOnRandomModels) {
  SuiteResult r = run_normal_form_model_suite(3, 150);
  EXPECT_TRUE(r.ok()) << r.summary() << (r.messages.empty() ? "" : "\n" + r.messages.front());
}

TEST(NormalForms, PropertySuites) {
  for (const SuiteResult& r : {run_prop1_suite(1, 100), run_prop2_suite(2, 100), run_prop3_suite(3, 100),
                               run_prop4_suite(4, 100), run_prop5_suite(5, 100)}) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.summary() << (r.messages.empty() ? "" : "\n" + r.messages.front());
  }
}

TEST(Freeze, SharedVariable) {
  FrozenPair p = freeze_free_vars(parse_formula("p(X)"), parse_formula("q(X)"));
  ASSERT_EQ(p.shared.size(), 1u);
  Symbol c = *p.shared.begin();
  EXPECT_EQ(p.var_to_const.at(Symbol("X")), c);
  EXPECT_EQ(p.const_to_var.at(c), Symbol("X"));
  EXPECT_EQ(p.f, Formula::literal(Literal(true, Symbol("p"), {Term::function(c)})));
  EXPECT_EQ(p.g, Formula::literal(Literal(true, Symbol("q"), {Term::function(c)})));
}

TEST(Freeze, SentencesUnchanged) {
  Formula f = parse_formula("! [X] : p(X)");
  Formula g = parse_formula("p(a)");
  FrozenPair p = freeze_free_vars(f, g);
  EXPECT_EQ(p.f, f);
  EXPECT_EQ(p.g, g);
  EXPECT_TRUE(p.shared.empty());
}

TEST(Freeze, OnlySharedVariablesArePlaceholders) {
  FrozenPair p = freeze_free_vars(parse_formula("p(X, Y)"), parse_formula("q(Y)"));
  EXPECT_EQ(p.shared, std::set<Symbol>{p.var_to_const.at(Symbol("Y"))});
  EXPECT_TRUE(p.var_to_const.contains(Symbol("X")));
  EXPECT_FALSE(p.shared.contains(p.var_to_const.at(Symbol("X"))));
  EXPECT_TRUE(free_vars(p.f).empty());
}

TEST(Freeze, FreshConstantsAvoidTheVocabulary) {
  FrozenPair p = freeze_free_vars(parse_formula("p(X, c_X)"), parse_formula("q(X)"));
  EXPECT_NE(p.var_to_const.at(Symbol("X")), Symbol("c_X"));
}

TEST(Unfreeze, ReplacesPlaceholders) {
  std::map<Symbol, Symbol> back{{Symbol("c_x"), Symbol("X")}};
  EXPECT_EQ(unfreeze(parse_formula("q(c_x)"), back), parse_formula("q(X)"));
  EXPECT_EQ(unfreeze(parse_formula("p(f(c_x), a)"), back), parse_formula("p(f(X), a)"));
  EXPECT_EQ(unfreeze(parse_formula("p(a)"), {}), parse_formula("p(a)"));
}

TEST(Skolemize, UniversalSentence) {
  FreshSymbols fresh;
  ClausificationResult r = skolemize_clausify(parse_formula("(! [X] : p(X)) & (! [X] : (~p(X) | q(X)))"),
                                              ClausifyPolarity::as_stated, fresh);
  EXPECT_TRUE(r.skolem_functions.empty());
  ASSERT_EQ(r.clauses.size(), 2u);
  EXPECT_TRUE(is_variant(r.clauses[0], parse_clause("p(X)")));
  EXPECT_TRUE(is_variant(r.clauses[1], parse_clause("~p(X) | q(X)")));
}

TEST(Skolemize, NegatedConclusion) {
  FreshSymbols fresh;
  ClausificationResult r = skolemize_clausify(parse_formula("(! [X] : (~q(X) | r(X))) => r(a)"),
                                              ClausifyPolarity::negated, fresh);
  EXPECT_TRUE(r.skolem_functions.empty());
  ASSERT_EQ(r.clauses.size(), 2u);
  EXPECT_TRUE(is_variant(r.clauses[0], parse_clause("~q(X) | r(X)")));
  EXPECT_TRUE(is_variant(r.clauses[1], parse_clause("~r(a)")));
}

TEST(Skolemize, ExistentialBecomesConstant) {
  FreshSymbols fresh;
  ClausificationResult r = skolemize_clausify(parse_formula("? [X] : p(X)"), ClausifyPolarity::as_stated, fresh);
  ASSERT_EQ(r.skolem_functions.size(), 1u);
  Symbol sk = *r.skolem_functions.begin();
  ASSERT_EQ(r.clauses.size(), 1u);
  EXPECT_EQ(r.clauses[0], (Clause{Literal(true, Symbol("p"), {Term::function(sk)})}));
}

TEST(Skolemize, FunctionOverPrecedingUniversals) {
  FreshSymbols fresh;
  ClausificationResult r =
      skolemize_clausify(parse_formula("! [X] : ? [Y] : r(X, Y)"), ClausifyPolarity::as_stated, fresh);
  ASSERT_EQ(r.clauses.size(), 1u);
  const Literal& l = r.clauses[0][0];
  EXPECT_TRUE(l.args()[0].is_variable());
  ASSERT_FALSE(l.args()[1].is_variable());
  EXPECT_TRUE(r.skolem_functions.contains(l.args()[1].symbol()));
  EXPECT_EQ(l.args()[1].args()[0], l.args()[0]);
}

TEST(Skolemize, SkolemNamesAvoidReservedSymbols) {
  FreshSymbols fresh;
  fresh.reserve("sk0");
  ClausificationResult r = skolemize_clausify(parse_formula("? [X] : p(X, sk0)"), ClausifyPolarity::as_stated, fresh);
  ASSERT_EQ(r.skolem_functions.size(), 1u);
  EXPECT_NE(*r.skolem_functions.begin(), Symbol("sk0"));
}

TEST(Skolemize, ModelsOfClausesSatisfyTheSentence) {
  SuiteResult r = run_skolem_model_suite(8, 150);
  EXPECT_TRUE(r.ok()) << r.summary() << (r.messages.empty() ? "" : "\n" + r.messages.front());
  EXPECT_GT(r.applicable, 0u);
}

TEST(EqualityAxioms, EmptySignature) {
  std::vector<Clause> axioms = equality_axioms(Signature{});
  ASSERT_EQ(axioms.size(), 3u);
  for (const Clause& c : axioms) {
    for (const Literal& l : c) EXPECT_EQ(l.predicate(), equality_symbol());
  }
}

TEST(EqualityAxioms, PredicateSubstitutivity) {
  Signature sig;
  sig.add(parse_formula("p(a)"));
  std::vector<Clause> axioms = equality_axioms(sig);
  Clause expected = parse_clause("X != Y | ~p(X) | p(Y)");
  EXPECT_TRUE(std::any_of(axioms.begin(), axioms.end(), [&](const Clause& c) { return is_variant(c, expected); }));
}

TEST(EqualityAxioms, FunctionSubstitutivity) {
  Signature sig;
  sig.add(parse_term("f(a)"));
  std::vector<Clause> axioms = equality_axioms(sig);
  Clause expected = parse_clause("X != Y | f(X) = f(Y)");
  EXPECT_TRUE(std::any_of(axioms.begin(), axioms.end(), [&](const Clause& c) { return is_variant(c, expected); }));
}

TEST(FreshSymbols, CountersAndBases) {
  FreshSymbols fresh({"sk0", "x"});
  EXPECT_EQ(fresh.next("sk"), Symbol("sk1"));
  EXPECT_EQ(fresh.next("sk"), Symbol("sk2"));
  EXPECT_EQ(fresh.fresh_like("y"), Symbol("y"));
  EXPECT_NE(fresh.fresh_like("x"), Symbol("x"));
}
