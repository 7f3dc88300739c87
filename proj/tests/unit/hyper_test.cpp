#include <gtest/gtest.h>

#include <algorithm>

#include "craigtab/documents.hpp"
#include "craigtab/errors.hpp"
#include "craigtab/hyper.hpp"
#include "craigtab/parse.hpp"
#include "craigtab/tableau.hpp"
#include "goldens.hpp"
#include "models.hpp"
#include "random_gen.hpp"

using namespace craigtab;
using namespace craigtab::testing;

namespace {

void strip(TableauNode& n) {
  n.side.reset();
  n.target_depth.reset();
  for (TableauNode& c : n.children) strip(c);
}

std::string shape(Tableau t) {
  strip(t.root);
  return write_tableau(t);
}

bool clauses_within(const Tableau& t, const std::vector<Clause>& input) {
  for (const Clause& c : tableau_clauses(t)) {
    bool found = std::any_of(input.begin(), input.end(), [&](const Clause& d) { return same_literal_set(c, d); });
    if (!found) return false;
  }
  return true;
}

void expect_hyper_result(const Tableau& input, const HyperResult& r) {
  EXPECT_TRUE(is_closed(r.tableau));
  EXPECT_TRUE(is_leaf_closed(r.tableau));
  EXPECT_TRUE(is_regular(r.tableau));
  EXPECT_TRUE(is_hyper(r.tableau));
  EXPECT_TRUE(clauses_within(r.tableau, tableau_clauses(input)));
  EXPECT_TRUE(r.trace.strictly_decreasing());
  EXPECT_EQ(r.rounds, r.trace.total_rounds());
  EXPECT_FALSE(select_round_node(r.tableau));
}

}  // namespace

TEST(Measure, ConversionInputRoot) {
  Measure m = measure(read_tableau(kConversionInput), {});
  EXPECT_EQ(m.to_string(), "0 ω 2");
  EXPECT_EQ(m.badlits, 2u);
}

TEST(Measure, AfterFirstRoundRoot) {
  EXPECT_EQ(measure(read_tableau(kConversionAfterFirstRound), {}).to_string(), "0 ω 1");
}

TEST(Measure, LeafHasNoBadLiterals) {
  Measure m = measure(read_tableau(kConversionInput), {0, 1});
  EXPECT_EQ(m.badlits, 0u);
  EXPECT_EQ(m.to_string(), "0 0 0 ω 0");
}

TEST(Measure, RightSiblingsAreCounted) {
  EXPECT_EQ(measure(read_tableau(kConversionInput), {0, 0}).to_string(), "0 0 1 ω 0");
}

TEST(Measure, OmegaExceedsEveryNumber) {
  Measure shorter{{0}, 0};
  Measure longer{{0, 99}, 99};
  EXPECT_GT(shorter, longer);
  EXPECT_LT((Measure{{0}, 1}), (Measure{{0}, 2}));
  EXPECT_LT((Measure{{0, 0}, 5}), (Measure{{0, 1}, 0}));
}

TEST(SelectRoundNode, FirstNegativeInnerChild) {
  EXPECT_EQ(select_round_node(read_tableau(kConversionInput)), NodePath{});
  EXPECT_EQ(select_round_node(read_tableau(kConversionAfterFirstRound)), NodePath{});
  EXPECT_FALSE(select_round_node(read_tableau(kConversionResult)));
}

TEST(HyperConvert, TwoRoundGolden) {
  Tableau input = read_tableau(kConversionInput);
  HyperResult r = hyper_convert(input);
  EXPECT_EQ(r.rounds, 2u);
  ASSERT_EQ(r.trace.rounds.size(), 2u);
  EXPECT_EQ(r.trace.rounds[0].measure.to_string(), kConversionMeasures[0]);
  EXPECT_EQ(r.trace.rounds[1].measure.to_string(), kConversionMeasures[1]);
  EXPECT_EQ(shape(r.tableau), shape(read_tableau(kConversionResult)));
  expect_hyper_result(input, r);
}

TEST(HyperConvert, FirstRoundGivesMiddleTableau) {
  HyperResult r = hyper_convert(read_tableau(kConversionAfterFirstRound));
  EXPECT_EQ(r.rounds, 1u);
  EXPECT_EQ(shape(r.tableau), shape(read_tableau(kConversionResult)));
}

TEST(HyperConvert, AlreadyHyperIsUnchanged) {
  Tableau t = read_tableau(kConversionResult);
  HyperResult r = hyper_convert(t);
  EXPECT_EQ(r.rounds, 0u);
  EXPECT_EQ(shape(r.tableau), shape(t));
  EXPECT_EQ(r.size_before, r.size_after);
}

TEST(HyperConvert, OpenTableauIsRejected) {
  EXPECT_THROW(hyper_convert(read_tableau("tableau\n~p\n  q\n")), ContractError);
}

TEST(HyperConvert, NodeLimit) {
  HyperOptions options;
  options.max_nodes = 3;
  EXPECT_THROW(hyper_convert(read_tableau(kConversionInput), options), ResourceError);
}

TEST(HyperConvert, FirstOrderProof) {
  std::vector<Clause> input;
  for (const char* c : {"~q(X) | ~r(X)", "~p(a) | q(a)", "~p(X) | r(X)", "p(a)"}) input.push_back(parse_clause(c));
  ProofResult proof = prove(input);
  ASSERT_EQ(proof.status, ProofStatus::proved);
  HyperResult r = hyper_convert(proof.tableau);
  expect_hyper_result(proof.tableau, r);
  EXPECT_GT(r.rounds, 0u);
}

TEST(HyperConvert, RandomGroundRefutations) {
  std::mt19937 rng(23);
  int converted = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Clause> input = random_ground_clauses(rng, 3 + i % 3);
    if (ground_satisfiable(input)) continue;
    ProofResult proof = prove(input);
    ASSERT_EQ(proof.status, ProofStatus::proved);
    HyperResult r = hyper_convert(proof.tableau);
    expect_hyper_result(proof.tableau, r);
    for (std::size_t k = 1; k < r.trace.rounds.size(); ++k) {
      EXPECT_LT(r.trace.rounds[k].measure, r.trace.rounds[k - 1].measure);
    }
    ++converted;
  }
  EXPECT_GT(converted, 50);
}
