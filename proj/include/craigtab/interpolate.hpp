#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "craigtab/formula.hpp"
#include "craigtab/hyper.hpp"
#include "craigtab/normalize.hpp"
#include "craigtab/tableau.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab {

// State threaded through the interpolation pipeline.
struct InterpolationContext {
  Formula f;
  Formula g;
  Formula f_c;  // F with free variables frozen to placeholder constants
  Formula g_c;
  std::vector<Clause> f_clauses;  // F′
  std::vector<Clause> g_clauses;  // G′
  std::set<Symbol> placeholders;  // C: constants of variables free in F and G
  std::map<Symbol, Symbol> const_to_var;
  std::set<Symbol> skolem_f;
  std::set<Symbol> skolem_g;
  std::set<Symbol> grounding_f;  // S1
  std::set<Symbol> grounding_g;  // S2
  std::set<Symbol> funcs_f;      // 𝔽
  std::set<Symbol> funcs_g;      // 𝔾

  // Term classes by outermost function symbol: E for 𝔽, U for 𝔾, and
  // V = E ∪ U ∪ C. V is not consulted by the pipeline itself.
  bool is_f_term(const Term& t) const;
  bool is_g_term(const Term& t) const;
  bool is_v_term(const Term& t) const;
  TermClass f_terms() const;
  TermClass g_terms() const;
  TermClass v_terms() const;
  TermClass placeholder_terms() const;

  // Recomputes 𝔽 and 𝔾 from the other fields.
  void compute_function_sets();
};

// ipol values for every node, mirroring the tableau's shape.
struct IpolTree {
  Formula value;
  std::vector<IpolTree> children;
};

// Drops ⊥ from disjunctions and ⊤ from conjunctions, lets ⊤ absorb a
// disjunction and ⊥ a conjunction, and unwraps single operands. No
// flattening.
Formula truth_simplify(const Formula& f);

// truth_simplify, then flattening of nested ∧ and ∨, removal of repeated
// operands, and absorption: a disjunction inside a conjunction is dropped when
// it shares an operand with that conjunction, and dually. Then, until nothing
// changes, a literal operand of a conjunction becomes ⊤ inside its siblings
// and one of a disjunction ⊥. Every cnf and dnf clause of the result is
// contained in a clause of the input's cnf or dnf.
Formula tidy(const Formula& f);

// Ground interpolant of a two-sided, leaf-closed, closed ground tableau, with
// truth-value simplification at every node. Throws StructuralError for a
// tableau without sides or with variables.
IpolTree extract_ipol_tree(const Tableau& t);
Formula extract_ipol(const Tableau& t);

// Replaces 𝔽𝔾-maximal terms of the ground formula by fresh variables V1..Vn,
// ordered by term depth and then by first occurrence, quantified ∃ for
// 𝔽-terms and ∀ for 𝔾-terms.
Formula lift(const Formula& h_grd, const InterpolationContext& ctx);

// The 𝔽𝔾-terms that lifting replaces, in prefix order.
std::vector<Term> lifting_terms(const Formula& h_grd, const InterpolationContext& ctx);

// Conjunction of Horn clauses equivalent to a Horn-like formula. Throws
// ContractError when `f` is not Horn-like.
Formula hornify(const Formula& f);

enum class Requirement { u_rr, vgt_rr, horn };

std::string to_string(Requirement r);
std::optional<Requirement> parse_requirement(std::string_view text);

struct InterpolationOptions {
  std::set<Requirement> require;
  // Convert the proof to hyper form even without requirements.
  bool force_hyper = false;
  ProverLimits limits;
  GroundingPolicy grounding = GroundingPolicy::f_side;
  TiePolicy tie = TiePolicy::prefer_f;
  bool equality_axioms = false;
  // Apply tidy() to the ground interpolant before lifting.
  bool tidy = true;
  std::size_t max_clauses = kDefaultClauseLimit;
  std::size_t max_nodes = kDefaultMaxNodes;
};

enum class InterpolationStatus {
  ok,
  not_entailed,       // the prover showed F ∧ ¬G satisfiable
  not_proved,         // resource limits hit
  requirement_failed  // H was built but misses a requested property
};

std::string to_string(InterpolationStatus s);

struct StageTiming {
  std::string stage;
  double ms = 0;
};

struct InterpolationReport {
  std::vector<StageTiming> timings;
  ProofStatus proof_status = ProofStatus::resource_out;
  std::uint64_t inferences = 0;
  std::optional<std::size_t> size_before_hyper;
  std::optional<std::size_t> size_after_hyper;
  std::size_t hyper_rounds = 0;
  bool shortcut = false;  // empty clause found during clausification
  std::vector<std::string> failed_requirements;
  std::string message;
};

struct InterpolationResult {
  InterpolationStatus status = InterpolationStatus::not_proved;
  Formula h;
  Formula h_grd;
  InterpolationContext context;
  Tableau tableau;  // final two-sided ground tableau
  std::optional<IpolTree> ipol;
  std::optional<ConversionTrace> trace;
  InterpolationReport report;
};

// The full pipeline: freeze free variables, clausify F and ¬G, prove, ground,
// convert to hyper form when requirements ask for it, assign sides, extract,
// tidy, hornify, lift, and unfreeze.
InterpolationResult interpolate(const Formula& f, const Formula& g,
                                const InterpolationOptions& options = {});

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct VerificationItem {
  std::string condition;
  Verdict verdict = Verdict::fail;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationItem> items;
  bool passed() const;
};

// Checks vocabulary and polarity inclusion, free variables, F ⊨ H and H ⊨ G,
// and the requested structural properties. Entailment checks use the given
// limits with four times the inference and time budget.
VerificationReport verify_interpolant(const Formula& f, const Formula& g,
                                      const Formula& h,
                                      const std::set<Requirement>& required = {},
                                      const ProverLimits& limits = {});

// Proves `premise ⊨ conclusion` by refuting premise ∧ ¬conclusion with free
// variables read as constants. Conjunctive conclusions and disjunctive
// premises are split, after miniscoping, into one refutation per part; the
// timeout bounds all parts together.
ProofStatus entails(const Formula& premise, const Formula& conclusion,
                    const ProverLimits& limits = {},
                    std::size_t max_clauses = kDefaultClauseLimit);

// Interpolant of K ∧ Q and ¬K′ ∨ Q′, where the primed copies rename every
// predicate outside `targets`. Throws ContractError for empty targets.
InterpolationResult synthesize_definition(const Formula& k, const Formula& q,
                                          const std::set<Symbol>& targets,
                                          const InterpolationOptions& options = {});

}  // namespace craigtab
