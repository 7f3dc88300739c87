#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "craigtab/documents.hpp"
#include "craigtab/errors.hpp"
#include "craigtab/hyper.hpp"
#include "craigtab/interpolate.hpp"
#include "craigtab/normalize.hpp"
#include "craigtab/parse.hpp"
#include "craigtab/print.hpp"
#include "craigtab/proof_import.hpp"
#include "craigtab/restriction.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Limits {
  std::size_t max_depth = 64;
  std::uint64_t max_inferences = 50'000'000;
  std::int64_t timeout_ms = 0;  // 0: none
  std::size_t max_nodes = kDefaultMaxNodes;
  std::size_t max_clauses = kDefaultClauseLimit;

  ProverLimits prover() const {
    ProverLimits l;
    l.max_depth = max_depth;
    l.max_inferences = max_inferences;
    if (timeout_ms > 0) l.timeout = std::chrono::milliseconds(timeout_ms);
    return l;
  }
};

template <typename T>
void env_default(const char* name, T& value) {
  const char* text = std::getenv(name);
  if (!text || !*text) return;
  try {
    value = static_cast<T>(std::stoll(text));
  } catch (const std::exception&) {
  }
}

Limits default_limits() {
  Limits l;
  env_default("CRAIGTAB_MAX_DEPTH", l.max_depth);
  env_default("CRAIGTAB_MAX_INFERENCES", l.max_inferences);
  env_default("CRAIGTAB_TIMEOUT_MS", l.timeout_ms);
  env_default("CRAIGTAB_MAX_NODES", l.max_nodes);
  env_default("CRAIGTAB_MAX_CLAUSES", l.max_clauses);
  return l;
}

void add_limit_options(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--max-depth", limits.max_depth, "Iterative deepening bound");
  cmd->add_option("--max-inferences", limits.max_inferences, "Prover inference budget");
  cmd->add_option("--timeout", limits.timeout_ms, "Prover timeout in milliseconds");
  cmd->add_option("--max-clauses", limits.max_clauses, "Clause limit of cnf/dnf");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path, 0, 0);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path to a file, or the text itself when no such file exists.
std::string file_or_text(const std::string& value) {
  std::error_code ec;
  if (fs::is_regular_file(value, ec)) return read_file(value);
  return value;
}

bool is_tptp(std::string_view text) {
  return text.find("fof(") != std::string_view::npos ||
         text.find("cnf(") != std::string_view::npos;
}

// Conjunction of every entry, or a bare formula.
Formula load_formula(const std::string& value) {
  std::string text = file_or_text(value);
  if (!is_tptp(text)) return parse_formula(text);
  std::vector<Formula> parts;
  for (const AnnotatedFormula& e : parse_tptp(text)) {
    parts.push_back(e.language == "cnf" ? universal_closure(e.formula) : e.formula);
  }
  return conjoin(std::move(parts));
}

struct Problem {
  Formula premises;
  Formula conclusion;
  bool has_conclusion = false;
};

Problem load_problem(const std::string& value) {
  SplitProblem split = split_roles(parse_tptp(file_or_text(value)));
  Problem p;
  p.premises = conjoin(split.premises);
  std::vector<Formula> goals = split.conclusions;
  for (const Formula& n : split.negated_conclusions) goals.push_back(Formula::negation(n));
  p.has_conclusion = !goals.empty();
  p.conclusion = conjoin(std::move(goals));
  return p;
}

std::set<Symbol> parse_symbol_list(const std::string& text) {
  std::set<Symbol> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.insert(Symbol(item));
  }
  return out;
}

// Universally closes every free variable not listed.
Formula keep_free(const Formula& f, const std::optional<std::set<Symbol>>& keep) {
  if (!keep) return f;
  std::set<Symbol> fv = free_vars(f);
  Formula out = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) {
    if (!keep->contains(*it)) out = Formula::forall(*it, out);
  }
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::string fmt_ratio(double r) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << r;
  return s.str();
}

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::vector<Clause> clausify_problem(const Problem& p, const Limits& limits, bool equality) {
  FreshSymbols fresh;
  fresh.reserve(vocabulary(p.premises));
  fresh.reserve(vocabulary(p.conclusion));
  Formula f = universal_closure(p.premises);
  std::vector<Clause> clauses =
      skolemize_clausify(f, ClausifyPolarity::as_stated, fresh, limits.max_clauses).clauses;
  if (p.has_conclusion) {
    Formula g = universal_closure(p.conclusion);
    for (Clause& c :
         skolemize_clausify(g, ClausifyPolarity::negated, fresh, limits.max_clauses).clauses) {
      clauses.push_back(std::move(c));
    }
  }
  if (equality) {
    Signature sig;
    for (const Clause& c : clauses) sig.add(c);
    if (sig.predicates.contains(equality_symbol())) {
      for (Clause& c : equality_axioms(sig)) clauses.push_back(std::move(c));
    }
  }
  return clauses;
}

std::vector<Clause> load_clause_lines(const std::string& text) {
  std::vector<Clause> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view t = line;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t.empty() || t.front() == '%' || t.front() == '#') continue;
    if (t.back() == '.') t.remove_suffix(1);
    try {
      out.push_back(parse_clause(t));
    } catch (const ParseError& e) {
      throw ParseError("clause: " + std::string(e.what()), number, e.column());
    }
  }
  return out;
}

// Tableau document, or a proof document imported into cut normal form.
struct LoadedTableau {
  Tableau tableau;
  bool from_proof = false;
  std::size_t proof_steps = 0;
};

LoadedTableau load_tableau_or_proof(const std::string& path, std::size_t max_nodes) {
  std::string text = read_file(path);
  LoadedTableau out;
  if (looks_like_tableau(text)) {
    out.tableau = read_tableau(text);
    return out;
  }
  ProofDocument doc = read_proof(text);
  DeductionNode tree = ground_deduction(expand_proof(doc, max_nodes));
  out.tableau = to_cut_normal_form(tree, doc.input_clauses());
  out.from_proof = true;
  out.proof_steps = doc.steps.size();
  return out;
}

// ---------------------------------------------------------------- prove

int cmd_prove(const std::string& input, const std::string& format, const Limits& limits,
              bool equality, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  std::string text = read_file(input);
  std::vector<Clause> clauses;
  if (format == "clauses") {
    clauses = load_clause_lines(text);
  } else {
    clauses = clausify_problem(load_problem(input), limits, equality);
  }
  ProofResult r = prove(clauses, limits.prover());
  err << "% status: " << to_string(r.status) << "\n";
  err << "% inferences: " << r.inferences << "\n";
  if (r.status != ProofStatus::proved) {
    if (!r.reason.empty()) err << "% reason: " << r.reason << "\n";
    return kNotProved;
  }
  err << "% tree size: " << tree_size(r.tableau) << "\n";
  write_output(out_path, write_tableau(r.tableau), out);
  return kOk;
}

// ---------------------------------------------------------------- interpolate

struct InterpolateArgs {
  std::string f, g, problem, out_path, free_vars, side_tie = "f", ground_side = "f";
  std::vector<std::string> require;
  bool verify = false, json = false, timings = false, force_hyper = false, equality = false;
  bool show_tableau = false;
};

json report_json(const InterpolationResult& r, bool timings) {
  json j;
  j["status"] = to_string(r.status);
  j["interpolant"] = to_string(r.h);
  j["ground_interpolant"] = to_string(r.h_grd);
  j["proof"] = to_string(r.report.proof_status);
  j["inferences"] = r.report.inferences;
  j["shortcut"] = r.report.shortcut;
  if (r.report.size_before_hyper) j["size_before"] = *r.report.size_before_hyper;
  if (r.report.size_after_hyper) j["size_after"] = *r.report.size_after_hyper;
  if (r.report.size_before_hyper && r.report.size_after_hyper && *r.report.size_before_hyper) {
    j["size_ratio"] = static_cast<double>(*r.report.size_after_hyper) /
                      static_cast<double>(*r.report.size_before_hyper);
  }
  j["rounds"] = r.report.hyper_rounds;
  j["failed_requirements"] = r.report.failed_requirements;
  if (timings) {
    json t = json::object();
    for (const StageTiming& s : r.report.timings) t[s.stage] = s.ms;
    j["timings_ms"] = t;
  }
  if (!r.report.message.empty()) j["message"] = r.report.message;
  return j;
}

void report_text(const InterpolationResult& r, bool timings, std::ostream& out) {
  out << "% status: " << to_string(r.status) << "\n";
  out << "% proof: " << to_string(r.report.proof_status) << ", inferences "
      << r.report.inferences << "\n";
  if (r.report.shortcut) out << "% shortcut: empty clause in clausal form\n";
  if (r.status == InterpolationStatus::ok || r.status == InterpolationStatus::requirement_failed) {
    out << "% ground interpolant: " << to_string(r.h_grd) << "\n";
  }
  if (r.report.size_before_hyper) {
    out << "% size before hyper: " << *r.report.size_before_hyper << "\n";
    out << "% size after hyper: " << *r.report.size_after_hyper << "\n";
    if (*r.report.size_before_hyper) {
      out << "% size ratio: "
          << fmt_ratio(static_cast<double>(*r.report.size_after_hyper) /
                       static_cast<double>(*r.report.size_before_hyper))
          << "\n";
    }
    out << "% rounds: " << r.report.hyper_rounds << "\n";
  }
  for (const std::string& f : r.report.failed_requirements) {
    out << "% failed requirement: " << f << "\n";
  }
  if (!r.report.message.empty()) out << "% message: " << r.report.message << "\n";
  if (timings) {
    for (const StageTiming& s : r.report.timings) {
      out << "% time " << s.stage << ": " << s.ms << " ms\n";
    }
  }
}

int finish_interpolation(const InterpolationResult& r, const Formula& f, const Formula& g,
                         const InterpolateArgs& a, const InterpolationOptions& opts,
                         std::ostream& out) {
  bool produced =
      r.status == InterpolationStatus::ok || r.status == InterpolationStatus::requirement_failed;
  std::optional<VerificationReport> verification;
  if (produced && a.verify) {
    verification = verify_interpolant(f, g, r.h, opts.require, opts.limits);
  }
  if (a.json) {
    json j = report_json(r, a.timings);
    if (verification) {
      json v = json::array();
      for (const VerificationItem& i : verification->items) {
        v.push_back({{"condition", i.condition}, {"verdict", to_string(i.verdict)},
                     {"detail", i.detail}});
      }
      j["verification"] = v;
    }
    out << j.dump(2) << "\n";
  } else {
    if (produced) out << to_string(r.h) << "\n";
    report_text(r, a.timings, out);
    if (verification) {
      for (const VerificationItem& i : verification->items) {
        out << "% verify " << i.condition << ": " << to_string(i.verdict)
            << (i.detail.empty() ? "" : " (" + i.detail + ")") << "\n";
      }
    }
    if (a.show_tableau && produced && !r.report.shortcut) {
      std::string doc = write_tableau(r.tableau);
      std::istringstream lines(doc);
      std::string line;
      while (std::getline(lines, line)) out << "% " << line << "\n";
    }
  }
  if (produced && !a.out_path.empty()) write_output(a.out_path, to_string(r.h) + "\n", out);

  switch (r.status) {
    case InterpolationStatus::ok:
      break;
    case InterpolationStatus::requirement_failed:
      return kFailed;
    case InterpolationStatus::not_entailed:
    case InterpolationStatus::not_proved:
      return kNotProved;
  }
  if (verification && !verification->passed()) return kFailed;
  return kOk;
}

InterpolationOptions make_options(const InterpolateArgs& a, const Limits& limits) {
  InterpolationOptions opts;
  for (const std::string& r : a.require) {
    auto req = parse_requirement(r);
    if (!req) throw CLI::ValidationError("--require", "unknown requirement " + r);
    opts.require.insert(*req);
  }
  opts.force_hyper = a.force_hyper;
  opts.limits = limits.prover();
  opts.max_clauses = limits.max_clauses;
  opts.max_nodes = limits.max_nodes;
  opts.equality_axioms = a.equality;
  opts.tie = a.side_tie == "g" ? TiePolicy::prefer_g : TiePolicy::prefer_f;
  opts.grounding = a.ground_side == "g"             ? GroundingPolicy::g_side
                   : a.ground_side == "round-robin" ? GroundingPolicy::round_robin
                                                    : GroundingPolicy::f_side;
  return opts;
}

std::optional<std::set<Symbol>> free_var_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "none") return std::set<Symbol>{};
  return parse_symbol_list(text);
}

int cmd_interpolate(const InterpolateArgs& a, const Limits& limits, std::ostream& out) {
  Formula f, g;
  if (!a.problem.empty()) {
    Problem p = load_problem(a.problem);
    f = p.premises;
    g = p.conclusion;
  } else {
    if (a.f.empty() || a.g.empty()) {
      throw CLI::ValidationError("interpolate", "needs --f and --g, or --problem");
    }
    f = load_formula(a.f);
    g = load_formula(a.g);
  }
  auto keep = free_var_option(a.free_vars);
  f = keep_free(f, keep);
  g = keep_free(g, keep);
  InterpolationOptions opts = make_options(a, limits);
  InterpolationResult r = interpolate(f, g, opts);
  return finish_interpolation(r, f, g, a, opts, out);
}

// ---------------------------------------------------------------- hyper

int cmd_hyper(const std::string& input, bool stats, bool trace, bool as_json, bool timings,
              const Limits& limits, const std::string& out_path, std::ostream& out) {
  LoadedTableau loaded = load_tableau_or_proof(input, limits.max_nodes);
  HyperOptions opts;
  opts.max_nodes = limits.max_nodes;
  auto start = Clock::now();
  HyperResult r = hyper_convert(loaded.tableau, opts);
  double ms = ms_since(start);

  std::string doc = write_tableau(r.tableau);
  if (as_json) {
    json j;
    j["tableau"] = doc;
    j["size_before"] = r.size_before;
    j["size_after"] = r.size_after;
    j["size_ratio"] = r.size_before ? static_cast<double>(r.size_after) / r.size_before : 0.0;
    j["rounds"] = r.rounds;
    j["regularity_firings"] = r.trace.regularity_firings();
    j["measure_decreasing"] = r.trace.strictly_decreasing();
    if (trace) {
      json rounds = json::array();
      for (const ConversionRound& round : r.trace.rounds) {
        rounds.push_back({{"measure", round.measure.to_string()}, {"size", round.size_after}});
      }
      j["trace"] = rounds;
    }
    if (timings) j["time_ms"] = ms;
    out << j.dump(2) << "\n";
    if (!out_path.empty()) write_output(out_path, doc, out);
    return kOk;
  }
  write_output(out_path, doc, out);
  if (trace) {
    std::size_t n = 0;
    for (const ConversionRound& round : r.trace.rounds) {
      out << "% round " << ++n << ": measure " << round.measure.to_string() << ", size "
          << round.size_after << "\n";
    }
  }
  if (stats) {
    out << "% size before: " << r.size_before << "\n";
    out << "% size after: " << r.size_after << "\n";
    if (r.size_before) {
      out << "% size ratio: "
          << fmt_ratio(static_cast<double>(r.size_after) / static_cast<double>(r.size_before))
          << "\n";
    }
    out << "% rounds: " << r.rounds << "\n";
    out << "% regularity firings: " << r.trace.regularity_firings() << "\n";
    if (timings) out << "% time: " << ms << " ms\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- check

void print_report(const std::string& name, const RestrictionReport& r, std::ostream& out) {
  out << name << ": " << (r.verdict ? "pass" : "fail") << "\n";
  for (const RestrictionWitness& w : r.witnesses) {
    out << "  " << w.condition << ": " << w.culprit << " in " << to_string(w.clause) << "\n";
  }
}

int cmd_check(const std::string& property, const std::string& input, const std::string& f_arg,
              const std::string& g_arg, const std::string& free_vars, const Limits& limits,
              std::ostream& out) {
  if (property == "vx-preconditions") {
    Formula f, g;
    if (!input.empty()) {
      Problem p = load_problem(input);
      f = p.premises;
      g = p.conclusion;
    } else {
      f = load_formula(f_arg);
      g = load_formula(g_arg);
    }
    std::set<Symbol> x = free_vars.empty() ? craigtab::free_vars(f) : parse_symbol_list(free_vars);
    RestrictionReport r = check_vx_preconditions(f, g, x, limits.max_clauses);
    print_report(property, r, out);
    return r.verdict ? kOk : kFailed;
  }
  Formula f = load_formula(input.empty() ? f_arg : input);
  f = keep_free(f, free_var_option(free_vars));
  if (property == "u-rr" || property == "vgt-rr") {
    RestrictionReport r = property == "u-rr" ? is_u_range_restricted(f, limits.max_clauses)
                                             : is_vgt_range_restricted(f, limits.max_clauses);
    print_report(property, r, out);
    return r.verdict ? kOk : kFailed;
  }
  if (property == "horn" || property == "horn-like") {
    bool ok = property == "horn" ? is_horn(f) : is_horn_like(nnf(f));
    out << property << ": " << (ok ? "pass" : "fail") << "\n";
    return ok ? kOk : kFailed;
  }
  if (property == "prop4") {
    Prop4Report r = prop4_check(f, limits.max_clauses);
    for (const Prop4Item& i : r.items) {
      out << i.name << ": "
          << (!i.applicable ? "not applicable"
                            : std::string(i.lhs ? "true" : "false") + " / " +
                                  (i.rhs ? "true" : "false"))
          << "\n";
    }
    out << "prop4: " << (r.consistent() ? "consistent" : "inconsistent") << "\n";
    return r.consistent() ? kOk : kFailed;
  }
  throw CLI::ValidationError("--property", "unknown property " + property);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& f_arg, const std::string& g_arg, const std::string& h_arg,
               const std::vector<std::string>& require, const Limits& limits, bool as_json,
               std::ostream& out) {
  Formula f = load_formula(f_arg), g = load_formula(g_arg), h = load_formula(h_arg);
  std::set<Requirement> reqs;
  for (const std::string& r : require) {
    auto req = parse_requirement(r);
    if (!req) throw CLI::ValidationError("--require", "unknown requirement " + r);
    reqs.insert(*req);
  }
  VerificationReport report = verify_interpolant(f, g, h, reqs, limits.prover());
  if (as_json) {
    json v = json::array();
    for (const VerificationItem& i : report.items) {
      v.push_back({{"condition", i.condition}, {"verdict", to_string(i.verdict)},
                   {"detail", i.detail}});
    }
    out << json{{"passed", report.passed()}, {"items", v}}.dump(2) << "\n";
  } else {
    for (const VerificationItem& i : report.items) {
      out << i.condition << ": " << to_string(i.verdict)
          << (i.detail.empty() ? "" : " (" + i.detail + ")") << "\n";
    }
  }
  return report.passed() ? kOk : kFailed;
}

// ---------------------------------------------------------------- define

int cmd_define(const std::string& kb, const std::string& query, const std::string& problem,
               const std::string& targets, InterpolateArgs a, const Limits& limits,
               std::ostream& out) {
  Formula k, q;
  if (!problem.empty()) {
    Problem p = load_problem(problem);
    k = p.premises;
    q = p.conclusion;
  } else {
    k = load_formula(kb);
    q = load_formula(query);
  }
  InterpolationOptions opts = make_options(a, limits);
  InterpolationResult r = synthesize_definition(k, q, parse_symbol_list(targets), opts);
  return finish_interpolation(r, r.context.f, r.context.g, a, opts, out);
}

// ---------------------------------------------------------------- import

int cmd_import(const std::string& input, const Limits& limits, const std::string& out_path,
               std::ostream& out) {
  std::string text = read_file(input);
  ProofDocument doc = read_proof(text);
  DeductionNode tree = ground_deduction(expand_proof(doc, limits.max_nodes));
  Tableau t = to_cut_normal_form(tree, doc.input_clauses());
  write_output(out_path, write_tableau(t), out);
  return kOk;
}

// ---------------------------------------------------------------- stats

struct StatsRow {
  std::string name;
  bool ok = false;
  std::string error;
  std::size_t steps = 0;  // S2
  std::size_t s3 = 0;
  std::size_t s4 = 0;
  double ms = 0;
  std::size_t rounds = 0;
  bool decreasing = true;
};

StatsRow stats_row(const fs::path& path, const Limits& limits) {
  StatsRow row;
  row.name = path.filename().string();
  try {
    LoadedTableau loaded = load_tableau_or_proof(path.string(), limits.max_nodes);
    row.steps = loaded.proof_steps;
    HyperOptions opts;
    opts.max_nodes = limits.max_nodes;
    auto start = Clock::now();
    HyperResult r = hyper_convert(loaded.tableau, opts);
    row.ms = ms_since(start);
    row.s3 = r.size_before;
    row.s4 = r.size_after;
    row.rounds = r.rounds;
    row.decreasing = r.trace.strictly_decreasing();
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

int cmd_stats(const std::string& dir, unsigned jobs, bool as_json, bool timings,
              const Limits& limits, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".proof" || ext == ".tableau") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<StatsRow> rows(files.size());
  jobs = std::max(1u, jobs);
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < files.size();) rows[i] = stats_row(files[i], limits);
    });
  }
  for (std::thread& t : workers) t.join();

  std::vector<double> s3, s4, ratio, t2;
  std::size_t ok = 0, not_larger = 0, violations = 0;
  for (const StatsRow& r : rows) {
    if (!r.ok) continue;
    ++ok;
    s3.push_back(static_cast<double>(r.s3));
    s4.push_back(static_cast<double>(r.s4));
    ratio.push_back(r.s3 ? static_cast<double>(r.s4) / static_cast<double>(r.s3) : 0.0);
    t2.push_back(r.ms / 1000.0);
    if (r.s4 <= r.s3) ++not_larger;
    if (!r.decreasing) ++violations;
  }
  auto min_of = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
  };
  auto max_of = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  };

  if (as_json) {
    json list = json::array();
    for (const StatsRow& r : rows) {
      json j{{"problem", r.name}, {"ok", r.ok}};
      if (r.ok) {
        j["S2"] = r.steps;
        j["S3"] = r.s3;
        j["S4"] = r.s4;
        j["ratio"] = r.s3 ? static_cast<double>(r.s4) / static_cast<double>(r.s3) : 0.0;
        j["T2"] = std::lround(r.ms / 1000.0);
        if (timings) j["T2_ms"] = r.ms;
        j["rounds"] = r.rounds;
      } else {
        j["error"] = r.error;
      }
      list.push_back(j);
    }
    json summary{{"proofs", rows.size()},
                 {"converted", ok},
                 {"not_larger", not_larger},
                 {"measure_violations", violations},
                 {"median", {{"S3", median(s3)}, {"S4", median(s4)}, {"ratio", median(ratio)}}},
                 {"min", {{"S3", min_of(s3)}, {"S4", min_of(s4)}, {"ratio", min_of(ratio)}}},
                 {"max", {{"S3", max_of(s3)}, {"S4", max_of(s4)}, {"ratio", max_of(ratio)}}}};
    if (timings) {
      summary["median"]["T2"] = median(t2);
      summary["min"]["T2"] = min_of(t2);
      summary["max"]["T2"] = max_of(t2);
    }
    out << json{{"rows", list}, {"summary", summary}}.dump(2) << "\n";
  } else {
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.insert(0, w - s.size(), ' ');
      return s;
    };
    std::size_t width = 7;
    for (const StatsRow& r : rows) width = std::max(width, r.name.size());
    out << std::string("Problem") + std::string(width - 7, ' ') << pad("S2", 6) << pad("S3", 8)
        << pad("S4", 8) << pad("ratio", 8) << pad("T2", 5) << "\n";
    for (const StatsRow& r : rows) {
      out << r.name << std::string(width - r.name.size(), ' ');
      if (!r.ok) {
        out << "  failed: " << r.error << "\n";
        continue;
      }
      double q = r.s3 ? static_cast<double>(r.s4) / static_cast<double>(r.s3) : 0.0;
      out << pad(std::to_string(r.steps), 6) << pad(std::to_string(r.s3), 8)
          << pad(std::to_string(r.s4), 8) << pad(fmt_ratio(q), 8)
          << pad(std::to_string(std::lround(r.ms / 1000.0)), 5);
      if (timings) out << "  " << r.ms << " ms";
      out << "\n";
    }
    auto summary = [&](const char* label, double a, double b, double c) {
      out << label << std::string(width - std::string(label).size(), ' ') << pad("", 6)
          << pad(fmt_ratio(a), 8) << pad(fmt_ratio(b), 8) << pad(fmt_ratio(c), 8) << "\n";
    };
    summary("median", median(s3), median(s4), median(ratio));
    summary("min", min_of(s3), min_of(s4), min_of(ratio));
    summary("max", max_of(s3), max_of(s4), max_of(ratio));
    out << "% converted: " << ok << " of " << rows.size() << "\n";
    out << "% not larger after conversion: " << not_larger << " of " << ok << "\n";
    out << "% measure violations: " << violations << "\n";
  }
  return ok == rows.size() && violations == 0 ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Craig-Lyndon interpolation from clausal tableaux"};
  app.require_subcommand(1);
  Limits limits = default_limits();

  // prove
  std::string input, format = "tptp-fof", out_path;
  bool equality = false;
  auto* prove_cmd = app.add_subcommand("prove", "Prove a problem and print the tableau");
  prove_cmd->add_option("--input,-i", input, "Problem file")->required();
  prove_cmd->add_option("--format", format, "tptp-fof or clauses")
      ->check(CLI::IsMember({"tptp-fof", "clauses"}));
  prove_cmd->add_flag("--equality-axioms", equality, "Add equality axioms");
  prove_cmd->add_option("--out,-o", out_path, "Output file");
  add_limit_options(prove_cmd, limits);

  // interpolate
  InterpolateArgs ia;
  auto* ipol_cmd = app.add_subcommand("interpolate", "Compute an interpolant of F and G");
  ipol_cmd->add_option("--f", ia.f, "Formula F (file or text)");
  ipol_cmd->add_option("--g", ia.g, "Formula G (file or text)");
  ipol_cmd->add_option("--problem", ia.problem, "TPTP problem: axioms F, conjecture G");
  ipol_cmd->add_option("--require", ia.require, "u-rr, vgt-rr or horn (repeatable or comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"u-rr", "vgt-rr", "horn"}));
  ipol_cmd->add_option("--free-vars", ia.free_vars,
                       "Variables to keep free (comma separated, or none); others are closed");
  ipol_cmd->add_option("--side-tie", ia.side_tie, "Side for clauses of both inputs")
      ->check(CLI::IsMember({"f", "g"}));
  ipol_cmd->add_option("--ground-side", ia.ground_side, "Side of grounding constants")
      ->check(CLI::IsMember({"f", "g", "round-robin"}));
  ipol_cmd->add_flag("--verify", ia.verify, "Verify the interpolant");
  ipol_cmd->add_flag("--hyper", ia.force_hyper, "Convert the proof to hyper form");
  ipol_cmd->add_flag("--equality-axioms", ia.equality, "Add equality axioms");
  ipol_cmd->add_flag("--json", ia.json, "JSON report");
  ipol_cmd->add_flag("--timings", ia.timings, "Report stage timings");
  ipol_cmd->add_flag("--show-tableau", ia.show_tableau, "Print the two-sided tableau");
  ipol_cmd->add_option("--out,-o", ia.out_path, "Write the interpolant to a file");
  ipol_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit of hyper conversion");
  add_limit_options(ipol_cmd, limits);

  // hyper
  std::string hyper_input;
  bool stats = false, trace = false, hyper_json = false, hyper_timings = false;
  auto* hyper_cmd = app.add_subcommand("hyper", "Convert a tableau or proof to hyper form");
  hyper_cmd->add_option("--proof,-i", hyper_input, "Tableau or proof document")->required();
  hyper_cmd->add_flag("--stats", stats, "Print size statistics");
  hyper_cmd->add_flag("--trace", trace, "Print the measure of every round");
  hyper_cmd->add_flag("--json", hyper_json, "JSON report");
  hyper_cmd->add_flag("--timings", hyper_timings, "Report conversion time");
  hyper_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit");
  hyper_cmd->add_option("--out,-o", out_path, "Output file");

  // check
  std::string property, check_input, check_f, check_g, check_free;
  auto* check_cmd = app.add_subcommand("check", "Check a syntactic property");
  check_cmd->add_option("--property,-p", property, "Property")
      ->required()
      ->check(CLI::IsMember({"u-rr", "vgt-rr", "horn", "horn-like", "vx-preconditions", "prop4"}));
  check_cmd->add_option("--input,-i", check_input, "Formula (file or text)");
  check_cmd->add_option("--f", check_f, "F for vx-preconditions");
  check_cmd->add_option("--g", check_g, "G for vx-preconditions");
  check_cmd->add_option("--free-vars", check_free, "Free variables X");
  check_cmd->add_option("--max-clauses", limits.max_clauses, "Clause limit of cnf/dnf");

  // verify
  std::string vf, vg, vh;
  std::vector<std::string> vreq;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify an interpolant");
  verify_cmd->add_option("--f", vf, "Formula F")->required();
  verify_cmd->add_option("--g", vg, "Formula G")->required();
  verify_cmd->add_option("--interpolant", vh, "Candidate interpolant H")->required();
  verify_cmd->add_option("--require", vreq, "u-rr, vgt-rr or horn (repeatable or comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"u-rr", "vgt-rr", "horn"}));
  verify_cmd->add_flag("--json", verify_json, "JSON report");
  add_limit_options(verify_cmd, limits);

  // define
  std::string kb, query, define_problem, targets;
  InterpolateArgs da;
  auto* define_cmd = app.add_subcommand("define", "Synthesize a definition of a query");
  define_cmd->add_option("--kb", kb, "Background knowledge K");
  define_cmd->add_option("--query", query, "Query Q");
  define_cmd->add_option("--problem", define_problem, "TPTP problem: axioms K, conjecture Q");
  define_cmd->add_option("--targets", targets, "Target predicates (comma separated)")
      ->required();
  define_cmd->add_option("--require", da.require, "u-rr, vgt-rr or horn (repeatable or comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"u-rr", "vgt-rr", "horn"}));
  define_cmd->add_flag("--verify", da.verify, "Verify the interpolant");
  define_cmd->add_flag("--json", da.json, "JSON report");
  add_limit_options(define_cmd, limits);

  // import
  std::string import_input;
  auto* import_cmd = app.add_subcommand("import", "Import a resolution proof");
  import_cmd->add_option("--proof,-i", import_input, "Proof document")->required();
  import_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit of the proof tree");
  import_cmd->add_option("--out,-o", out_path, "Output file");

  // stats
  std::string stats_dir;
  unsigned jobs = 1;
  bool stats_json = false, stats_timings = false;
  auto* stats_cmd = app.add_subcommand("stats", "Conversion statistics over a directory");
  stats_cmd->add_option("--dir,-d", stats_dir, "Directory of .proof and .tableau files")
      ->required();
  stats_cmd->add_option("--jobs,-j", jobs, "Parallel workers");
  stats_cmd->add_flag("--json", stats_json, "JSON report");
  stats_cmd->add_flag("--timings", stats_timings, "Report times in milliseconds");
  stats_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*prove_cmd) return cmd_prove(input, format, limits, equality, out_path, out, err);
    if (*ipol_cmd) return cmd_interpolate(ia, limits, out);
    if (*hyper_cmd) {
      return cmd_hyper(hyper_input, stats, trace, hyper_json, hyper_timings, limits, out_path,
                       out);
    }
    if (*check_cmd) {
      return cmd_check(property, check_input, check_f, check_g, check_free, limits, out);
    }
    if (*verify_cmd) return cmd_verify(vf, vg, vh, vreq, limits, verify_json, out);
    if (*define_cmd) return cmd_define(kb, query, define_problem, targets, da, limits, out);
    if (*import_cmd) return cmd_import(import_input, limits, out_path, out);
    if (*stats_cmd) return cmd_stats(stats_dir, jobs, stats_json, stats_timings, limits, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace craigtab::cli
