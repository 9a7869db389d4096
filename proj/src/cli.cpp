#include "argcsp/cli.hpp"

#include "argcsp/encodings.hpp"
#include "argcsp/interchange.hpp"
#include "argcsp/netgen.hpp"
#include "argcsp/requirement_syntax.hpp"
#include "argcsp/wge.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace argcsp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

Framework load(const std::string& path) {
  try {
    return parse_dl(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

std::uint64_t default_timeout() {
  if (const char* env = std::getenv("ARGCSP_TIMEOUT_MS")) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("ARGCSP_TIMEOUT_MS must be a positive integer");
  }
  return 180000;
}

// --- option groups shared by several subcommands ---------------------------

struct SearchFlags {
  std::uint64_t timeout_ms = 0;
  std::uint64_t seed = 0;
  std::string var_heuristic = "most-constrained";
  std::string value_heuristic = "one-first";

  void attach(CLI::App* app) {
    app->add_option("--timeout", timeout_ms, "Search timeout in milliseconds (default $ARGCSP_TIMEOUT_MS or 180000)");
    app->add_option("--seed", seed, "Seed for randomized value ordering");
    app->add_option("--var-heuristic", var_heuristic, "most-constrained | input-order")
        ->check(CLI::IsMember({"most-constrained", "input-order"}));
    app->add_option("--value-heuristic", value_heuristic, "one-first | zero-first | random")
        ->check(CLI::IsMember({"one-first", "zero-first", "random"}));
  }

  [[nodiscard]] SearchConfig config() const {
    SearchConfig c;
    c.timeout_ms = timeout_ms ? timeout_ms : default_timeout();
    c.seed = seed;
    c.variable_heuristic =
        var_heuristic == "input-order" ? VariableHeuristic::InputOrder : VariableHeuristic::MostConstrainedStatic;
    c.value_heuristic = value_heuristic == "zero-first" ? ValueHeuristic::ZeroFirst
                        : value_heuristic == "random"   ? ValueHeuristic::SeededRandom
                                                        : ValueHeuristic::OneFirst;
    return c;
  }

  void describe(ResultsMeta& meta, const SearchConfig& c) const {
    meta.fields.emplace_back("seed", std::to_string(c.seed));
    meta.fields.emplace_back("variable-heuristic", var_heuristic);
    meta.fields.emplace_back("value-heuristic", value_heuristic);
    meta.fields.emplace_back("timeout-ms", std::to_string(c.timeout_ms));
  }
};

struct SemanticsFlags {
  std::string name = "admissible";
  std::string alpha;
  std::string stable_rule = "strict";
  std::string defense = "outside";

  void attach(CLI::App* app) {
    app->add_option("--semantics", name, "Semantics name, optionally prefixed with alpha-");
    app->add_option("--alpha", alpha, "Threshold for alpha- semantics, in the framework's semiring");
    app->add_option("--stable-rule", stable_rule, "strict | any-attack (alpha-stable only)")
        ->check(CLI::IsMember({"strict", "any-attack"}));
    app->add_option("--defense", defense, "outside | all: attackers a weighted defense must answer")
        ->check(CLI::IsMember({"outside", "all"}));
  }

  [[nodiscard]] SemanticsSpec resolve(const Framework& f) const {
    std::string base = name;
    const bool weighted = base.rfind("alpha-", 0) == 0;
    if (weighted) base = base.substr(6);
    auto kind = parse_semantics_kind(base);
    if (!kind) throw UsageError("unknown semantics '" + name + "'");
    if (weighted != !alpha.empty()) {
      throw UsageError(weighted ? "alpha- semantics need --alpha" : "--alpha applies to alpha- semantics only");
    }
    if (weighted && !f.is_weighted()) {
      throw UsageError("the framework is unweighted; use a classical semantics");
    }
    if (!weighted && f.is_weighted()) {
      throw UsageError("the framework is weighted; only alpha- semantics apply");
    }
    if (!weighted) return SemanticsSpec::classical(*kind);
    SemiringValue a;
    try {
      a = f.semiring().parse(alpha);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --alpha: ") + e.what());
    }
    return SemanticsSpec::weighted(*kind, a, stable_rule == "any-attack" ? StableRule::AnyAttack : StableRule::Strict,
                                   defense == "all" ? DefenseScope::AllAttackers : DefenseScope::OutsideAttackers);
  }

  void describe(ResultsMeta& meta, const Framework& f, const SemanticsSpec& spec) const {
    meta.fields.emplace_back("semantics", name);
    meta.fields.emplace_back("semiring", f.is_weighted() ? f.semiring().name() : "none");
    if (spec.is_weighted()) {
      meta.fields.emplace_back("alpha", spec.threshold->to_string());
      meta.fields.emplace_back("defense", defense);
      if (spec.kind == SemanticsKind::Stable) meta.fields.emplace_back("stable-rule", stable_rule);
    }
  }
};

WeightScheme parse_weights(const std::string& text) {
  WeightScheme w;
  if (text == "none") return w;
  if (text == "fuzzy") {
    w.kind = WeightScheme::FuzzyUniform;
    return w;
  }
  if (text.rfind("int:", 0) == 0) {
    try {
      std::size_t used = 0;
      w.max = std::stoull(text.substr(4), &used);
      if (used == text.size() - 4 && w.max >= 1) {
        w.kind = WeightScheme::IntegerUniform;
        return w;
      }
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--weights expects int:MAX, fuzzy or none");
}

// --- generate ----------------------------------------------------------------

struct GraphFlags {
  std::string kind = "barabasi";
  std::size_t nodes = 10;
  std::size_t edges_per_step = 3;
  std::size_t side = 5;
  double theta = 0.5;
  std::size_t long_range = 1;
  std::string orientation;
  std::uint64_t seed = 0;
  std::string weights;
  std::optional<std::uint64_t> weight_seed;

  void attach(CLI::App* app, bool sizes) {
    app->add_option("--kind", kind, "barabasi | kleinberg | fig4")->check(CLI::IsMember({"barabasi", "kleinberg", "fig4"}));
    if (sizes) {
      app->add_option("--nodes", nodes, "Number of arguments (barabasi)");
      app->add_option("--n", side, "Lattice side; the graph has n*n arguments (kleinberg)");
    }
    app->add_option("--edges-per-step", edges_per_step, "Attachments per new vertex (barabasi)");
    app->add_option("--theta", theta, "Clustering exponent of long-range links (kleinberg)");
    app->add_option("--long-range", long_range, "Long-range attacks per node (kleinberg)");
    app->add_option("--orientation", orientation, "coin | both: how undirected links become attacks")
        ->check(CLI::IsMember({"coin", "both"}));
    app->add_option("--weights", weights, "int:MAX | fuzzy | none");
    app->add_option("--weight-seed", weight_seed, "Seed for weights (defaults to the graph seed)");
  }

  [[nodiscard]] Framework build(std::size_t size, std::uint64_t graph_seed) const {
    Framework f;
    if (kind == "fig4") {
      f = example_framework(weights.empty());
    } else if (kind == "barabasi") {
      BarabasiSpec b{size, edges_per_step, graph_seed,
                     orientation == "both" ? Orientation::BothDirections : Orientation::FairCoin};
      f = gen_barabasi(b);
    } else {
      KleinbergSpec k{size, theta, long_range, graph_seed,
                      orientation == "coin" ? Orientation::FairCoin : Orientation::BothDirections};
      f = gen_kleinberg(k);
    }
    if (!weights.empty()) f = assign_weights(f, parse_weights(weights), weight_seed.value_or(graph_seed));
    return f;
  }
};

int cmd_generate(GraphFlags& g, const std::string& out_path, std::ostream& out) {
  Framework f;
  try {
    f = g.build(g.kind == "kleinberg" ? g.side : g.nodes, g.seed);
  } catch (const GeneratorError& e) {
    throw UsageError(e.what());
  }
  std::string text = emit_dl(f);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

// --- solve -------------------------------------------------------------------

struct SolveFlags {
  std::string input;
  SemanticsFlags sem;
  SearchFlags search;
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  std::optional<std::size_t> max_solutions;
  std::string check_preferred;
  bool check_preferred_set = false;
  std::string results;
  std::string dot;
  bool timing = false;
  bool allow_incomplete = false;
  bool no_leaf_check = false;
};

int cmd_solve(SolveFlags& s, std::ostream& out, std::ostream& err) {
  Framework f = load(s.input);
  SearchConfig cfg = s.search.config();

  if (s.check_preferred_set) {
    if (f.is_weighted()) throw UsageError("--check-preferred needs an unweighted framework");
    Extension t;
    try {
      t = parse_extension(f, s.check_preferred);
    } catch (const FrameworkError& e) {
      throw UsageError(e.what());
    }
    try {
      out << (is_preferred(f, t, cfg) ? "yes" : "no") << "\n";
    } catch (const SearchTimeout& e) {
      err << "argcsp: " << e.what() << "\n";
      return s.allow_incomplete ? kExitOk : kExitIncomplete;
    }
    return kExitOk;
  }

  SemanticsSpec spec = s.sem.resolve(f);
  EncodingRequest req{f, spec, cfg, {}, !s.no_leaf_check};
  req.search.solution_cap = s.max_solutions;
  try {
    for (const auto& r : s.require) req.requirements.push_back(parse_requirement(f, r));
    for (const auto& r : s.forbid) req.requirements.push_back(parse_prohibition(f, r));
  } catch (const RequirementSyntaxError& e) {
    throw UsageError(e.what());
  }

  EnumerateOutcome res;
  try {
    res = enumerate(req);
  } catch (const EncodingError& e) {
    throw UsageError(e.what());
  }
  const SolveOutcome& o = res.outcome;
  for (const auto& e : o.solutions) out << format_extension(f, e) << "\n";
  out << "solutions: " << o.solutions.size() << "\n";
  out << "complete: " << (o.complete ? "true" : "false") << "\n";
  out << "nodes: " << o.nodes << "\n";
  if (s.timing) out << "elapsed-ms: " << o.elapsed_ms << "\n";
  if (res.rejected) err << "argcsp: leaf check rejected " << res.rejected << " candidate(s)\n";

  if (!s.results.empty()) {
    ResultsMeta meta;
    meta.include_timing = s.timing;
    meta.fields.emplace_back("input", s.input);
    meta.fields.emplace_back("arguments", std::to_string(f.size()));
    meta.fields.emplace_back("attacks", std::to_string(f.attacks().size()));
    s.sem.describe(meta, f, spec);
    s.search.describe(meta, cfg);
    for (const auto& r : s.require) meta.fields.emplace_back("require", r);
    for (const auto& r : s.forbid) meta.fields.emplace_back("forbid", r);
    if (s.max_solutions) meta.fields.emplace_back("max-solutions", std::to_string(*s.max_solutions));
    meta.fields.emplace_back("leaf-rejected", std::to_string(res.rejected));
    write_file(s.results, emit_results(f, o, meta));
  }
  if (!s.dot.empty()) {
    std::optional<Extension> hl;
    if (!o.solutions.empty()) hl = o.solutions.front();
    write_file(s.dot, emit_dot(f, hl));
  }
  if (!o.complete && !s.allow_incomplete) {
    err << "argcsp: search stopped before completion\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

// --- decide ------------------------------------------------------------------

struct DecideFlags {
  std::string input;
  std::uint64_t beta = 0;
  std::string arg;
  std::string set;
  SearchFlags search;
};

std::string format_removal(const Framework& f, const RemovalSet& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.attacks.size(); ++i) {
    const auto& at = f.attacks()[r.attacks[i]];
    if (i) s += ',';
    s += "(" + f.name(at.attacker) + "," + f.name(at.target) + ")";
  }
  return s + "}";
}

int cmd_decide(const std::string& which, DecideFlags& d, std::ostream& out, std::ostream& err) {
  Framework f = load(d.input);
  if (!f.is_weighted() || f.semiring().kind() != SemiringKind::Weighted) {
    throw UsageError("budget decisions need integer attack weights");
  }
  SearchConfig cfg = d.search.config();
  try {
    if (which == "credulous-wge" || which == "skeptical-wge") {
      auto id = f.find(d.arg);
      if (!id) throw UsageError("unknown argument '" + d.arg + "'");
      WgeAnswer a = which == "credulous-wge" ? credulous(f, d.beta, *id, cfg) : skeptical(f, d.beta, *id, cfg);
      out << (a.value ? "true" : "false") << "\n";
      out << "witness: " << (a.witness ? format_extension(f, *a.witness) : "none") << "\n";
      if (a.removal) out << "removed: " << format_removal(f, *a.removal) << "\n";
      return kExitOk;
    }
    Extension l;
    try {
      l = parse_extension(f, d.set);
    } catch (const FrameworkError& e) {
      throw UsageError(e.what());
    }
    auto m = minimal_budget(f, l, cfg);
    if (which == "minimal-budget") {
      if (!m) {
        out << "none\n";
      } else {
        out << m->budget << "\n";
        out << "removed: " << format_removal(f, m->removal) << "\n";
      }
      return kExitOk;
    }
    out << (m && m->budget == d.beta ? "true" : "false") << "\n";
    out << "minimal-budget: " << (m ? std::to_string(m->budget) : "none") << "\n";
    return kExitOk;
  } catch (const SearchTimeout& e) {
    err << "argcsp: " << e.what() << "\n";
    return kExitIncomplete;
  }
}

// --- bench -------------------------------------------------------------------

struct BenchFlags {
  GraphFlags graph;
  std::vector<std::size_t> sizes;
  std::size_t reps = 10;
  std::vector<std::string> semantics{"stable"};
  std::uint64_t timeout_ms = 0;
  std::string alpha;
  std::string stable_rule = "strict";
  std::string out;
  bool no_timing = false;
};

struct Cell {
  double count_sum = 0;
  double ms_sum = 0;
  std::size_t completed = 0;
  std::size_t runs = 0;
  bool timed_out = false;
};

std::string fixed(double v, int places) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(places) << v;
  return s.str();
}

int cmd_bench(BenchFlags& b, std::ostream& out) {
  if (b.reps < 1) throw UsageError("--reps must be at least 1");
  if (b.semantics.empty()) throw UsageError("--semantics needs at least one entry");
  std::vector<std::size_t> sizes = b.sizes;
  if (b.graph.kind == "fig4") sizes = {5};
  if (sizes.empty()) throw UsageError("--sizes needs at least one entry");
  SearchConfig cfg;
  cfg.timeout_ms = b.timeout_ms ? b.timeout_ms : default_timeout();

  std::ostringstream raw;
  std::vector<std::vector<Cell>> table(sizes.size(), std::vector<Cell>(b.semantics.size()));
  std::vector<double> attack_sum(sizes.size(), 0.0);
  std::vector<std::size_t> arg_count(sizes.size(), 0);

  for (std::size_t si = 0; si < sizes.size(); ++si) {
    for (std::size_t r = 0; r < b.reps; ++r) {
      const std::uint64_t seed = b.graph.seed + r;
      Framework f;
      try {
        f = b.graph.build(sizes[si], seed);
      } catch (const GeneratorError& e) {
        throw UsageError(e.what());
      }
      attack_sum[si] += static_cast<double>(f.attacks().size());
      arg_count[si] = f.size();
      for (std::size_t k = 0; k < b.semantics.size(); ++k) {
        const std::string& name = b.semantics[k];
        double count = 0;
        double ms = 0;
        bool complete = true;
        std::uint64_t nodes = 0;
        if (name == "check-preferred") {
          if (f.is_weighted()) throw UsageError("check-preferred needs unweighted instances");
          // The grounded extension is a cheap, always-admissible candidate.
          Extension t = grounded_fixpoint(f);
          auto start = std::chrono::steady_clock::now();
          try {
            count = is_preferred(f, t, cfg) ? 1 : 0;
          } catch (const SearchTimeout&) {
            complete = false;
          }
          ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        } else {
          SemanticsFlags sf;
          sf.name = name;
          sf.alpha = b.alpha;
          sf.stable_rule = b.stable_rule;
          EncodingRequest req{f, sf.resolve(f), cfg, {}, true};
          EnumerateOutcome res;
          try {
            res = enumerate(req);
          } catch (const EncodingError& e) {
            throw UsageError(e.what());
          }
          count = static_cast<double>(res.outcome.solutions.size());
          ms = res.outcome.elapsed_ms;
          complete = res.outcome.complete;
          nodes = res.outcome.nodes;
        }
        Cell& c = table[si][k];
        ++c.runs;
        c.count_sum += count;
        if (complete) {
          ++c.completed;
          c.ms_sum += ms;
        } else {
          c.timed_out = true;
        }
        raw << "size=" << sizes[si] << " rep=" << r << " seed=" << seed << " arguments=" << f.size()
            << " attacks=" << f.attacks().size() << " semantics=" << name << " count=" << count
            << " complete=" << (complete ? "true" : "false") << " nodes=" << nodes;
        if (!b.no_timing) raw << " ms=" << fixed(ms, 3);
        raw << "\n";
      }
    }
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"arguments (attacks)"};
  for (const auto& s : b.semantics) header.push_back(s);
  rows.push_back(header);
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::vector<std::string> row{std::to_string(arg_count[si]) + " (" + fixed(attack_sum[si] / b.reps, 1) + ")"};
    for (const auto& c : table[si]) {
      std::string cell = fixed(c.count_sum / c.runs, 1);
      if (!b.no_timing) cell += " (" + (c.completed ? fixed(c.ms_sum / c.completed, 2) : std::string("-")) + ")";
      if (c.timed_out) cell += "*";
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i])) << row[i] << (i + 1 < row.size() ? "  " : "\n");
    }
  }
  if (!b.out.empty()) write_file(b.out, raw.str());
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extensions of (weighted) argumentation frameworks via constraint solving", "argcsp"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Write a generated framework in .dl format");
  GraphFlags gflags;
  std::string gen_out;
  gflags.attach(gen, true);
  gen->add_option("--seed", gflags.seed, "Graph seed");
  gen->add_option("--out", gen_out, "Output path (stdout if absent)");

  auto* solve = app.add_subcommand("solve", "Enumerate extensions or check a preferred candidate");
  SolveFlags sflags;
  solve->add_option("input", sflags.input, "Framework file (.dl or .wdl)")->required();
  sflags.sem.attach(solve);
  sflags.search.attach(solve);
  solve->add_option("--require", sflags.require, "Requirement such as 'if a&!b then !c|!d'");
  solve->add_option("--forbid", sflags.forbid, "Formula no extension may satisfy");
  solve->add_option("--max-solutions", sflags.max_solutions, "Stop after this many extensions");
  auto* chk = solve->add_option("--check-preferred", sflags.check_preferred, "Decide whether SET is preferred");
  solve->add_option("--results", sflags.results, "Write a results document");
  solve->add_option("--dot", sflags.dot, "Write DOT with the first extension highlighted");
  solve->add_flag("--timing", sflags.timing, "Report wall-clock time");
  solve->add_flag("--allow-incomplete", sflags.allow_incomplete, "Exit 0 even when the search was cut short");
  solve->add_flag("--no-leaf-check", sflags.no_leaf_check, "Skip re-checking candidates against the definitions");

  auto* decide = app.add_subcommand("decide", "Inconsistency-budget decision problems");
  decide->require_subcommand(1);
  DecideFlags dflags;
  std::vector<CLI::App*> deciders;
  for (const char* name : {"credulous-wge", "skeptical-wge", "minimal-budget", "is-minimal"}) {
    auto* sub = decide->add_subcommand(name);
    sub->add_option("input", dflags.input, "Weighted framework file")->required();
    dflags.search.attach(sub);
    std::string n = name;
    if (n == "credulous-wge" || n == "skeptical-wge") {
      sub->add_option("--beta", dflags.beta, "Inconsistency budget")->required();
      sub->add_option("--arg", dflags.arg, "Argument name")->required();
    } else {
      sub->add_option("--set", dflags.set, "Comma-separated argument names")->required();
      if (n == "is-minimal") sub->add_option("--beta", dflags.beta, "Budget to test")->required();
    }
    deciders.push_back(sub);
  }

  auto* bench = app.add_subcommand("bench", "Timed enumeration over generated instances");
  BenchFlags bflags;
  bflags.graph.attach(bench, false);
  bench->add_option("--seed", bflags.graph.seed, "Seed of the first repetition; repetition r uses seed+r");
  bench->add_option("--sizes", bflags.sizes, "Node counts (barabasi) or lattice sides (kleinberg)")->delimiter(',');
  bench->add_option("--reps", bflags.reps, "Instances per size");
  bench->add_option("--semantics", bflags.semantics, "Semantics to run; check-preferred is also accepted")
      ->delimiter(',');
  bench->add_option("--timeout", bflags.timeout_ms, "Per-run timeout in milliseconds");
  bench->add_option("--alpha", bflags.alpha, "Threshold for alpha- semantics");
  bench->add_option("--stable-rule", bflags.stable_rule, "strict | any-attack")
      ->check(CLI::IsMember({"strict", "any-attack"}));
  bench->add_option("--out", bflags.out, "Write one raw record per run");
  bench->add_flag("--no-timing", bflags.no_timing, "Leave times out of the table and records");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(gflags, gen_out, out);
    if (solve->parsed()) {
      sflags.check_preferred_set = chk->count() > 0;
      return cmd_solve(sflags, out, err);
    }
    if (decide->parsed()) {
      for (auto* sub : deciders) {
        if (sub->parsed()) return cmd_decide(sub->get_name(), dflags, out, err);
      }
    }
    if (bench->parsed()) return cmd_bench(bflags, out);
  } catch (const UsageError& e) {
    err << "argcsp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SemanticsError& e) {
    err << "argcsp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "argcsp: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace argcsp
