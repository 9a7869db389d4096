// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "argcsp/cli.hpp"
#include "argcsp/encodings.hpp"
#include "argcsp/wge.hpp"

#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace argcsp;
using oracle::set_of;

namespace {

// Pinned limits.
constexpr double kGoldenSuiteMs = 1000.0;
constexpr double kStableBenchMeanMs = 60000.0;
constexpr std::uint64_t kStableBenchTimeoutMs = 180000;
constexpr double kPreferredCheckMeanMs = 1000.0;
constexpr std::size_t kOracleFrameworks = 240;
constexpr std::size_t kWeightedTriples = 10000;
// Stand-in for an unbounded cost threshold.
constexpr std::uint64_t kInfinityProxy = 1000;

const std::vector<SemanticsKind> kAllKinds{
    SemanticsKind::ConflictFree, SemanticsKind::Admissible, SemanticsKind::Complete,
    SemanticsKind::Stable,       SemanticsKind::Preferred,  SemanticsKind::Grounded,
    SemanticsKind::SemiStable,   SemanticsKind::Stage,      SemanticsKind::Ideal};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

ExtensionSet solve(const Framework& f, const SemanticsSpec& spec) {
  EncodingRequest req{f, spec, SearchConfig{}, {}, true};
  auto r = enumerate(req);
  if (!r.outcome.complete) throw std::runtime_error("search incomplete");
  return r.outcome.solutions;
}

ExtensionSet sets(const Framework& f, std::initializer_list<std::initializer_list<const char*>> items) {
  ExtensionSet out;
  for (auto it : items) out.insert(set_of(f, it));
  return out;
}

/// Collects named checks and a count of failed ones.
struct Tally {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  [[nodiscard]] std::string summary(std::size_t total) const {
    std::string s = std::to_string(total - failed.size()) + "/" + std::to_string(total) + " checks";
    for (const auto& f : failed) s += "; failed: " + f;
    return s;
  }
};

void criterion1() {
  auto start = Clock::now();
  auto f = oracle::figure_graph(false);
  auto cl = [&](SemanticsKind k) { return solve(f, SemanticsSpec::classical(k)); };
  Tally t;
  t.expect(cl(SemanticsKind::Stable) == sets(f, {{"a", "d"}}), "stable");
  t.expect(cl(SemanticsKind::Admissible) == sets(f, {{}, {"a"}, {"c"}, {"d"}, {"a", "c"}, {"a", "d"}}), "admissible");
  t.expect(cl(SemanticsKind::Grounded) == sets(f, {{"a"}}), "grounded");
  t.expect(cl(SemanticsKind::Preferred) == sets(f, {{"a", "c"}, {"a", "d"}}), "preferred");
  t.expect(cl(SemanticsKind::Complete) == sets(f, {{"a"}, {"a", "c"}, {"a", "d"}}), "complete");
  t.expect(cl(SemanticsKind::SemiStable) == sets(f, {{"a", "d"}}), "semi-stable");
  t.expect(cl(SemanticsKind::Stage) == sets(f, {{"a", "d"}}), "stage");
  t.expect(cl(SemanticsKind::Ideal) == sets(f, {{"a"}}), "ideal");
  for (auto k : kAllKinds) {
    t.expect(cl(k) == enumerate_bruteforce(f, SemanticsSpec::classical(k)), "oracle " + std::string(to_string(k)));
  }
  double ms = ms_since(start);
  t.expect(ms < kGoldenSuiteMs, "time");
  report(1, t.failed.empty(), t.summary(18) + ", " + std::to_string(ms) + " ms");
}

void criterion2() {
  auto start = Clock::now();
  auto f = oracle::figure_graph(true);
  auto w = [](SemanticsKind k, std::uint64_t a, StableRule r = StableRule::Strict) {
    return SemanticsSpec::weighted(k, SemiringValue::cost(a), r);
  };
  auto abc = set_of(f, {"a", "b", "c"});
  Tally t;
  t.expect(check(f, abc, w(SemanticsKind::ConflictFree, 15)), "{a,b,c} 15-conflict-free");
  t.expect(check(f, abc, w(SemanticsKind::Admissible, 15)), "{a,b,c} 15-admissible");
  t.expect(solve(f, w(SemanticsKind::Admissible, 0)) == sets(f, {{}, {"a"}, {"c"}, {"a", "c"}}), "top-admissible");
  t.expect(solve(f, w(SemanticsKind::Admissible, 15)) ==
               sets(f, {{}, {"c"}, {"c", "e"}, {"a"}, {"a", "c"}, {"a", "c", "e"}, {"a", "b", "c"}}),
           "15-admissible list");
  t.expect(check(f, set_of(f, {"a", "d"}), w(SemanticsKind::Stable, 4)), "{a,d} 4-stable");
  t.expect(solve(f, w(SemanticsKind::Stable, 4)).contains(set_of(f, {"a", "d"})), "{a,d} enumerated 4-stable");
  auto ade = set_of(f, {"a", "d", "e"});
  t.expect(check(f, ade, w(SemanticsKind::Stable, 11, StableRule::AnyAttack)), "{a,d,e} 11-stable any-attack");
  t.expect(!check(f, ade, w(SemanticsKind::Stable, 11, StableRule::Strict)), "{a,d,e} not 11-stable strict");
  double ms = ms_since(start);
  t.expect(ms < kGoldenSuiteMs, "time");
  report(2, t.failed.empty(), t.summary(9) + ", " + std::to_string(ms) + " ms");
}

void criterion3() {
  oracle::Sampler s(3003, 8);
  std::size_t frameworks = 0, comparisons = 0, mismatches = 0;
  std::string first;
  auto compare = [&](const Framework& f, const SemanticsSpec& spec) {
    ++comparisons;
    if (solve(f, spec) != enumerate_bruteforce(f, spec)) {
      if (!mismatches++) first = "framework " + std::to_string(frameworks) + " " + std::string(to_string(spec.kind));
    }
  };
  for (std::size_t i = 0; i < kOracleFrameworks; ++i, ++frameworks) {
    auto g = s.graph(i);
    for (auto k : kAllKinds) compare(g, SemanticsSpec::classical(k));
    auto wf = assign_weights(g, {WeightScheme::IntegerUniform, 9}, i);
    for (std::uint64_t a : {std::uint64_t{0}, std::uint64_t{8}, kInfinityProxy}) {
      for (auto rule : {StableRule::Strict, StableRule::AnyAttack}) {
        for (auto k : kAllKinds) {
          if (rule == StableRule::AnyAttack && k != SemanticsKind::Stable) continue;
          compare(wf, SemanticsSpec::weighted(k, SemiringValue::cost(a), rule));
        }
      }
    }
    if (i % 4 == 0) {
      auto fz = assign_weights(g, {WeightScheme::FuzzyUniform, 0}, i);
      for (int a : {100, 50, 0}) {
        for (auto k : kAllKinds) compare(fz, SemanticsSpec::weighted(k, SemiringValue::hundredths(a)));
      }
    }
  }
  report(3, mismatches == 0,
         std::to_string(frameworks) + " frameworks, " + std::to_string(comparisons) + " comparisons, " +
             std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (first: " + first + ")"));
}

void criterion4() {
  oracle::Sampler s(4004, 8);
  struct Relation {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
  };
  std::vector<Relation> rel{{"classical stable<=semi-stable"}, {"classical semi-stable<=preferred"},
                            {"classical preferred<=complete"}, {"classical grounded<=complete"},
                            {"classical grounded inside every complete"},
                            {"alpha stable<=semi-stable"}, {"alpha semi-stable<=preferred"},
                            {"alpha preferred<=complete"}, {"alpha grounded<=complete"},
                            {"alpha grounded inside every complete"},
                            {"top: cf == classical cf"}, {"top: admissible <= classical"},
                            {"top: complete <= classical"}, {"top: stable == classical"},
                            {"top: grounded <= classical"}, {"top: preferred <= classical"}};
  auto tick = [&](std::size_t r, bool ok) {
    ++rel[r].checked;
    if (!ok) ++rel[r].violations;
  };
  for (std::size_t i = 0; i < 200; ++i) {
    auto g = s.graph(i);
    auto wf = assign_weights(g, {WeightScheme::IntegerUniform, 9}, i);
    auto by = [&](const Framework& f, std::size_t base, const std::function<SemanticsSpec(SemanticsKind)>& mk) {
      auto stab = enumerate_bruteforce(f, mk(SemanticsKind::Stable));
      auto semi = enumerate_bruteforce(f, mk(SemanticsKind::SemiStable));
      auto pref = enumerate_bruteforce(f, mk(SemanticsKind::Preferred));
      auto comp = enumerate_bruteforce(f, mk(SemanticsKind::Complete));
      auto ground = enumerate_bruteforce(f, mk(SemanticsKind::Grounded));
      tick(base + 0, stab.is_subset_of(semi));
      tick(base + 1, semi.is_subset_of(pref));
      tick(base + 2, pref.is_subset_of(comp));
      tick(base + 3, ground.is_subset_of(comp));
      bool in_all = true;
      for (const auto& gr : ground) {
        for (const auto& c : comp) in_all = in_all && gr.is_subset_of(c);
      }
      tick(base + 4, in_all);
    };
    by(g, 0, [](SemanticsKind k) { return SemanticsSpec::classical(k); });
    for (std::uint64_t a : {std::uint64_t{0}, std::uint64_t{8}, kInfinityProxy}) {
      by(wf, 5, [a](SemanticsKind k) { return SemanticsSpec::weighted(k, SemiringValue::cost(a)); });
    }
    auto top = [](SemanticsKind k) { return SemanticsSpec::weighted(k, SemiringValue::cost(0)); };
    auto cl = [](SemanticsKind k) { return SemanticsSpec::classical(k); };
    auto pair = [&](SemanticsKind k) {
      return std::make_pair(enumerate_bruteforce(wf, top(k)), enumerate_bruteforce(g, cl(k)));
    };
    auto [cf_w, cf_c] = pair(SemanticsKind::ConflictFree);
    tick(10, cf_w == cf_c);
    auto [ad_w, ad_c] = pair(SemanticsKind::Admissible);
    tick(11, ad_w.is_subset_of(ad_c));
    auto [co_w, co_c] = pair(SemanticsKind::Complete);
    tick(12, co_w.is_subset_of(co_c));
    auto [st_w, st_c] = pair(SemanticsKind::Stable);
    tick(13, st_w == st_c);
    auto [gr_w, gr_c] = pair(SemanticsKind::Grounded);
    tick(14, gr_w.is_subset_of(gr_c));
    auto [pr_w, pr_c] = pair(SemanticsKind::Preferred);
    tick(15, pr_w.is_subset_of(pr_c));
  }
  bool ok = true;
  std::ostringstream detail;
  for (const auto& r : rel) {
    ok = ok && r.violations == 0;
    detail << "\n    " << r.name << ": " << r.violations << " violations / " << r.checked;
  }
  report(4, ok, "200 frameworks, classical and alpha in {0, 8, " + std::to_string(kInfinityProxy) + "}" + detail.str());
}

void criterion5() {
  Tally t;
  std::size_t total = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++total;
    t.expect(ok, what);
  };
  auto f = oracle::figure_graph(true);
  expect(wge(f, 8) == sets(f, {{"a"}, {"a", "c"}}), "wge(8)");
  expect(wge(f, 8) == oracle::wge_by_subsets(f, 8), "wge(8) oracle");
  auto ac = minimal_budget(f, set_of(f, {"a", "c"}));
  expect(ac && ac->budget == 8, "minimal_budget({a,c})");
  auto acd = minimal_budget(f, set_of(f, {"a", "c", "d"}));
  expect(acd && acd->budget == 17, "minimal_budget({a,c,d})");
  expect(oracle::min_budget_by_subsets(f, set_of(f, {"a", "c", "d"})) == 17, "oracle minimal_budget({a,c,d})");
  expect(credulous(f, 8, *f.find("c")).value, "credulous(c,8)");
  expect(!skeptical(f, 8, *f.find("c")).value, "skeptical(c,8)");

  oracle::Sampler s(5005, 8);
  std::size_t samples = 0, bad_zero = 0, bad_mono = 0, bad_oracle = 0;
  for (std::size_t i = 0; i < 120; ++i) {
    auto w = s.weighted(i);
    if (w.attacks().size() > 14) continue;
    ++samples;
    ExtensionSet g{grounded_fixpoint(w.unweighted())};
    if (wge(w, 0) != g) ++bad_zero;
    ExtensionSet prev;
    for (Budget beta : {0, 3, 7, 12, 20}) {
      auto cur = wge(w, beta);
      if (!prev.is_subset_of(cur)) ++bad_mono;
      if (cur != oracle::wge_by_subsets(w, beta)) ++bad_oracle;
      prev = cur;
    }
  }
  expect(bad_zero == 0, "wge(0) = {grounded}: " + std::to_string(bad_zero));
  expect(bad_mono == 0, "monotone in beta: " + std::to_string(bad_mono));
  expect(bad_oracle == 0, "removal-subset oracle: " + std::to_string(bad_oracle));
  report(5, t.failed.empty(), t.summary(total) + " (" + std::to_string(samples) + " sampled frameworks)");
}

void criterion6() {
  double sum = 0;
  std::size_t complete = 0;
  std::ostringstream counts;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    KleinbergSpec k;
    k.side = 5;
    k.seed = seed;
    auto f = gen_kleinberg(k);
    EncodingRequest req{f, SemanticsSpec::classical(SemanticsKind::Stable), SearchConfig{}, {}, true};
    req.search.timeout_ms = kStableBenchTimeoutMs;
    auto start = Clock::now();
    auto r = enumerate(req);
    sum += ms_since(start);
    complete += r.outcome.complete ? 1 : 0;
    counts << (seed ? "," : "") << r.outcome.solutions.size();
  }
  double mean = sum / 10;
  report(6, complete == 10 && mean <= kStableBenchMeanMs,
         std::to_string(complete) + "/10 complete, mean " + std::to_string(mean) + " ms, stable counts " +
             counts.str());
}

void criterion7() {
  oracle::Sampler s(7007, 8);
  std::size_t decisions = 0, disagreements = 0;
  for (std::size_t i = 0; i < 60; ++i) {
    auto f = s.graph(i);
    auto pref = solve(f, SemanticsSpec::classical(SemanticsKind::Preferred));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
      auto t = Extension::from_mask(f.size(), m);
      ++decisions;
      if (is_preferred(f, t, {}) != pref.contains(t)) ++disagreements;
    }
  }
  double sum = 0;
  std::size_t timed = 0, wrong = 0;
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    KleinbergSpec k;
    k.side = 5;
    k.seed = seed;
    auto f = gen_kleinberg(k);
    auto pref = solve(f, SemanticsSpec::classical(SemanticsKind::Preferred));
    std::vector<Extension> candidates(pref.begin(), pref.end());
    candidates.push_back(grounded_fixpoint(f));
    candidates.push_back(Extension::from_mask(25, rng() & ((std::uint64_t{1} << 25) - 1)));
    for (const auto& t : candidates) {
      auto start = Clock::now();
      bool got = is_preferred(f, t, {});
      sum += ms_since(start);
      ++timed;
      if (got != pref.contains(t)) ++wrong;
    }
  }
  double mean = sum / static_cast<double>(timed);
  report(7, disagreements == 0 && wrong == 0 && mean <= kPreferredCheckMeanMs,
         std::to_string(decisions) + " small decisions, " + std::to_string(disagreements) + " disagreements; " +
             std::to_string(timed) + " decisions at 25 nodes, " + std::to_string(wrong) + " wrong, mean " +
             std::to_string(mean) + " ms");
}

void criterion8() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "argcsp_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const std::string& n) { return (dir / n).string(); };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  std::vector<std::vector<std::string>> cmds{
      {"generate", "--kind", "barabasi", "--nodes", "30", "--weights", "int:9", "--seed", "8", "--out", p("g.wdl")},
      {"generate", "--kind", "kleinberg", "--n", "5", "--seed", "8", "--out", p("k.dl")},
      {"generate", "--kind", "fig4", "--out", p("fig.wdl")},
      {"solve", p("k.dl"), "--semantics", "preferred", "--value-heuristic", "random", "--seed", "4", "--results",
       p("k.res"), "--dot", p("k.dot")},
      {"solve", p("g.wdl"), "--semantics", "alpha-complete", "--alpha", "8", "--results", p("g.res")},
      {"solve", p("k.dl"), "--check-preferred", "0,1"},
      {"decide", "credulous-wge", p("fig.wdl"), "--beta", "8", "--arg", "c"},
      {"decide", "minimal-budget", p("fig.wdl"), "--set", "a,c,d"},
      {"bench", "--kind", "kleinberg", "--sizes", "3,4", "--reps", "3", "--semantics", "stable,preferred", "--seed",
       "2", "--no-timing", "--out", p("bench.raw")},
  };
  const std::vector<std::string> files{"g.wdl", "k.dl", "fig.wdl", "k.res", "k.dot", "g.res", "bench.raw"};
  auto pass = [&] {
    std::string all;
    for (const auto& c : cmds) all += run(c);
    for (const auto& f : files) all += "--- " + f + "\n" + slurp(p(f));
    return all;
  };
  auto first = pass();
  for (const auto& f : files) fs::remove(p(f));
  auto second = pass();
  fs::remove_all(dir);
  report(8, first == second && !first.empty(),
         std::to_string(cmds.size()) + " commands, " + std::to_string(first.size()) + " bytes compared" +
             (first == second ? "" : ", outputs differ"));
}

struct AxiomCount {
  std::size_t triples = 0;
  std::size_t violations = 0;
};

void axioms(const SemiringInstance& s, const SemiringValue& a, const SemiringValue& b, const SemiringValue& c,
            AxiomCount& n) {
  ++n.triples;
  const auto zero = s.bottom();
  const auto one = s.top();
  bool ok = s.plus(a, b) == s.plus(b, a) && s.plus(s.plus(a, b), c) == s.plus(a, s.plus(b, c)) &&
            s.plus(a, a) == a && s.plus(a, zero) == a && s.plus(a, one) == one && s.times(a, b) == s.times(b, a) &&
            s.times(s.times(a, b), c) == s.times(a, s.times(b, c)) && s.times(a, one) == a &&
            s.times(a, zero) == zero && s.times(a, s.plus(b, c)) == s.plus(s.times(a, b), s.times(a, c)) &&
            s.leq(zero, a) && s.leq(a, one) && s.leq(s.times(a, b), a) &&
            (!(s.leq(a, b) && s.leq(b, a)) || a == b) && (!(s.leq(a, b) && s.leq(b, c)) || s.leq(a, c)) &&
            (!s.leq(a, b) || s.leq(s.times(a, c), s.times(b, c)));
  if (!ok) ++n.violations;
}

void criterion9() {
  std::ostringstream detail;
  bool ok = true;
  auto fuzzy = make_instance(SemiringKind::Fuzzy);
  auto prob = make_instance(SemiringKind::Probabilistic);
  auto boolean = make_instance(SemiringKind::Boolean);
  AxiomCount fz, pr, bo, wt;
  std::vector<SemiringValue> fv, pv;
  for (int h = 0; h <= 100; ++h) {
    fv.push_back(SemiringValue::hundredths(h));
    pv.push_back(SemiringValue::probability_hundredths(h));
  }
  for (const auto& a : fv) {
    for (const auto& b : fv) {
      for (const auto& c : fv) axioms(fuzzy, a, b, c, fz);
    }
  }
  for (const auto& a : pv) {
    for (const auto& b : pv) {
      for (const auto& c : pv) axioms(prob, a, b, c, pr);
    }
  }
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      for (bool c : {false, true}) {
        axioms(boolean, SemiringValue::boolean(a), SemiringValue::boolean(b), SemiringValue::boolean(c), bo);
      }
    }
  }
  auto weighted = make_instance(SemiringKind::Weighted);
  std::mt19937_64 rng(9009);
  auto draw = [&] {
    switch (rng() % 8) {
      case 0: return SemiringValue::infinite_cost();
      case 1: return SemiringValue::cost(0);
      case 2: return SemiringValue::cost(rng() % (std::uint64_t{1} << 40));
      default: return SemiringValue::cost(rng() % 100);
    }
  };
  for (std::size_t i = 0; i < kWeightedTriples; ++i) axioms(weighted, draw(), draw(), draw(), wt);
  for (auto [name, n] : {std::pair<const char*, AxiomCount*>{"fuzzy", &fz}, {"probabilistic", &pr},
                         {"boolean", &bo}, {"weighted", &wt}}) {
    ok = ok && n->violations == 0;
    detail << name << " " << n->violations << "/" << n->triples << " ";
  }
  report(9, ok, "violations per triples: " + detail.str());
}

}  // namespace

int main() {
  std::vector<std::function<void()>> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                          criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
