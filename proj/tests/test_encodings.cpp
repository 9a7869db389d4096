#include "argcsp/encodings.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace argcsp;
using oracle::set_of;

namespace {

const std::vector<SemanticsKind> kAllKinds{
    SemanticsKind::ConflictFree, SemanticsKind::Admissible, SemanticsKind::Complete,
    SemanticsKind::Stable,       SemanticsKind::Preferred,  SemanticsKind::Grounded,
    SemanticsKind::SemiStable,   SemanticsKind::Stage,      SemanticsKind::Ideal};

EnumerateOutcome run(const Framework& f, const SemanticsSpec& spec, std::vector<UserRequirement> reqs = {}) {
  EncodingRequest req{f, spec, SearchConfig{}, std::move(reqs), true};
  return enumerate(req);
}

ExtensionSet sets(const Framework& f, std::initializer_list<std::initializer_list<const char*>> items) {
  ExtensionSet out;
  for (auto it : items) out.insert(set_of(f, it));
  return out;
}

}  // namespace

TEST_CASE("classical model shapes") {
  auto f = oracle::figure_graph(false);
  auto cf = encode(f, SemanticsSpec::classical(SemanticsKind::ConflictFree));
  CHECK(cf.nogoods().size() == 6);
  CHECK(cf.requirements().empty());
  CHECK(solve_all(cf, {}).solutions.size() == 8);
  auto comp = encode(f, SemanticsSpec::classical(SemanticsKind::Complete));
  // a is unattacked and demanded outright; b has an unanswerable attacker and gets none.
  CHECK(comp.requirements().size() == 4);
  CHECK_THROWS_AS(encode(f, SemanticsSpec::classical(SemanticsKind::Preferred)), EncodingError);
}

TEST_CASE("classical enumeration on the example graph") {
  auto f = oracle::figure_graph(false);
  auto cl = [](SemanticsKind k) { return SemanticsSpec::classical(k); };
  CHECK(run(f, cl(SemanticsKind::Stable)).outcome.solutions == sets(f, {{"a", "d"}}));
  CHECK(run(f, cl(SemanticsKind::Admissible)).outcome.solutions ==
        sets(f, {{}, {"a"}, {"c"}, {"d"}, {"a", "c"}, {"a", "d"}}));
  CHECK(run(f, cl(SemanticsKind::Grounded)).outcome.solutions == sets(f, {{"a"}}));
  CHECK(run(f, cl(SemanticsKind::SemiStable)).outcome.solutions == sets(f, {{"a", "d"}}));
  CHECK(run(f, cl(SemanticsKind::Ideal)).outcome.solutions == sets(f, {{"a"}}));
  for (auto k : kAllKinds) {
    auto r = run(f, cl(k));
    CHECK(r.rejected == 0);
    CHECK(r.outcome.solutions == enumerate_bruteforce(f, cl(k)));
  }
}

TEST_CASE("weighted enumeration on the example graph") {
  auto f = oracle::figure_graph(true);
  auto w = [](SemanticsKind k, std::uint64_t a) { return SemanticsSpec::weighted(k, SemiringValue::cost(a)); };
  CHECK(run(f, w(SemanticsKind::Admissible, 15)).outcome.solutions ==
        sets(f, {{}, {"c"}, {"c", "e"}, {"a"}, {"a", "c"}, {"a", "c", "e"}, {"a", "b", "c"}}));
  CHECK(run(f, w(SemanticsKind::Admissible, 0)).outcome.solutions == sets(f, {{}, {"a"}, {"c"}, {"a", "c"}}));
  for (std::uint64_t a : {0, 4, 8, 11, 15, 40}) {
    for (auto rule : {StableRule::Strict, StableRule::AnyAttack}) {
      for (auto k : kAllKinds) {
        auto spec = SemanticsSpec::weighted(k, SemiringValue::cost(a), rule);
        auto r = run(f, spec);
        CHECK(r.rejected == 0);
        CHECK(r.outcome.solutions == enumerate_bruteforce(f, spec));
      }
    }
  }
}

TEST_CASE("inclusion filters") {
  auto f = oracle::figure_graph(false);
  auto in = sets(f, {{"a"}, {"a", "c"}, {"a", "d"}});
  CHECK(filter_extremal(in, Direction::Max) == sets(f, {{"a", "c"}, {"a", "d"}}));
  CHECK(filter_extremal(in, Direction::Min) == sets(f, {{"a"}}));
  auto one = sets(f, {{"b"}});
  CHECK(filter_extremal(one, Direction::Max) == one);
  auto spec = SemanticsSpec::classical(SemanticsKind::SemiStable);
  CHECK(filter_extremal(in, Direction::Max, ExtremalKey::Range, &f, &spec) == sets(f, {{"a", "d"}}));
  CHECK_THROWS_AS(filter_extremal(in, Direction::Max, ExtremalKey::Range), EncodingError);
}

TEST_CASE("filter output is an antichain") {
  oracle::Sampler s(19);
  for (int i = 0; i < 30; ++i) {
    auto f = s.random_graph(7, 0.2);
    auto cf = run(f, SemanticsSpec::classical(SemanticsKind::ConflictFree)).outcome.solutions;
    for (auto dir : {Direction::Max, Direction::Min}) {
      auto out = filter_extremal(cf, dir);
      for (const auto& x : out) {
        for (const auto& y : out) CHECK_FALSE(x.is_strict_subset_of(y));
      }
    }
  }
}

TEST_CASE("preferred check on the example graph") {
  auto f = oracle::figure_graph(false);
  CHECK(is_preferred(f, set_of(f, {"a", "c"}), {}));
  CHECK(is_preferred(f, set_of(f, {"a", "d"}), {}));
  CHECK_FALSE(is_preferred(f, set_of(f, {"a"}), {}));
  CHECK_FALSE(is_preferred(f, set_of(f, {"a", "b"}), {}));
  CHECK_THROWS_AS(is_preferred(oracle::figure_graph(true), Extension(5), {}), EncodingError);
  Framework lone(1, {});
  CHECK(is_preferred(lone, Extension::full(1), {}));
}

TEST_CASE("preferred check agrees with enumeration") {
  oracle::Sampler s(23);
  for (int i = 0; i < 40; ++i) {
    auto f = i % 2 ? s.graph(i) : s.random_graph(6, 0.3);
    auto pref = run(f, SemanticsSpec::classical(SemanticsKind::Preferred)).outcome.solutions;
    for (std::uint64_t m = 0; m < (1U << f.size()); ++m) {
      auto t = Extension::from_mask(f.size(), m);
      CHECK(is_preferred(f, t, {}) == pref.contains(t));
    }
  }
}

TEST_CASE("user requirements shrink the solution set") {
  auto f = oracle::figure_graph(false);
  auto cf = SemanticsSpec::classical(SemanticsKind::ConflictFree);
  UserRequirement b_then_a{{{pos(1)}}, {{pos(0)}}};
  auto got = run(f, cf, {b_then_a}).outcome.solutions;
  CHECK(got.size() == 6);
  CHECK_FALSE(got.contains(set_of(f, {"b"})));
  CHECK_FALSE(got.contains(set_of(f, {"b", "d"})));
  CHECK(run(f, cf, {}).outcome.solutions.size() == 8);

  Model m = encode(f, cf);
  Model same = apply_user_requirements(m, {});
  CHECK(same.requirements().size() == m.requirements().size());
  CHECK_THROWS_AS(apply_user_requirements(m, {UserRequirement{{}, {{pos(9)}}}}), EncodingError);
}

TEST_CASE("four-argument requirement matches direct evaluation") {
  Framework f(4, {}, {"a", "b", "c", "d"});
  // Containing a but not b rules out containing both c and d.
  UserRequirement r{{{pos(0)}, {neg(1)}}, {{neg(2), neg(3)}}};
  auto got = run(f, SemanticsSpec::classical(SemanticsKind::ConflictFree), {r}).outcome.solutions;
  ExtensionSet want;
  for (std::uint64_t m = 0; m < 16; ++m) {
    bool a = m & 1, b = m & 2, c = m & 4, d = m & 8;
    if (!(a && !b) || !(c && d)) want.insert(Extension::from_mask(4, m));
  }
  CHECK(got == want);
}

TEST_CASE("weighted defense refuses very high in-degree") {
  std::vector<Attack> at;
  std::vector<SemiringValue> w;
  for (ArgumentId i = 2; i < 2 + kMaxWeightedInDegree + 1; ++i) {
    at.push_back({i, 0});
    w.push_back(SemiringValue::cost(1));
  }
  at.push_back({0, 1});
  w.push_back(SemiringValue::cost(1));
  auto f = Framework::weighted(kMaxWeightedInDegree + 3, at, w, make_instance(SemiringKind::Weighted));
  CHECK_THROWS_AS(encode(f, SemanticsSpec::weighted(SemanticsKind::Admissible, SemiringValue::cost(1))), EncodingError);
  CHECK_NOTHROW(encode(f, SemanticsSpec::weighted(SemanticsKind::ConflictFree, SemiringValue::cost(1))));
}

TEST_CASE("extremal kinds honour the solution cap") {
  auto f = oracle::figure_graph(false);
  EncodingRequest req{f, SemanticsSpec::classical(SemanticsKind::Preferred), SearchConfig{}, {}, true};
  req.search.solution_cap = 1;
  auto r = enumerate(req);
  CHECK(r.outcome.solutions.size() == 1);
  CHECK_FALSE(r.outcome.complete);
}
