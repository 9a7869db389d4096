#include "argcsp/requirement_syntax.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace argcsp;

TEST_CASE("guarded requirement") {
  auto f = oracle::figure_graph(false);
  auto r = parse_requirement(f, "if a&!b then !c|!d");
  Cnf guard{{pos(0)}, {neg(1)}};
  Cnf cons{{neg(2), neg(3)}};
  CHECK(r.guard == guard);
  CHECK(r.consequence == cons);
}

TEST_CASE("bare requirement is unconditional") {
  auto f = oracle::figure_graph(false);
  auto r = parse_requirement(f, "a");
  CHECK(r.guard.empty());
  CHECK(r.consequence == Cnf{{pos(0)}});
}

TEST_CASE("or binds tighter than and; parentheses are allowed") {
  auto f = oracle::figure_graph(false);
  Cnf want{{pos(0), pos(1)}, {pos(2)}};
  CHECK(parse_requirement(f, "a|b&c").consequence == want);
  CHECK(parse_requirement(f, "(a | b) & (c)").consequence == want);
  CHECK(parse_requirement(f, "!!a").consequence == Cnf{{pos(0)}});
}

TEST_CASE("prohibition has a false consequence") {
  auto f = oracle::figure_graph(false);
  auto r = parse_prohibition(f, "a&c");
  CHECK(r.guard == Cnf{{pos(0)}, {pos(2)}});
  REQUIRE(r.consequence.size() == 1);
  CHECK(r.consequence.front().empty());
}

TEST_CASE("syntax errors") {
  auto f = oracle::figure_graph(false);
  for (const char* bad : {"", "if a", "if a then", "a&", "a|", "(a|b", "a b", "z", "a$b", "if then a", "!"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_requirement(f, bad), RequirementSyntaxError);
  }
  CHECK_THROWS_AS(parse_prohibition(f, "if a then b"), RequirementSyntaxError);
}
