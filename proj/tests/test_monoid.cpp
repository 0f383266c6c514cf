#include <catch2/catch_amalgamated.hpp>

#include "gradres/monoid.hpp"

using namespace gradres;

TEST_CASE("natural numbers pass every order axiom") {
  auto g = GradedMonoid::natural();
  auto rep = g.validate();
  REQUIRE(rep.is_ordered);
  REQUIRE(rep.e_is_least);
  REQUIRE(rep.well_founded);
  REQUIRE(rep.violations.empty());
  REQUIRE(g.op({2}, {3}) == MonoidElt{5});
  REQUIRE(g.is_identity(g.identity()));
  REQUIRE(g.lt({0}, {4}));
  REQUIRE(!g.lt({4}, {4}));
}

TEST_CASE("one-element table monoid passes") {
  auto g = GradedMonoid::table({"e"}, 0, {{0}});
  auto rep = g.validate();
  REQUIRE(rep.all());
  REQUIRE(rep.violations.empty());
}

TEST_CASE("two-element band with e<g fails translation") {
  // g*g = g, so e<g forces g<g under right translation by g
  auto g = GradedMonoid::table({"e", "g"}, 0, {{0, 1}, {1, 1}}, {{0, 1}});
  auto rep = g.validate();
  REQUIRE(!rep.is_ordered);
  REQUIRE(rep.e_is_least);
  REQUIRE(rep.well_founded);
  REQUIRE(!rep.violations.empty());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == "translation" && v.a == MonoidElt{0} && v.b == MonoidElt{1} &&
        v.c == MonoidElt{1})
      found = true;
  REQUIRE(found);
}

TEST_CASE("left divisors in the naturals") {
  auto g = GradedMonoid::natural();
  REQUIRE(g.left_divisors({5}, {2}) == std::vector<MonoidElt>{{3}});
  REQUIRE(g.left_divisors({1}, {2}).empty());
}

TEST_CASE("left divisors in a table agree with a brute-force scan") {
  auto g = GradedMonoid::table({"e", "g"}, 0, {{0, 1}, {1, 1}});
  auto divs = g.left_divisors({1}, {1});
  REQUIRE(divs == std::vector<MonoidElt>{{0}, {1}});
  for (const auto& gamma : g.elements())
    for (const auto& beta : g.elements()) {
      std::vector<MonoidElt> expect;
      for (const auto& alpha : g.elements())
        if (g.op(alpha, beta) == gamma) expect.push_back(alpha);
      REQUIRE(g.left_divisors(gamma, beta) == expect);
    }
}

TEST_CASE("componentwise order on N^2") {
  auto g = GradedMonoid::natural_power(2);
  auto rep = g.validate();
  REQUIRE(rep.all());
  REQUIRE(g.lt({0, 1}, {1, 1}));
  REQUIRE(!g.lt({1, 0}, {0, 1}));
  REQUIRE(!g.lt({0, 1}, {1, 0}));
  REQUIRE(g.left_divisors({2, 3}, {1, 1}) == std::vector<MonoidElt>{{1, 2}});
  REQUIRE(g.left_divisors({0, 3}, {1, 1}).empty());
}

TEST_CASE("order-free N^2 is admitted but e is not least") {
  auto g = GradedMonoid::natural_power(2, PowerOrder::none);
  auto rep = g.validate();
  REQUIRE(rep.is_ordered);
  REQUIRE(rep.well_founded);
  REQUIRE(!rep.e_is_least);
  REQUIRE(!rep.violations.empty());
  REQUIRE(!g.lt({0, 0}, {1, 0}));
}

TEST_CASE("translation property on sampled ordered pairs") {
  auto n1 = GradedMonoid::natural();
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = a + 1; b < 6; ++b)
      for (std::int64_t c = 0; c < 5; ++c) {
        REQUIRE(n1.lt(n1.op({a}, {c}), n1.op({b}, {c})));
        REQUIRE(n1.lt(n1.op({c}, {a}), n1.op({c}, {b})));
      }
  auto n2 = GradedMonoid::natural_power(2);
  std::vector<MonoidElt> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}};
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (!n2.lt(a, b)) continue;
      for (const auto& c : pts) {
        REQUIRE(n2.lt(n2.op(a, c), n2.op(b, c)));
        REQUIRE(n2.lt(n2.op(c, a), n2.op(c, b)));
      }
    }
}

TEST_CASE("malformed tables are rejected") {
  // identity law broken: e*g = e
  REQUIRE_THROWS_AS(GradedMonoid::table({"e", "g"}, 0, {{0, 0}, {1, 1}}), input_error);
  // non-associative: (ab)c != a(bc) for the right-projection-with-twist table
  REQUIRE_THROWS_AS(
      GradedMonoid::table({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}}),
      input_error);
  REQUIRE_THROWS_AS(GradedMonoid::table({}, 0, {}), input_error);
}

TEST_CASE("non-transitive declared order is flagged not well-founded") {
  // C2 = {e,g}: order e<g, g<e is a 2-cycle, hence not a strict partial order
  auto g = GradedMonoid::table({"e", "g"}, 0, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
  auto rep = g.validate();
  REQUIRE(!rep.well_founded);
}

TEST_CASE("key ordering is a linear extension of the componentwise order") {
  auto g = GradedMonoid::natural_power(2);
  std::vector<MonoidElt> pts = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (const auto& a : pts)
    for (const auto& b : pts)
      if (g.lt(a, b)) REQUIRE(g.key_less(a, b));
}
