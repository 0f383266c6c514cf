#include "gradres/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gradres;
using PF = PrimeField;

TEST_CASE("the truncated polynomial algebras have the expected shape") {
  PF f(2);
  const AlgebraPtr<PF> d2 = truncated_poly(f, 2);
  const AlgebraPtr<PF> d3 = truncated_poly(f, 3);
  REQUIRE(d2->dim() == 2);
  REQUIRE(d3->dim() == 3);
  REQUIRE(d3->degree(2) == MonoidElt{2});
  const Vec<PF> x2 = d3->mul(unit_vec(f, 3, 1), unit_vec(f, 3, 1));
  REQUIRE(x2 == unit_vec(f, 3, 2));
  REQUIRE(d3->mul(x2, unit_vec(f, 3, 1)) == zero_vec(f, 3));
}

TEST_CASE("the two-vertex algebra has the expected simples") {
  PF f(2);
  const AlgebraPtr<PF> a2 = two_vertex_arrow(f);
  REQUIRE(a2->dim() == 3);
  const Module<PF> s1 = simple_at(a2, 0);
  const Module<PF> s2 = simple_at(a2, 1);
  REQUIRE(s1.dim() == 1);
  REQUIRE(s2.dim() == 1);
  REQUIRE(s1.is_graded());
  const auto res = minimal_resolution(s1, 3, true);
  REQUIRE(res.dims() == std::vector<std::size_t>{2, 1, 0, 0});
  REQUIRE(minimal_resolution(s2, 3, true).dims() ==
          std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("the skew plane matches its defining relation") {
  PF f(5);
  auto s = skew_plane(f, f.from_int(2));
  REQUIRE(s.product->dim() == 4);
  const Vec<PF> yx = s.product->mul(col(s.embed_b, 1), col(s.embed_a, 1));
  Vec<PF> expect = zero_vec(f, 4);
  expect[s.index(1, 1)] = f.from_int(2);
  REQUIRE(yx == expect);
}

TEST_CASE("submodule enumeration over F2 finds the known lattices") {
  PF f(2);
  const auto subs_d2 = all_submodule_bases(regular_module(truncated_poly(f, 2)));
  REQUIRE(subs_d2.size() == 3);
  const auto subs_d3 = all_submodule_bases(regular_module(truncated_poly(f, 3)));
  REQUIRE(subs_d3.size() == 4);
  for (const auto& b : subs_d3)
    REQUIRE(is_submodule(regular_module(truncated_poly(f, 3)), b));
  REQUIRE_THROWS_AS(all_submodule_bases(regular_module(truncated_poly(PF(3), 2))),
                    capability_error);
}

TEST_CASE("permuting the basis transports every attached structure") {
  PF f(2);
  const AlgebraPtr<PF> d3 = truncated_poly(f, 3);
  const auto sigma = reversed_perm(3);
  const AlgebraPtr<PF> rev = permute_algebra(*d3, sigma);
  REQUIRE(rev->labels()[0] == d3->labels()[2]);
  REQUIRE(rev->degree(0) == MonoidElt{2});
  REQUIRE(rev->known_radical().has_value());
  REQUIRE(rank(f, *rev->known_radical()) == 2);
  // x now sits at index 1; its square at index 0
  REQUIRE(rev->mul(unit_vec(f, 3, 1), unit_vec(f, 3, 1)) == unit_vec(f, 3, 0));

  const AlgebraPtr<PF> back = permute_algebra(*rev, inverse_perm(sigma));
  REQUIRE(same_structure(*back, *d3));

  const Module<PF> reg = regular_module(d3);
  const Module<PF> moved = permute_module(reg, rev, sigma, reversed_perm(3));
  REQUIRE(moved.is_graded());
  REQUIRE(top_of(moved).dim() == 1);
  REQUIRE(minimal_resolution(top_of(moved), 3, true).dims() ==
          minimal_resolution(top_of(reg), 3, true).dims());

  REQUIRE_THROWS_AS(permute_algebra(*d3, {0, 0, 1}), input_error);
}

TEST_CASE("random modules land in range and random submodules are closed") {
  PF f(2);
  const AlgebraPtr<PF> a2 = two_vertex_arrow(f);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Module<PF> m = random_module(a2, rng, 4, false);
    REQUIRE(m.dim() >= 1);
    REQUIRE(m.dim() <= 4);
    REQUIRE(!m.is_graded());
    const Matrix<PF> sub = random_submodule(m, rng);
    REQUIRE(is_submodule(m, sub));
  }
  for (int t = 0; t < 10; ++t) {
    const Module<PF> m = random_module(a2, rng, 6, true);
    REQUIRE(m.is_graded());
    REQUIRE(m.dim() >= 1);
    REQUIRE(m.dim() <= 6);
  }
}

TEST_CASE("random superfluous submodules pass both predicates") {
  PF f(2);
  const AlgebraPtr<PF> d3 = truncated_poly(f, 3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const Module<PF> m = random_module(d3, rng, 4, false);
    const Matrix<PF> n = random_superfluous_submodule(m, rng);
    REQUIRE(is_superfluous(m, n));
    if (m.dim() <= 5) REQUIRE(is_superfluous_bruteforce(m, n));
  }
}

TEST_CASE("random maps intertwine the actions") {
  PF f(2);
  const AlgebraPtr<PF> a2 = two_vertex_arrow(f);
  std::mt19937_64 rng(13);
  const Module<PF> m = random_module(a2, rng, 4, false);
  const Module<PF> n = random_module(a2, rng, 4, false);
  for (int t = 0; t < 5; ++t) {
    const ModuleMap<PF> phi = random_map(m, n, rng);
    for (std::size_t i = 0; i < a2->dim(); ++i)
      REQUIRE(mat_mul(f, phi.matrix, m.action(i)) ==
              mat_mul(f, n.action(i), phi.matrix));
  }
}

TEST_CASE("the random stream is reproducible across runs") {
  PF f(2);
  const AlgebraPtr<PF> a2 = two_vertex_arrow(f);
  std::mt19937_64 r1(42), r2(42);
  const Module<PF> m1 = random_module(a2, r1, 4, false);
  const Module<PF> m2 = random_module(a2, r2, 4, false);
  REQUIRE(same_module_presentation(m1, m2));
}
