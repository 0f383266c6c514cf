#include <catch2/catch_amalgamated.hpp>

#include "gradres/matrix.hpp"

#include <random>

using namespace gradres;

namespace {

template <FieldLike F>
Matrix<F> make(const F& f, std::size_t r, std::size_t c,
               std::initializer_list<int> entries) {
  Matrix<F> m(r, c);
  auto it = entries.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(*it++);
  return m;
}

}  // namespace

TEST_CASE("rref of the all-ones 2x2 over F2") {
  PrimeField f(2);
  auto m = make(f, 2, 2, {1, 1, 1, 1});
  auto rr = rref(f, m);
  REQUIRE(rr.rank == 1);
  REQUIRE(rr.pivots == std::vector<std::size_t>{0});
  REQUIRE(rr.reduced == make(f, 2, 2, {1, 1, 0, 0}));
}

TEST_CASE("rref is idempotent") {
  PrimeField f(5);
  auto m = make(f, 3, 4, {1, 2, 3, 4, 2, 4, 1, 0, 0, 0, 3, 1});
  auto once = rref(f, m);
  auto twice = rref(f, once.reduced);
  REQUIRE(once.reduced == twice.reduced);
  REQUIRE(once.pivots == twice.pivots);
}

TEST_CASE("nullspace of [1 1] over F2 is spanned by (1,1)") {
  PrimeField f(2);
  auto m = make(f, 1, 2, {1, 1});
  auto ns = nullspace(f, m);
  REQUIRE(ns.cols() == 1);
  REQUIRE(col(ns, 0) == Vec<PrimeField>{f.one(), f.one()});
  // exhaustive check over F2^2: the kernel is exactly {0, (1,1)}
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Vec<PrimeField> v{f.from_int(a), f.from_int(b)};
      bool in_kernel = is_zero_vec(f, mat_vec(f, m, v));
      REQUIRE(in_kernel == (a == b));
    }
}

TEST_CASE("solve returns the zero-free-variable witness") {
  PrimeField f(2);
  auto m = make(f, 2, 2, {1, 1, 0, 0});
  Vec<PrimeField> b{f.one(), f.zero()};
  auto x = solve(f, m, b);
  REQUIRE(x.has_value());
  REQUIRE(*x == Vec<PrimeField>{f.one(), f.zero()});

  Vec<PrimeField> bad{f.zero(), f.one()};
  REQUIRE(!solve(f, m, bad).has_value());
}

TEST_CASE("kron of a row by a column") {
  PrimeField f(2);
  auto a = make(f, 1, 2, {1, 1});
  auto b = make(f, 2, 1, {1, 1});
  REQUIRE(kron(f, a, b) == make(f, 2, 2, {1, 1, 1, 1}));
}

TEST_CASE("rank-nullity over random F2 matrices") {
  PrimeField f(2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    Matrix<PrimeField> m(r, c);
    for (auto& x : m.data()) x = f.from_int(int(rng() % 2));
    auto rr = rref(f, m);
    auto ns = nullspace(f, m);
    REQUIRE(rr.rank + ns.cols() == c);
    for (std::size_t j = 0; j < ns.cols(); ++j)
      REQUIRE(is_zero_vec(f, mat_vec(f, m, col(ns, j))));
  }
}

TEST_CASE("solve succeeds on vectors in the image and reproduces them") {
  PrimeField f(3);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix<PrimeField> m(r, c);
    for (auto& x : m.data()) x = f.from_int(int(rng() % 3));
    Vec<PrimeField> x0(c);
    for (auto& v : x0) v = f.from_int(int(rng() % 3));
    auto b = mat_vec(f, m, x0);
    auto x1 = solve(f, m, b);
    REQUIRE(x1.has_value());
    REQUIRE(mat_vec(f, m, *x1) == b);
  }
}

TEST_CASE("matrix arithmetic over the rationals") {
  RationalField q;
  auto half = q.parse("1/2");
  auto third = q.parse("1/3");
  Matrix<RationalField> a(1, 1), b(1, 1);
  a(0, 0) = half;
  b(0, 0) = third;
  REQUIRE(mat_mul(q, a, b)(0, 0) == q.parse("1/6"));
  REQUIRE(mat_add(q, a, b)(0, 0) == q.parse("5/6"));
  auto inv = inverse(q, a);
  REQUIRE(inv.has_value());
  REQUIRE((*inv)(0, 0) == q.from_int(2));
}

TEST_CASE("span utilities") {
  PrimeField f(2);
  // span{(1,1)} inside span{(1,0),(0,1)}
  auto sub = make(f, 2, 1, {1, 1});
  auto full = identity(f, 2);
  REQUIRE(span_leq(f, sub, full));
  REQUIRE(!span_leq(f, full, sub));
  REQUIRE(span_eq(f, full, span_sum(f, sub, make(f, 2, 1, {1, 0}))));

  auto meet = span_intersect(f, sub, make(f, 2, 1, {1, 0}));
  REQUIRE(meet.cols() == 0);
  auto self = span_intersect(f, sub, sub);
  REQUIRE(span_eq(f, self, sub));

  // canonical form: two different spanning sets of the same plane agree
  auto s1 = make(f, 3, 2, {1, 0, 1, 1, 0, 1});
  auto s2 = make(f, 3, 2, {0, 1, 1, 0, 1, 1});
  REQUIRE(col_span_basis(f, s1) == col_span_basis(f, s2));
}

TEST_CASE("solve_all and inverse") {
  PrimeField f(7);
  auto m = make(f, 2, 2, {1, 2, 3, 4});
  auto mi = inverse(f, m);
  REQUIRE(mi.has_value());
  REQUIRE(mat_mul(f, m, *mi) == identity(f, 2));
  REQUIRE(mat_mul(f, *mi, m) == identity(f, 2));

  auto singular = make(f, 2, 2, {1, 2, 2, 4});
  REQUIRE(!inverse(f, singular).has_value());
}

TEST_CASE("prime field arithmetic basics") {
  PrimeField f(5);
  REQUIRE(f.characteristic() == 5);
  REQUIRE(f.mul(f.from_int(3), f.from_int(4)) == f.from_int(2));
  REQUIRE(f.inv(f.from_int(2)) == f.from_int(3));
  REQUIRE(f.from_int(-1) == f.from_int(4));
  REQUIRE_THROWS_AS(PrimeField(4), input_error);
  REQUIRE_THROWS_AS(PrimeField(1), input_error);
  REQUIRE_THROWS_AS(f.inv(f.zero()), input_error);
}
