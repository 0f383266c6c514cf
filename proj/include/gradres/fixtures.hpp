#pragma once

// Shared example builders for tests and the verification suites: small
// algebras and their simples, basis-permutation transport (for determinism
// checks), seeded random modules/submodules/maps, and exhaustive submodule
// enumeration over F_2 for oracle cross-checks.

#include "gradres/homology.hpp"
#include "gradres/quiver.hpp"
#include "gradres/smash.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gradres {

// ---------------------------------------------------------------------------
// Standard small algebras
// ---------------------------------------------------------------------------

/// k[x]/(x^n) for n >= 2, graded by exponent.
template <FieldLike F>
AlgebraPtr<F> truncated_poly(const F& f, std::size_t n) {
  QuiverPresentation q;
  q.vertices = 1;
  q.arrows = {{0, 0, "x"}};
  QuiverPresentation::Relation rel;
  rel.paths = {std::vector<std::size_t>(n, 0)};
  rel.coeffs = {"1"};
  q.relations.push_back(std::move(rel));
  return share(path_algebra(f, q));
}

/// The path algebra of two vertices joined by one arrow, graded by length.
template <FieldLike F>
AlgebraPtr<F> two_vertex_arrow(const F& f) {
  QuiverPresentation q;
  q.vertices = 2;
  q.arrows = {{0, 1, "a"}};
  return share(path_algebra(f, q));
}

/// The semisimple quotient of a module by its radical (graded if m is).
template <FieldLike F>
Module<F> top_of(const Module<F>& m) {
  return quotient_module(m, radical_submodule(m)).quotient;
}

/// The simple module attached to the v-th listed idempotent: the top of its
/// projective cover A.e_v inside the regular module.
template <FieldLike F>
Module<F> simple_at(const AlgebraPtr<F>& a, std::size_t v) {
  if (!a->has_idempotents() || v >= a->idempotents().size())
    throw input_error("simple_at: no such idempotent");
  const Module<F> reg = regular_module(a);
  const Matrix<F> span = col_span_basis(a->field(), a->right_mult(a->idempotents()[v]));
  return top_of(submodule_as_module(reg, span).first);
}

/// The square-zero skew plane over f: x^2 = y^2 = 0 and y.x = lambda x.y,
/// built as the twisted product of f[x]/(x^2) (graded by exponent) with
/// f[y]/(y^2) acted on in degree n by y -> lambda^n y.
template <FieldLike F>
SmashAlgebra<F> skew_plane(const F& f, typename F::Element lambda) {
  QuiverPresentation qx;
  qx.vertices = 1;
  qx.arrows = {{0, 0, "x"}};
  qx.relations.push_back({{{0, 0}}, {"1"}});
  auto a = share(path_algebra(f, qx));
  QuiverPresentation qy = qx;
  qy.arrows[0].label = "y";
  auto b = path_algebra(f, qy);
  Matrix<F> sig(2, 2);
  sig(0, 0) = f.one();
  sig(1, 1) = lambda;
  GammaAlgebra<F> g(std::move(b), a->grading().monoid, {sig});
  return smash(a, std::move(g));
}

// ---------------------------------------------------------------------------
// Basis permutations
// ---------------------------------------------------------------------------

inline std::vector<std::size_t> reversed_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

inline std::vector<std::size_t> inverse_perm(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
  return inv;
}

/// The change-of-coordinates matrix of a relabelling: new basis element i is
/// old element sigma[i], so (P v)[i] = v[sigma[i]].
template <FieldLike F>
Matrix<F> perm_matrix(const F& f, const std::vector<std::size_t>& sigma) {
  Matrix<F> p(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) p(i, sigma[i]) = f.one();
  return p;
}

namespace detail {
inline void check_perm(const std::vector<std::size_t>& sigma, std::size_t n) {
  if (sigma.size() != n) throw input_error("permutation: wrong length");
  std::vector<bool> seen(n, false);
  for (auto s : sigma) {
    if (s >= n || seen[s]) throw input_error("permutation: not a bijection");
    seen[s] = true;
  }
}
}  // namespace detail

/// The same algebra presented on the reordered basis, with every piece of
/// attached data (grading, idempotents, cached radical) transported along.
template <FieldLike F>
AlgebraPtr<F> permute_algebra(const GradedAlgebra<F>& a,
                              const std::vector<std::size_t>& sigma) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  detail::check_perm(sigma, n);
  const Matrix<F> p = perm_matrix(f, sigma);

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = a.labels()[sigma[i]];
  std::vector<std::vector<Vec<F>>> sc(n, std::vector<Vec<F>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sc[i][j] = mat_vec(f, p, a.sc(sigma[i], sigma[j]));
  std::optional<AlgebraGrading> grading;
  if (a.is_graded()) {
    AlgebraGrading g{a.grading().monoid, {}};
    for (std::size_t i = 0; i < n; ++i) g.degrees.push_back(a.degree(sigma[i]));
    grading = std::move(g);
  }
  std::vector<Vec<F>> idems;
  if (a.has_idempotents())
    for (const auto& e : a.idempotents()) idems.push_back(mat_vec(f, p, e));

  GradedAlgebra<F> out(f, std::move(labels), mat_vec(f, p, a.unit()), std::move(sc),
                       std::move(grading), std::move(idems));
  if (a.known_radical()) out.set_known_radical(mat_mul(f, p, *a.known_radical()));
  return share(std::move(out));
}

/// The same module over the permuted algebra, on its own reordered basis.
template <FieldLike F>
Module<F> permute_module(const Module<F>& m, const AlgebraPtr<F>& permuted,
                         const std::vector<std::size_t>& sigma_alg,
                         const std::vector<std::size_t>& tau) {
  const auto& f = m.field();
  detail::check_perm(sigma_alg, m.algebra().dim());
  detail::check_perm(tau, m.dim());
  const Matrix<F> q = perm_matrix(f, tau);
  const Matrix<F> qinv = transpose(q);
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    action.push_back(mat_mul(f, q, mat_mul(f, m.action(sigma_alg[i]), qinv)));
  std::optional<std::vector<MonoidElt>> degrees;
  if (m.is_graded()) {
    degrees.emplace();
    for (std::size_t i = 0; i < m.dim(); ++i) degrees->push_back(m.degrees()[tau[i]]);
  }
  return Module<F>(permuted, std::move(action), std::move(degrees));
}

// ---------------------------------------------------------------------------
// Submodule closure and exhaustive enumeration
// ---------------------------------------------------------------------------

/// The smallest submodule containing the given columns.
template <FieldLike F>
Matrix<F> submodule_closure(const Module<F>& m, const Matrix<F>& seed) {
  const auto& f = m.field();
  Matrix<F> span = col_span_basis(f, seed);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
      Matrix<F> bigger = span_sum(f, span, mat_mul(f, m.action(i), span));
      if (bigger.cols() > span.cols()) {
        span = std::move(bigger);
        grew = true;
      }
    }
  }
  return span;
}

/// Every submodule of m, as a canonical basis matrix each. Exhaustive, so
/// restricted to the same range as the brute-force superfluousness oracle.
template <FieldLike F>
std::vector<Matrix<F>> all_submodule_bases(const Module<F>& m) {
  const auto& f = m.field();
  if (f.characteristic() != 2)
    throw capability_error("all_submodule_bases: only over F_2");
  if (m.dim() > 5) throw capability_error("all_submodule_bases: dim must be <= 5");
  std::vector<Matrix<F>> out;
  for (const auto mask : detail::all_submodules_f2(m)) {
    std::vector<Vec<F>> pts;
    for (std::uint32_t u = 1; u < (std::uint32_t(1) << m.dim()); ++u) {
      if (!(mask >> u & 1)) continue;
      Vec<F> v = zero_vec(f, m.dim());
      for (std::size_t r = 0; r < m.dim(); ++r)
        if (u >> r & 1) v[r] = f.one();
      pts.push_back(std::move(v));
    }
    out.push_back(col_span_basis(f, from_cols<F>(m.dim(), pts)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Seeded random instances (mt19937_64 keeps the stream portable)
// ---------------------------------------------------------------------------

inline std::size_t random_below(std::mt19937_64& rng, std::size_t n) {
  return n == 0 ? 0 : std::size_t(rng() % n);
}

template <FieldLike F>
typename F::Element random_scalar(const F& f, std::mt19937_64& rng) {
  return f.from_int(std::int64_t(rng() % 251));
}

template <FieldLike F>
Vec<F> random_vec(const F& f, std::mt19937_64& rng, std::size_t dim) {
  Vec<F> v = zero_vec(f, dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_scalar(f, rng);
  return v;
}

/// A random vector supported on one degree class of a graded module.
template <FieldLike F>
Vec<F> random_homogeneous_vec(const Module<F>& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  std::vector<MonoidElt> classes;
  for (const auto& d : m.degrees())
    if (std::find(classes.begin(), classes.end(), d) == classes.end())
      classes.push_back(d);
  const MonoidElt pick = classes[random_below(rng, classes.size())];
  Vec<F> v = zero_vec(f, m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.degrees()[i] == pick) v[i] = random_scalar(f, rng);
  return v;
}

/// A random submodule: the closure of one or two random vectors (homogeneous
/// ones when the module is graded).
template <FieldLike F>
Matrix<F> random_submodule(const Module<F>& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  std::vector<Vec<F>> seeds;
  const std::size_t count = 1 + random_below(rng, 2);
  for (std::size_t t = 0; t < count; ++t)
    seeds.push_back(m.is_graded() ? random_homogeneous_vec(m, rng)
                                  : random_vec(f, rng, m.dim()));
  return submodule_closure(m, from_cols<F>(m.dim(), seeds));
}

/// A random superfluous submodule: the closure of random combinations of
/// radical vectors (the radical is a submodule, so the closure stays inside).
template <FieldLike F>
Matrix<F> random_superfluous_submodule(const Module<F>& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  const Matrix<F> rad = radical_submodule(m);
  if (rad.cols() == 0) return Matrix<F>(m.dim(), 0);
  std::vector<Vec<F>> seeds;
  const std::size_t count = 1 + random_below(rng, 2);
  for (std::size_t t = 0; t < count; ++t)
    seeds.push_back(mat_vec(f, rad, random_vec(f, rng, rad.cols())));
  return submodule_closure(m, from_cols<F>(m.dim(), seeds));
}

/// A random module over a: a closure-generated submodule or quotient of the
/// double regular module, with 1 <= dim <= max_dim. Graded variants start
/// from a shifted copy so several degrees occur.
template <FieldLike F>
Module<F> random_module(const AlgebraPtr<F>& a, std::mt19937_64& rng,
                        std::size_t max_dim, bool graded) {
  const auto& f = a->field();
  const Module<F> reg = regular_module(a);
  Module<F> big = [&] {
    if (!graded) return direct_sum(forget(reg), forget(reg)).sum;
    MonoidElt step = a->grading().monoid.identity();
    if (a->grading().monoid.kind() != MonoidKind::table) step[0] += 1;
    return direct_sum(reg, shift(reg, step)).sum;
  }();
  for (std::size_t attempt = 0; attempt < 400; ++attempt) {
    const Matrix<F> sub = random_submodule(big, rng);
    if (random_below(rng, 3) == 0) {
      if (sub.cols() >= 1 && sub.cols() <= max_dim)
        return submodule_as_module(big, sub).first;
      continue;
    }
    const std::size_t qdim = big.dim() - sub.cols();
    if (qdim >= 1 && qdim <= max_dim) {
      Module<F> q = quotient_module(big, sub).quotient;
      if (q.is_graded() == graded) return q;
    }
  }
  Module<F> fallback = top_of(reg);
  return graded ? fallback : forget(fallback);
}

/// A random map src -> tgt: a random combination of a basis of the hom
/// space (the zero map when the hom space is zero).
template <FieldLike F>
ModuleMap<F> random_map(const Module<F>& src, const Module<F>& tgt,
                        std::mt19937_64& rng) {
  const auto& f = src.field();
  const std::vector<Matrix<F>> basis = hom_basis(src, tgt);
  Matrix<F> comb(tgt.dim(), src.dim());
  for (const auto& b : basis) {
    const auto c = random_scalar(f, rng);
    for (std::size_t i = 0; i < comb.rows(); ++i)
      for (std::size_t j = 0; j < comb.cols(); ++j)
        comb(i, j) = f.add(comb(i, j), f.mul(c, b(i, j)));
  }
  return make_module_map(src, tgt, std::move(comb), false);
}

}  // namespace gradres
