#pragma once

// Finite-dimensional left modules over a GradedAlgebra, with optional
// grading. A submodule is carried as a canonical column basis inside its
// parent's coordinates; operations take the parent explicitly.

#include "gradres/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace gradres {

template <FieldLike F>
using AlgebraPtr = std::shared_ptr<const GradedAlgebra<F>>;

template <FieldLike F>
AlgebraPtr<F> share(GradedAlgebra<F> a) {
  return std::make_shared<const GradedAlgebra<F>>(std::move(a));
}

/// Structural identity of algebras (labels aside): same multiplication on
/// the same coordinates over the same field.
template <FieldLike F>
bool same_structure(const GradedAlgebra<F>& a, const GradedAlgebra<F>& b) {
  if (a.dim() != b.dim()) return false;
  if (a.field().characteristic() != b.field().characteristic()) return false;
  if (a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.sc(i, j) != b.sc(i, j)) return false;
  if (a.is_graded() != b.is_graded()) return false;
  if (a.is_graded() &&
      (!(a.grading().monoid == b.grading().monoid) ||
       a.grading().degrees != b.grading().degrees))
    return false;
  return true;
}

template <FieldLike F>
class Module {
 public:
  struct Unchecked {};  // for constructions whose laws are certified wholesale

  Module(AlgebraPtr<F> alg, std::vector<Matrix<F>> action,
         std::optional<std::vector<MonoidElt>> degrees = std::nullopt)
      : alg_(std::move(alg)), action_(std::move(action)), degrees_(std::move(degrees)) {
    validate();
  }

  Module(Unchecked, AlgebraPtr<F> alg, std::vector<Matrix<F>> action,
         std::optional<std::vector<MonoidElt>> degrees = std::nullopt)
      : alg_(std::move(alg)), action_(std::move(action)), degrees_(std::move(degrees)) {
    if (!alg_ || action_.size() != alg_->dim())
      throw input_error("module: one action matrix per algebra basis element");
  }

  const GradedAlgebra<F>& algebra() const { return *alg_; }
  const AlgebraPtr<F>& algebra_ptr() const { return alg_; }
  const F& field() const { return alg_->field(); }
  std::size_t dim() const { return action_.empty() ? 0 : action_[0].rows(); }
  const Matrix<F>& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix<F>>& actions() const { return action_; }

  bool is_graded() const { return degrees_.has_value(); }
  const std::vector<MonoidElt>& degrees() const {
    if (!degrees_) throw input_error("module carries no grading");
    return *degrees_;
  }

  /// Matrix of the action of a general algebra element.
  Matrix<F> rho(const Vec<F>& a_coords) const {
    const auto& f = field();
    Matrix<F> m(dim(), dim());
    for (std::size_t i = 0; i < a_coords.size(); ++i) {
      if (f.is_zero(a_coords[i])) continue;
      m = mat_add(f, m, scalar_mul(f, a_coords[i], action_[i]));
    }
    return m;
  }

  Vec<F> act(const Vec<F>& a_coords, const Vec<F>& v) const {
    const auto& f = field();
    Vec<F> r = zero_vec(f, dim());
    for (std::size_t i = 0; i < a_coords.size(); ++i) {
      if (f.is_zero(a_coords[i])) continue;
      vec_acc(f, r, a_coords[i], mat_vec(f, action_[i], v));
    }
    return r;
  }

  std::vector<MonoidElt> support() const {
    std::set<MonoidElt> s(degrees().begin(), degrees().end());
    return {s.begin(), s.end()};
  }

  std::optional<MonoidElt> degree_of(const Vec<F>& v) const {
    const auto& f = field();
    std::optional<MonoidElt> d;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (f.is_zero(v[i])) continue;
      if (!d)
        d = degrees()[i];
      else if (*d != degrees()[i])
        return std::nullopt;
    }
    return d;
  }

  bool is_homogeneous(const Vec<F>& v) const {
    return is_zero_vec(field(), v) || degree_of(v).has_value();
  }

 private:
  void validate() const {
    if (!alg_) throw input_error("module: missing algebra");
    const auto& f = field();
    const std::size_t n = alg_->dim();
    if (action_.size() != n)
      throw input_error("module: one action matrix per algebra basis element");
    const std::size_t m = dim();
    for (const auto& mat : action_)
      if (mat.rows() != m || mat.cols() != m)
        throw input_error("module: action matrices must be square of equal size");

    Matrix<F> unit_act(m, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!f.is_zero(alg_->unit()[i]))
        unit_act = mat_add(f, unit_act, scalar_mul(f, alg_->unit()[i], action_[i]));
    if (!(unit_act == identity(f, m)))
      throw input_error("module: the unit does not act as the identity");

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<F> rhs(m, m);
        for (std::size_t k = 0; k < n; ++k)
          if (!f.is_zero(alg_->sc(i, j)[k]))
            rhs = mat_add(f, rhs, scalar_mul(f, alg_->sc(i, j)[k], action_[k]));
        if (!(mat_mul(f, action_[i], action_[j]) == rhs))
          throw input_error("module: action is not multiplicative at (" +
                            alg_->labels()[i] + "," + alg_->labels()[j] + ")");
      }

    if (degrees_) {
      if (!alg_->is_graded())
        throw input_error("module: grading requires a graded algebra");
      if (degrees_->size() != m)
        throw input_error("module: one degree per basis vector");
      const auto& mon = alg_->grading().monoid;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto dij = mon.op(alg_->degree(i), (*degrees_)[j]);
          for (std::size_t k = 0; k < m; ++k)
            if (!f.is_zero(action_[i](k, j)) && (*degrees_)[k] != dij)
              throw input_error("module: action of " + alg_->labels()[i] +
                                " leaves the homogeneous component at basis vector " +
                                std::to_string(j));
        }
    }
  }

  AlgebraPtr<F> alg_;
  std::vector<Matrix<F>> action_;
  std::optional<std::vector<MonoidElt>> degrees_;
};

/// Literal sameness of presentations: equal actions and equal degrees.
template <FieldLike F>
bool same_module_presentation(const Module<F>& a, const Module<F>& b) {
  if (a.dim() != b.dim()) return false;
  if (!same_structure(a.algebra(), b.algebra())) return false;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i)
    if (!(a.action(i) == b.action(i))) return false;
  if (a.is_graded() != b.is_graded()) return false;
  if (a.is_graded() && a.degrees() != b.degrees()) return false;
  return true;
}

template <FieldLike F>
struct ModuleMap {
  Matrix<F> matrix;  // target_dim x source_dim, acting v -> matrix*v
};

template <FieldLike F>
ModuleMap<F> make_module_map(const Module<F>& src, const Module<F>& tgt, Matrix<F> m,
                             bool graded = false) {
  const auto& f = src.field();
  if (!same_structure(src.algebra(), tgt.algebra()))
    throw input_error("module map: source and target live over different algebras");
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw input_error("module map: matrix shape mismatch");
  for (std::size_t i = 0; i < src.algebra().dim(); ++i)
    if (!(mat_mul(f, m, src.action(i)) == mat_mul(f, tgt.action(i), m)))
      throw input_error("module map: does not intertwine the action of " +
                        src.algebra().labels()[i]);
  if (graded) {
    for (std::size_t j = 0; j < src.dim(); ++j)
      for (std::size_t k = 0; k < tgt.dim(); ++k)
        if (!f.is_zero(m(k, j)) && tgt.degrees()[k] != src.degrees()[j])
          throw input_error("module map: does not preserve degrees");
  }
  return {std::move(m)};
}

// ---------------------------------------------------------------------------
// Basic constructions
// ---------------------------------------------------------------------------

template <FieldLike F>
Module<F> regular_module(const AlgebraPtr<F>& a) {
  const auto& f = a->field();
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < a->dim(); ++i)
    action.push_back(a->left_mult(unit_vec(f, a->dim(), i)));
  std::optional<std::vector<MonoidElt>> degrees;
  if (a->is_graded()) degrees = a->grading().degrees;
  return Module<F>(a, std::move(action), std::move(degrees));
}

template <FieldLike F>
Module<F> zero_module(const AlgebraPtr<F>& a, bool graded) {
  std::vector<Matrix<F>> action(a->dim(), Matrix<F>(0, 0));
  std::optional<std::vector<MonoidElt>> degrees;
  if (graded) degrees.emplace();
  return Module<F>(a, std::move(action), std::move(degrees));
}

template <FieldLike F>
bool is_submodule(const Module<F>& m, const Matrix<F>& basis) {
  const auto& f = m.field();
  if (basis.rows() != m.dim()) return false;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j)
      if (!in_span(f, basis, mat_vec(f, m.action(i), col(basis, j)))) return false;
  return true;
}

/// The subspace as an abstract module, with the inclusion back. Graded when
/// the parent is graded and the subspace is homogeneous.
template <FieldLike F>
std::pair<Module<F>, ModuleMap<F>> submodule_as_module(const Module<F>& m,
                                                       const Matrix<F>& basis_in) {
  const auto& f = m.field();
  Matrix<F> basis = col_span_basis(f, basis_in);
  if (!is_submodule(m, basis)) throw input_error("submodule: subspace is not action-closed");
  std::optional<std::vector<MonoidElt>> degrees;
  if (m.is_graded()) {
    auto hom = detail::homogeneous_subspace_rebuild(f, m.degrees(),
                                                    m.algebra().grading().monoid, basis);
    if (hom) {
      basis = std::move(*hom);
      degrees.emplace();
      for (std::size_t j = 0; j < basis.cols(); ++j)
        degrees->push_back(*m.degree_of(col(basis, j)));
    }
  }
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    auto sols = solve_all(f, basis, mat_mul(f, m.action(i), basis));
    if (!sols) throw internal_error("submodule: closure lost");
    action.push_back(std::move(*sols));
  }
  Module<F> sub(m.algebra_ptr(), std::move(action), std::move(degrees));
  auto incl = make_module_map(sub, m, basis, sub.is_graded() && m.is_graded());
  return {std::move(sub), std::move(incl)};
}

template <FieldLike F>
struct QuotientModule {
  Module<F> quotient;
  Matrix<F> projection;  // q x m
  Matrix<F> section;     // m x q
};

template <FieldLike F>
QuotientModule<F> quotient_module(const Module<F>& m, const Matrix<F>& sub_in) {
  const auto& f = m.field();
  Matrix<F> sub = col_span_basis(f, sub_in);
  if (!is_submodule(m, sub)) throw input_error("quotient: subspace is not action-closed");
  bool graded = m.is_graded();
  if (graded) {
    auto hom = detail::homogeneous_subspace_rebuild(f, m.degrees(),
                                                    m.algebra().grading().monoid, sub);
    if (!hom)
      graded = false;  // inhomogeneous submodule: quotient only as a plain module
    else
      sub = std::move(*hom);
  }
  auto split = complement_split(f, m.dim(), sub);
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    action.push_back(
        mat_mul(f, split.projection, mat_mul(f, m.action(i), split.section)));
  std::optional<std::vector<MonoidElt>> degrees;
  if (graded) {
    degrees.emplace();
    for (auto k : split.kept) degrees->push_back(m.degrees()[k]);
  }
  Module<F> q(m.algebra_ptr(), std::move(action), std::move(degrees));
  return {std::move(q), std::move(split.projection), std::move(split.section)};
}

template <FieldLike F>
Module<F> forget(const Module<F>& m) {
  return Module<F>(m.algebra_ptr(), m.actions());
}

template <FieldLike F>
Module<F> shift(const Module<F>& m, const MonoidElt& beta) {
  const auto& mon = m.algebra().grading().monoid;
  std::vector<MonoidElt> degrees;
  for (const auto& d : m.degrees()) degrees.push_back(mon.op(d, beta));
  return Module<F>(m.algebra_ptr(), m.actions(), std::move(degrees));
}

template <FieldLike F>
struct DirectSum {
  Module<F> sum;
  Matrix<F> inj1, inj2;    // into the sum
  Matrix<F> proj1, proj2;  // back onto the pieces
};

template <FieldLike F>
DirectSum<F> direct_sum(const Module<F>& m1, const Module<F>& m2) {
  const auto& f = m1.field();
  if (!same_structure(m1.algebra(), m2.algebra()))
    throw input_error("direct_sum: different algebras");
  const std::size_t d1 = m1.dim(), d2 = m2.dim();
  std::vector<Matrix<F>> action;
  for (std::size_t i = 0; i < m1.algebra().dim(); ++i) {
    Matrix<F> blk(d1 + d2, d1 + d2);
    for (std::size_t r = 0; r < d1; ++r)
      for (std::size_t c = 0; c < d1; ++c) blk(r, c) = m1.action(i)(r, c);
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d2; ++c) blk(d1 + r, d1 + c) = m2.action(i)(r, c);
    action.push_back(std::move(blk));
  }
  std::optional<std::vector<MonoidElt>> degrees;
  if (m1.is_graded() && m2.is_graded()) {
    degrees.emplace(m1.degrees());
    degrees->insert(degrees->end(), m2.degrees().begin(), m2.degrees().end());
  }
  DirectSum<F> out{Module<F>(m1.algebra_ptr(), std::move(action), std::move(degrees)),
                   Matrix<F>(d1 + d2, d1), Matrix<F>(d1 + d2, d2), Matrix<F>(d1, d1 + d2),
                   Matrix<F>(d2, d1 + d2)};
  for (std::size_t i = 0; i < d1; ++i) {
    out.inj1(i, i) = f.one();
    out.proj1(i, i) = f.one();
  }
  for (std::size_t i = 0; i < d2; ++i) {
    out.inj2(d1 + i, i) = f.one();
    out.proj2(i, d1 + i) = f.one();
  }
  return out;
}

template <FieldLike F>
struct DirectSumMany {
  Module<F> sum;
  std::vector<Matrix<F>> injections;
};

/// Direct sum of a list of modules over one algebra; empty list gives the
/// zero module. Graded iff every summand is.
template <FieldLike F>
DirectSumMany<F> direct_sum_many(const AlgebraPtr<F>& alg,
                                 const std::vector<Module<F>>& parts) {
  const auto& f = alg->field();
  bool graded = alg->is_graded();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!same_structure(p.algebra(), *alg)) throw input_error("direct_sum: algebra mismatch");
    graded = graded && p.is_graded();
    total += p.dim();
  }
  std::vector<Matrix<F>> action(alg->dim(), Matrix<F>(total, total));
  std::optional<std::vector<MonoidElt>> degrees;
  if (graded) degrees.emplace();
  std::vector<Matrix<F>> injections;
  std::size_t at = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < alg->dim(); ++i)
      for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < p.dim(); ++c)
          action[i](at + r, at + c) = p.action(i)(r, c);
    if (graded) degrees->insert(degrees->end(), p.degrees().begin(), p.degrees().end());
    Matrix<F> inj(total, p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) inj(at + r, r) = f.one();
    injections.push_back(std::move(inj));
    at += p.dim();
  }
  return {Module<F>(alg, std::move(action), std::move(degrees)), std::move(injections)};
}

// ---------------------------------------------------------------------------
// Radical and superfluous submodules
// ---------------------------------------------------------------------------

/// Basis of J*M for J the algebra radical. Graded parents get a homogeneous
/// basis (the radical of a graded algebra is homogeneous here).
template <FieldLike F>
Matrix<F> radical_submodule(const Module<F>& m) {
  const auto& f = m.field();
  const Matrix<F> j = radical(m.algebra());
  std::vector<Vec<F>> gens;
  for (std::size_t c = 0; c < j.cols(); ++c) {
    const Matrix<F> rj = m.rho(col(j, c));
    for (std::size_t v = 0; v < m.dim(); ++v) gens.push_back(col(rj, v));
  }
  Matrix<F> span = col_span_basis(f, from_cols<F>(m.dim(), gens));
  if (m.is_graded()) {
    auto hom = detail::homogeneous_subspace_rebuild(f, m.degrees(),
                                                    m.algebra().grading().monoid, span);
    if (!hom)
      throw capability_error("radical_submodule: radical is not homogeneous here");
    span = std::move(*hom);
  }
  return span;
}

/// Finite-dimensional criterion: N is superfluous in M iff N lies in rad M.
template <FieldLike F>
bool is_superfluous(const Module<F>& m, const Matrix<F>& n) {
  const auto& f = m.field();
  if (!is_submodule(m, n)) throw input_error("is_superfluous: not a submodule");
  return span_leq(f, n, radical_submodule(m));
}

namespace detail {

/// Points of F_2^m encoded as m-bit indices; subspaces as 2^m-bit masks.
template <FieldLike F>
std::uint32_t f2_apply(const F& f, const Matrix<F>& a, std::uint32_t v) {
  std::uint32_t r = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!(v >> j & 1u)) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!f.is_zero(a(i, j))) r ^= (1u << i);
  }
  return r;
}

template <FieldLike F>
std::uint64_t f2_closure(const Module<F>& m, std::uint64_t pts) {
  const std::size_t npts = std::size_t(1) << m.dim();
  pts |= 1;  // the zero vector
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t u = 0; u < npts; ++u) {
      if (!(pts >> u & 1)) continue;
      for (std::uint32_t w = u; w < npts; ++w) {
        if (!(pts >> w & 1)) continue;
        if (!(pts >> (u ^ w) & 1)) {
          pts |= std::uint64_t(1) << (u ^ w);
          changed = true;
        }
      }
      for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        const auto img = f2_apply(m.field(), m.action(i), u);
        if (!(pts >> img & 1)) {
          pts |= std::uint64_t(1) << img;
          changed = true;
        }
      }
    }
  }
  return pts;
}

template <FieldLike F>
std::vector<std::uint64_t> all_submodules_f2(const Module<F>& m) {
  const std::size_t npts = std::size_t(1) << m.dim();
  std::set<std::uint64_t> subs;
  subs.insert(1);  // zero submodule
  for (std::uint32_t v = 1; v < npts; ++v)
    subs.insert(f2_closure(m, std::uint64_t(1) << v));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> cur(subs.begin(), subs.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (subs.insert(f2_closure(m, cur[i] | cur[j])).second) grew = true;
  }
  return {subs.begin(), subs.end()};
}

template <FieldLike F>
std::uint64_t f2_point_set(const Module<F>& m, const Matrix<F>& basis) {
  const auto& f = m.field();
  std::uint64_t pts = 1;
  const std::size_t k = basis.cols();
  for (std::uint32_t combo = 1; combo < (1u << k); ++combo) {
    std::uint32_t pt = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(combo >> c & 1u)) continue;
      for (std::size_t r = 0; r < basis.rows(); ++r)
        if (!f.is_zero(basis(r, c))) pt ^= (1u << r);
    }
    pts |= std::uint64_t(1) << pt;
  }
  return pts;
}

}  // namespace detail

/// Direct transcription of the definition: N is superfluous iff no proper
/// submodule T has N + T = M. Exhaustive over F_2, dim <= 5.
template <FieldLike F>
bool is_superfluous_bruteforce(const Module<F>& m, const Matrix<F>& n) {
  if (m.field().characteristic() != 2)
    throw capability_error("is_superfluous_bruteforce: only over F_2");
  if (m.dim() > 5) throw capability_error("is_superfluous_bruteforce: dim must be <= 5");
  if (!is_submodule(m, n)) throw input_error("is_superfluous_bruteforce: not a submodule");
  const std::size_t npts = std::size_t(1) << m.dim();
  const std::uint64_t full = npts == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << npts) - 1;
  const std::uint64_t npts_set = detail::f2_point_set(m, n);
  for (const auto t : detail::all_submodules_f2(m)) {
    if (t == full) continue;
    // the sum of two closed subspaces is the set of pairwise sums
    std::uint64_t sum = 0;
    for (std::uint32_t u = 0; u < npts; ++u) {
      if (!(npts_set >> u & 1)) continue;
      for (std::uint32_t w = 0; w < npts; ++w)
        if (t >> w & 1) sum |= std::uint64_t(1) << (u ^ w);
    }
    if (sum == full) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maps: kernels, images, preimages, hom spaces
// ---------------------------------------------------------------------------

template <FieldLike F>
Matrix<F> kernel_basis(const Module<F>& src, const ModuleMap<F>& phi) {
  const auto& f = src.field();
  Matrix<F> ker = col_span_basis(f, nullspace(f, phi.matrix));
  if (src.is_graded()) {
    auto hom = detail::homogeneous_subspace_rebuild(f, src.degrees(),
                                                    src.algebra().grading().monoid, ker);
    if (hom) ker = std::move(*hom);
  }
  return ker;
}

template <FieldLike F>
Matrix<F> image_basis(const Module<F>& tgt, const ModuleMap<F>& phi, const Matrix<F>& n) {
  const auto& f = tgt.field();
  Matrix<F> img = col_span_basis(f, mat_mul(f, phi.matrix, n));
  if (tgt.is_graded()) {
    auto hom = detail::homogeneous_subspace_rebuild(f, tgt.degrees(),
                                                    tgt.algebra().grading().monoid, img);
    if (hom) img = std::move(*hom);
  }
  return img;
}

template <FieldLike F>
Matrix<F> preimage_basis(const Module<F>& src, const Module<F>& tgt, const ModuleMap<F>& phi,
                         const Matrix<F>& t) {
  const auto& f = src.field();
  // v with phi(v) in T: kernel of (project mod T) . phi
  auto split = complement_split(f, tgt.dim(), t);
  Matrix<F> pre =
      col_span_basis(f, nullspace(f, mat_mul(f, split.projection, phi.matrix)));
  if (src.is_graded()) {
    auto hom = detail::homogeneous_subspace_rebuild(f, src.degrees(),
                                                    src.algebra().grading().monoid, pre);
    if (hom) pre = std::move(*hom);
  }
  return pre;
}

template <FieldLike F>
Matrix<F> submodule_sum(const F& f, const Matrix<F>& n1, const Matrix<F>& n2) {
  return span_sum(f, n1, n2);
}

/// Basis of the space of module maps src -> tgt, as matrices.
template <FieldLike F>
std::vector<Matrix<F>> hom_basis(const Module<F>& src, const Module<F>& tgt) {
  const auto& f = src.field();
  if (!same_structure(src.algebra(), tgt.algebra()))
    throw input_error("hom_basis: different algebras");
  const std::size_t s = src.dim(), t = tgt.dim();
  if (s == 0 || t == 0) return {};
  const std::size_t nb = src.algebra().dim();
  Matrix<F> constraints(0, s * t);
  for (std::size_t i = 0; i < nb; ++i) {
    // vec(M rho_s) = (rho_s^T (x) I) vec M, vec(rho_t M) = (I (x) rho_t) vec M
    Matrix<F> c = mat_sub(f, kron(f, transpose(src.action(i)), identity(f, t)),
                          kron(f, identity(f, s), tgt.action(i)));
    constraints = constraints.rows() == 0 ? c : vstack(constraints, c);
  }
  Matrix<F> ns = nullspace(f, constraints);
  std::vector<Matrix<F>> basis;
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    Matrix<F> m(t, s);
    for (std::size_t idx = 0; idx < s * t; ++idx) m(idx % t, idx / t) = ns(idx, k);
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace gradres
