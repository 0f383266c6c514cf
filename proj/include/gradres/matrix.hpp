#pragma once

// Dense exact linear algebra over a FieldLike scalar type. Matrices are
// row-major; the field object is passed into every arithmetic routine, in
// the style of exact linear algebra kernels. Vectors are coordinate columns.

#include "gradres/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace gradres {

template <FieldLike F>
using Vec = std::vector<typename F::Element>;

template <FieldLike F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Element>& data() { return a_; }
  const std::vector<Element>& data() const { return a_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> a_;
};

template <FieldLike F>
Matrix<F> identity(const F& f, std::size_t n) {
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <FieldLike F>
bool is_zero(const F& f, const Matrix<F>& m) {
  for (const auto& x : m.data())
    if (!f.is_zero(x)) return false;
  return true;
}

template <FieldLike F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <FieldLike F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <FieldLike F>
Matrix<F> mat_add(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("mat_add: dimension mismatch");
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.data().size(); ++k)
    c.data()[k] = f.add(a.data()[k], b.data()[k]);
  return c;
}

template <FieldLike F>
Matrix<F> mat_sub(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("mat_sub: dimension mismatch");
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.data().size(); ++k)
    c.data()[k] = f.sub(a.data()[k], b.data()[k]);
  return c;
}

template <FieldLike F>
Matrix<F> scalar_mul(const F& f, const typename F::Element& s, const Matrix<F>& a) {
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = f.mul(s, a.data()[k]);
  return c;
}

template <FieldLike F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw input_error("mat_mul: dimension mismatch");
  Matrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

template <FieldLike F>
Vec<F> mat_vec(const F& f, const Matrix<F>& a, const Vec<F>& v) {
  if (a.cols() != v.size()) throw input_error("mat_vec: dimension mismatch");
  Vec<F> r(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a(i, j))) r[i] = f.add(r[i], f.mul(a(i, j), v[j]));
  return r;
}

template <FieldLike F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw input_error("vec_add: dimension mismatch");
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <FieldLike F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw input_error("vec_sub: dimension mismatch");
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <FieldLike F>
Vec<F> scalar_vec(const F& f, const typename F::Element& s, const Vec<F>& v) {
  Vec<F> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(s, v[i]);
  return r;
}

/// axpy: w += s*v.
template <FieldLike F>
void vec_acc(const F& f, Vec<F>& w, const typename F::Element& s, const Vec<F>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = f.add(w[i], f.mul(s, v[i]));
}

template <FieldLike F>
Vec<F> zero_vec(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <FieldLike F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <FieldLike F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw input_error("hstack: row mismatch");
  Matrix<F> c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <FieldLike F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw input_error("vstack: col mismatch");
  Matrix<F> c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

template <FieldLike F>
Vec<F> col(const Matrix<F>& m, std::size_t j) {
  Vec<F> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

template <FieldLike F>
void set_col(Matrix<F>& m, std::size_t j, const Vec<F>& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = v[i];
}

/// Columns of m listed as vectors.
template <FieldLike F>
std::vector<Vec<F>> cols_of(const Matrix<F>& m) {
  std::vector<Vec<F>> r;
  r.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(col(m, j));
  return r;
}

/// Matrix whose columns are the given vectors (all of length n).
template <FieldLike F>
Matrix<F> from_cols(std::size_t n, const std::vector<Vec<F>>& vs) {
  Matrix<F> m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != n) throw input_error("from_cols: length mismatch");
    set_col(m, j, vs[j]);
  }
  return m;
}

template <FieldLike F>
Matrix<F> kron(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return c;
}

template <FieldLike F>
Vec<F> kron_vec(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> c(a.size() * b.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return c;
}

template <FieldLike F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column indices, increasing
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <FieldLike F>
RrefResult<F> rref(const F& f, Matrix<F> m) {
  RrefResult<F> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const auto s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(s, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto t = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

template <FieldLike F>
std::size_t rank(const F& f, const Matrix<F>& m) {
  return rref(f, m).rank;
}

/// Basis of {v : m v = 0}, returned as the columns of an n x (n - rank)
/// matrix, in the standard rref parametrization (one column per free
/// variable, increasing).
template <FieldLike F>
Matrix<F> nullspace(const F& f, const Matrix<F>& m) {
  const auto rr = rref(f, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Matrix<F> basis(n, n - rr.rank);
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = f.one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      basis(rr.pivots[i], k) = f.neg(rr.reduced(i, c));
    ++k;
  }
  return basis;
}

/// One solution of m x = b, or nullopt when b is outside the column space.
/// Free variables are set to zero, so the witness is deterministic.
template <FieldLike F>
std::optional<Vec<F>> solve(const F& f, const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw input_error("solve: rhs length mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto rr = rref(f, std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x[rr.pivots[i]] = rr.reduced(i, m.cols());
  return x;
}

/// Columnwise solve of m X = B.
template <FieldLike F>
std::optional<Matrix<F>> solve_all(const F& f, const Matrix<F>& m, const Matrix<F>& b) {
  if (b.rows() != m.rows()) throw input_error("solve_all: rhs rows mismatch");
  Matrix<F> aug = hstack(m, b);
  const auto rr = rref(f, std::move(aug));
  Matrix<F> x(m.cols(), b.cols());
  for (auto c : rr.pivots)
    if (c >= m.cols()) return std::nullopt;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(rr.pivots[i], j) = rr.reduced(i, m.cols() + j);
  return x;
}

/// Inverse of a square matrix, or nullopt if singular.
template <FieldLike F>
std::optional<Matrix<F>> inverse(const F& f, const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw input_error("inverse: not square");
  return solve_all(f, m, identity(f, m.rows()));
}

// ---------------------------------------------------------------------------
// Subspace calculus. A subspace of F^n is carried around as a matrix whose
// columns span it; col_span_basis produces the canonical (rref-derived)
// basis, so equal subspaces compare equal as matrices.
// ---------------------------------------------------------------------------

/// Canonical basis of the column span: rref the transpose and keep the
/// nonzero rows, transposed back to columns.
template <FieldLike F>
Matrix<F> col_span_basis(const F& f, const Matrix<F>& m) {
  const auto rr = rref(f, transpose(m));
  Matrix<F> basis(m.rows(), rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis(j, i) = rr.reduced(i, j);
  return basis;
}

template <FieldLike F>
bool in_span(const F& f, const Matrix<F>& span, const Vec<F>& v) {
  return solve(f, span, v).has_value();
}

/// Every column of sub lies in the column span of span.
template <FieldLike F>
bool span_leq(const F& f, const Matrix<F>& sub, const Matrix<F>& span) {
  for (std::size_t j = 0; j < sub.cols(); ++j)
    if (!in_span(f, span, col(sub, j))) return false;
  return true;
}

template <FieldLike F>
bool span_eq(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  return col_span_basis(f, a) == col_span_basis(f, b);
}

template <FieldLike F>
Matrix<F> span_sum(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  return col_span_basis(f, hstack(a, b));
}

/// Splitting of F^n along a subspace: a greedy standard-vector complement,
/// with the projection onto its coordinates (kernel = the subspace) and the
/// section embedding them back. projection * section = id.
template <FieldLike F>
struct ComplementSplit {
  Matrix<F> projection;             // q x n
  Matrix<F> section;                // n x q
  std::vector<std::size_t> kept;    // standard indices spanning the complement
};

template <FieldLike F>
ComplementSplit<F> complement_split(const F& f, std::size_t n, const Matrix<F>& sub) {
  if (sub.rows() != n) throw input_error("complement_split: ambient mismatch");
  ComplementSplit<F> out;
  Matrix<F> accum = col_span_basis(f, sub);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e_i = unit_vec(f, n, i);
    if (!in_span(f, accum, e_i)) {
      out.kept.push_back(i);
      accum = span_sum(f, accum, from_cols<F>(n, {e_i}));
    }
  }
  const std::size_t q = out.kept.size();
  out.section = Matrix<F>(n, q);
  for (std::size_t j = 0; j < q; ++j) out.section(out.kept[j], j) = f.one();
  auto inv = inverse(f, hstack(out.section, col_span_basis(f, sub)));
  if (!inv) throw internal_error("complement_split: complement failure");
  out.projection = Matrix<F>(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) out.projection(i, j) = (*inv)(i, j);
  return out;
}

/// Intersection of two column spans.
template <FieldLike F>
Matrix<F> span_intersect(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw input_error("span_intersect: ambient mismatch");
  if (a.cols() == 0 || b.cols() == 0) return Matrix<F>(a.rows(), 0);
  // ker [a | -b]; the a-part of each kernel vector maps to the intersection
  Matrix<F> glued(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) glued(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) glued(i, a.cols() + j) = f.neg(b(i, j));
  }
  const Matrix<F> ker = nullspace(f, glued);
  Matrix<F> gens(a.rows(), ker.cols());
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Vec<F> w(a.rows(), f.zero());
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(ker(j, k))) vec_acc(f, w, ker(j, k), col(a, j));
    set_col(gens, k, w);
  }
  return col_span_basis(f, gens);
}

}  // namespace gradres
