#pragma once

// Path algebras of finite quivers modulo admissible length-homogeneous
// relations, truncated degreewise. Composition is written p*q = "first q,
// then p"; a stored path lists its arrows in application order.

#include "gradres/algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gradres {

struct QuiverPresentation {
  struct Arrow {
    std::size_t source = 0, target = 0;
    std::string label;
  };
  struct Relation {
    // parallel paths as arrow indices in application order, with scalar
    // coefficient strings parsed by the target field
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::string> coeffs;
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::optional<std::size_t> truncate;
};

namespace detail {

struct PathKey {
  std::size_t source;
  std::vector<std::size_t> arrows;
  bool operator<(const PathKey& o) const {
    return std::tie(source, arrows) < std::tie(o.source, o.arrows);
  }
};

inline void check_quiver(const QuiverPresentation& q) {
  if (q.vertices == 0) throw input_error("quiver: needs at least one vertex");
  std::map<std::string, int> seen;
  for (const auto& a : q.arrows) {
    if (a.source >= q.vertices || a.target >= q.vertices)
      throw input_error("quiver: arrow endpoint out of range");
    if (a.label.empty() || ++seen[a.label] > 1)
      throw input_error("quiver: arrow labels must be nonempty and distinct");
  }
  for (const auto& r : q.relations) {
    if (r.paths.empty() || r.paths.size() != r.coeffs.size())
      throw input_error("quiver: relation needs matching paths and coefficients");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    std::optional<std::size_t> len;
    for (const auto& p : r.paths) {
      if (p.size() < 2)
        throw input_error(
            "quiver: relations must lie in the square of the arrow ideal (paths of "
            "length >= 2)");
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= q.arrows.size()) throw input_error("quiver: relation arrow out of range");
        if (i && q.arrows[p[i]].source != q.arrows[p[i - 1]].target)
          throw input_error("quiver: relation path is not composable");
      }
      std::pair<std::size_t, std::size_t> e{q.arrows[p.front()].source,
                                            q.arrows[p.back()].target};
      if (ends && *ends != e)
        throw input_error("quiver: relation combines non-parallel paths");
      ends = e;
      if (len && *len != p.size())
        throw input_error(
            "quiver: relation mixes path lengths; the length grading requires "
            "homogeneous relations");
      len = p.size();
    }
  }
}

}  // namespace detail

/// Basis = residues of paths, chosen greedily in enumeration order within
/// each length; length grading over N; vertex idempotents recorded; the
/// arrow-ideal residue recorded as the known radical.
template <FieldLike F>
GradedAlgebra<F> path_algebra(const F& f, const QuiverPresentation& q) {
  detail::check_quiver(q);
  constexpr std::size_t kDefaultBound = 64;
  const std::size_t bound = q.truncate ? *q.truncate : kDefaultBound;

  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };
  // per length: enumerated paths, the kept (basis) ones, and the reduction
  // of the full path space onto kept coordinates modulo the relation ideal
  std::vector<std::vector<Path>> paths(1);
  std::vector<std::vector<std::size_t>> kept(1);
  std::vector<Matrix<F>> reduce(1);

  for (std::size_t v = 0; v < q.vertices; ++v)
    paths[0].push_back({v, v, {}});
  for (std::size_t i = 0; i < q.vertices; ++i) kept[0].push_back(i);
  reduce[0] = identity(f, q.vertices);

  for (std::size_t len = 1;; ++len) {
    if (q.truncate && len > bound) break;
    std::vector<Path> level;
    std::map<detail::PathKey, std::size_t> index;
    for (const auto& p : paths[len - 1])
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        if (q.arrows[ai].source != p.target) continue;
        Path np{p.source, q.arrows[ai].target, p.arrows};
        np.arrows.push_back(ai);
        index[{np.source, np.arrows}] = level.size();
        level.push_back(np);
      }
    if (level.empty()) break;
    if (!q.truncate && len > bound)
      throw input_error(
          "path_algebra: quotient still alive at the default truncation bound; pass an "
          "explicit truncation degree");

    // relation ideal in this length: x * r * y over composable path pairs
    std::vector<Vec<F>> ideal_vecs;
    for (const auto& r : q.relations) {
      const std::size_t m = r.paths.front().size();
      if (m > len) continue;
      const std::size_t r_source = q.arrows[r.paths.front().front()].source;
      const std::size_t r_target = q.arrows[r.paths.front().back()].target;
      for (std::size_t ylen = 0; ylen + m <= len; ++ylen) {
        const std::size_t xlen = len - m - ylen;
        for (const auto& y : paths[ylen]) {
          if (y.target != r_source) continue;
          for (const auto& x : paths[xlen]) {
            if (x.source != r_target) continue;
            Vec<F> vec = zero_vec(f, level.size());
            for (std::size_t t = 0; t < r.paths.size(); ++t) {
              std::vector<std::size_t> arr = y.arrows;
              arr.insert(arr.end(), r.paths[t].begin(), r.paths[t].end());
              arr.insert(arr.end(), x.arrows.begin(), x.arrows.end());
              const auto it = index.find({y.source, arr});
              if (it == index.end())
                throw internal_error("path_algebra: composed relation path missing");
              vec[it->second] = f.add(vec[it->second], f.parse(r.coeffs[t]));
            }
            ideal_vecs.push_back(std::move(vec));
          }
        }
      }
    }
    Matrix<F> ideal = col_span_basis(f, from_cols<F>(level.size(), ideal_vecs));
    auto split = complement_split(f, level.size(), ideal);

    paths.push_back(std::move(level));
    kept.push_back(std::move(split.kept));
    reduce.push_back(std::move(split.projection));
    if (kept.back().empty()) break;  // all longer paths die too
  }

  // assemble the global basis
  struct BasisElt {
    std::size_t len, local;  // position within kept[len]
  };
  std::vector<BasisElt> basis;
  std::vector<std::size_t> level_offset(paths.size(), 0);
  for (std::size_t len = 0; len < paths.size(); ++len) {
    level_offset[len] = basis.size();
    for (std::size_t j = 0; j < kept[len].size(); ++j) basis.push_back({len, j});
  }
  const std::size_t n = basis.size();

  auto label_of = [&](const BasisElt& b) {
    const auto& p = paths[b.len][kept[b.len][b.local]];
    if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!s.empty()) s += "*";
      s += q.arrows[*it].label;
    }
    return s;
  };

  std::vector<std::string> labels;
  std::vector<MonoidElt> degrees;
  for (const auto& b : basis) {
    labels.push_back(label_of(b));
    degrees.push_back({std::int64_t(b.len)});
  }

  Vec<F> unit = zero_vec(f, n);
  for (std::size_t v = 0; v < q.vertices; ++v) unit[v] = f.one();

  std::vector<std::vector<Vec<F>>> sc(n, std::vector<Vec<F>>(n, zero_vec(f, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& pi = paths[basis[i].len][kept[basis[i].len][basis[i].local]];
      const auto& pj = paths[basis[j].len][kept[basis[j].len][basis[j].local]];
      if (pj.target != pi.source) continue;  // b_i * b_j = first b_j then b_i
      const std::size_t len = basis[i].len + basis[j].len;
      if (len >= paths.size()) continue;  // beyond the last live length: zero
      std::vector<std::size_t> arr = pj.arrows;
      arr.insert(arr.end(), pi.arrows.begin(), pi.arrows.end());
      std::map<detail::PathKey, std::size_t> idx;
      for (std::size_t t = 0; t < paths[len].size(); ++t)
        idx[{paths[len][t].source, paths[len][t].arrows}] = t;
      const auto it = idx.find({pj.source, arr});
      if (it == idx.end()) throw internal_error("path_algebra: concatenation missing");
      Vec<F> coords = mat_vec(f, reduce[len], unit_vec(f, paths[len].size(), it->second));
      for (std::size_t t = 0; t < coords.size(); ++t)
        sc[i][j][level_offset[len] + t] = coords[t];
    }

  std::vector<Vec<F>> idems;
  for (std::size_t v = 0; v < q.vertices; ++v) idems.push_back(unit_vec(f, n, v));

  GradedAlgebra<F> a(f, std::move(labels), std::move(unit), std::move(sc),
                     AlgebraGrading{GradedMonoid::natural(), std::move(degrees)},
                     std::move(idems));
  Matrix<F> arrow_ideal(n, n - q.vertices);
  for (std::size_t j = q.vertices; j < n; ++j) arrow_ideal(j, j - q.vertices) = f.one();
  a.set_known_radical(std::move(arrow_ideal));
  return a;
}

}  // namespace gradres
