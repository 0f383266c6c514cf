#pragma once

// JSON input and output: ground fields, grading monoids, algebras (structure
// constants or quiver presentations), modules, ideal generators, balancing
// subalgebras, monoid actions, and the report types. Scalars are integers
// over a prime field and strings like "3/7" over the rationals; readers
// accept either form.

#include "gradres/homology.hpp"
#include "gradres/quiver.hpp"
#include "gradres/smash.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gradres {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw input_error("json parse failure in " + path + ": " + e.what());
  }
}

/// A string member is a reference to another JSON file, resolved relative to
/// the directory of the referring file; an object is taken as-is.
inline Json resolve_ref(const Json& j, const std::filesystem::path& dir) {
  if (j.is_string())
    return load_json_file((dir / j.get<std::string>()).string());
  if (j.is_object()) return j;
  throw input_error("expected a file reference or an inline object");
}

// ---------------------------------------------------------------------------
// Fields and scalars
// ---------------------------------------------------------------------------

inline FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw input_error("field: expected an object with a \"kind\" member");
  const std::string k = j.at("kind").get<std::string>();
  if (k == "prime") {
    if (!j.contains("p")) throw input_error("field: prime field needs \"p\"");
    return FieldSpec::primes(j.at("p").get<std::int64_t>());
  }
  if (k == "rational" || k == "rationals") return FieldSpec::rationals();
  throw input_error("field: unknown kind: " + k);
}

inline Json field_to_json(const FieldSpec& s) {
  if (s.kind == FieldSpec::Kind::prime) return Json{{"kind", "prime"}, {"p", s.p}};
  return Json{{"kind", "rational"}};
}

inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::primes(f.p()); }
inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }

/// The field declared by an object, defaulting to F_2 when absent.
inline FieldSpec declared_field(const Json& j) {
  if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
  return FieldSpec::primes(2);
}

template <FieldLike F>
typename F::Element scalar_from_json(const F& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  throw input_error("scalar: expected an integer or a string");
}

inline Json scalar_to_json(const PrimeField&, const PrimeField::Element& a) {
  return Json(a);
}
inline Json scalar_to_json(const RationalField& f, const RationalField::Element& a) {
  return Json(f.to_string(a));
}

// ---------------------------------------------------------------------------
// Vectors and matrices (row-major nested arrays)
// ---------------------------------------------------------------------------

template <FieldLike F>
Vec<F> vec_from_json(const F& f, const Json& j) {
  if (!j.is_array()) throw input_error("vector: expected an array");
  Vec<F> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

template <FieldLike F>
Json vec_to_json(const F& f, const Vec<F>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(scalar_to_json(f, x));
  return j;
}

template <FieldLike F>
Matrix<F> matrix_from_json(const F& f, const Json& j) {
  if (!j.is_array()) throw input_error("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j.at(0).is_array()) throw input_error("matrix: rows must be arrays");
    cols = j.at(0).size();
  }
  Matrix<F> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw input_error("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(f, row.at(k));
  }
  return m;
}

template <FieldLike F>
Json matrix_to_json(const F& f, const Matrix<F>& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(f, m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

// ---------------------------------------------------------------------------
// Monoids and monoid elements
// ---------------------------------------------------------------------------

inline MonoidElt monoid_elt_from_json(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (j.is_array()) {
    MonoidElt g;
    for (const auto& x : j) {
      if (!x.is_number_integer())
        throw input_error("degree: expected integer coordinates");
      g.push_back(x.get<std::int64_t>());
    }
    return g;
  }
  throw input_error("degree: expected an integer or an array of integers");
}

inline Json monoid_elt_to_json(const MonoidElt& g) {
  if (g.size() == 1) return Json(g[0]);
  Json j = Json::array();
  for (auto x : g) j.push_back(x);
  return j;
}

inline GradedMonoid monoid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw input_error("monoid: expected an object with a \"kind\" member");
  const std::string k = j.at("kind").get<std::string>();
  if (k == "natural") return GradedMonoid::natural();
  if (k == "natural_power") {
    const auto d = j.at("dim").get<std::size_t>();
    const bool ordered = !j.contains("order") || j.at("order").get<std::string>() != "none";
    return GradedMonoid::natural_power(
        d, ordered ? PowerOrder::componentwise : PowerOrder::none);
  }
  if (k == "table") {
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    const auto identity = j.at("identity").get<std::size_t>();
    std::vector<std::vector<std::size_t>> mul =
        j.at("mul").get<std::vector<std::vector<std::size_t>>>();
    std::set<std::pair<std::size_t, std::size_t>> order;
    if (j.contains("order"))
      for (const auto& p : j.at("order"))
        order.insert({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>()});
    return GradedMonoid::table(std::move(labels), identity, std::move(mul),
                               std::move(order));
  }
  throw input_error("monoid: unknown kind: " + k);
}

inline Json monoid_to_json(const GradedMonoid& m) {
  switch (m.kind()) {
    case MonoidKind::natural:
      return Json{{"kind", "natural"}};
    case MonoidKind::natural_power:
      return Json{{"kind", "natural_power"},
                  {"dim", m.dim()},
                  {"order", m.power_order() == PowerOrder::componentwise
                                ? "componentwise"
                                : "none"}};
    case MonoidKind::table: {
      const auto elts = m.elements();
      Json labels = Json::array(), mul = Json::array(), order = Json::array();
      std::size_t identity = 0;
      for (std::size_t i = 0; i < elts.size(); ++i) {
        labels.push_back(m.to_string(elts[i]));
        if (m.is_identity(elts[i])) identity = i;
        Json row = Json::array();
        for (std::size_t k = 0; k < elts.size(); ++k)
          row.push_back(static_cast<std::size_t>(m.op(elts[i], elts[k]).at(0)));
        mul.push_back(std::move(row));
        for (std::size_t k = 0; k < elts.size(); ++k)
          if (m.lt(elts[i], elts[k])) order.push_back(Json::array({i, k}));
      }
      return Json{{"kind", "table"},
                  {"elements", std::move(labels)},
                  {"identity", identity},
                  {"mul", std::move(mul)},
                  {"order", std::move(order)}};
    }
  }
  throw internal_error("monoid: unhandled kind");
}

// ---------------------------------------------------------------------------
// Algebras: quiver presentations and structure constants
// ---------------------------------------------------------------------------

inline QuiverPresentation quiver_from_json(const Json& j) {
  QuiverPresentation q;
  q.vertices = j.at("vertices").get<std::size_t>();
  std::map<std::string, std::size_t> arrow_index;
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 3)
        throw input_error("quiver: each arrow is [source, target, label]");
      QuiverPresentation::Arrow arr{a.at(0).get<std::size_t>(),
                                    a.at(1).get<std::size_t>(),
                                    a.at(2).get<std::string>()};
      arrow_index[arr.label] = q.arrows.size();
      q.arrows.push_back(std::move(arr));
    }
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      QuiverPresentation::Relation rel;
      for (const auto& p : r.at("paths")) {
        std::vector<std::size_t> path;
        for (const auto& lab : p) {
          const auto it = arrow_index.find(lab.get<std::string>());
          if (it == arrow_index.end())
            throw input_error("quiver: unknown arrow label in relation: " +
                              lab.get<std::string>());
          path.push_back(it->second);
        }
        rel.paths.push_back(std::move(path));
      }
      for (const auto& c : r.at("coeffs"))
        rel.coeffs.push_back(c.is_string() ? c.get<std::string>()
                                           : std::to_string(c.get<std::int64_t>()));
      q.relations.push_back(std::move(rel));
    }
  if (j.contains("truncate")) q.truncate = j.at("truncate").get<std::size_t>();
  return q;
}

template <FieldLike F>
AlgebraPtr<F> algebra_from_json(const F& f, const Json& j) {
  if (!j.is_object()) throw input_error("algebra: expected an object");
  if (j.contains("vertices")) return share(path_algebra(f, quiver_from_json(j)));

  std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  Vec<F> unit = vec_from_json(f, j.at("unit"));
  std::vector<std::vector<Vec<F>>> sc(n, std::vector<Vec<F>>(n, zero_vec(f, n)));
  for (const auto& e : j.at("mul")) {
    if (!e.is_array() || e.size() != 4)
      throw input_error("algebra: each \"mul\" entry is [i, j, k, coeff]");
    const auto i = e.at(0).get<std::size_t>(), jj = e.at(1).get<std::size_t>(),
               k = e.at(2).get<std::size_t>();
    if (i >= n || jj >= n || k >= n)
      throw input_error("algebra: \"mul\" index out of range");
    sc.at(i).at(jj).at(k) = scalar_from_json(f, e.at(3));
  }
  std::optional<AlgebraGrading> grading;
  if (j.contains("grading")) {
    AlgebraGrading g{monoid_from_json(j.at("grading").at("monoid")), {}};
    for (const auto& d : j.at("grading").at("degrees"))
      g.degrees.push_back(monoid_elt_from_json(d));
    grading = std::move(g);
  }
  std::vector<Vec<F>> idempotents;
  if (j.contains("idempotents"))
    for (const auto& e : j.at("idempotents")) idempotents.push_back(vec_from_json(f, e));
  return share(GradedAlgebra<F>(f, std::move(labels), std::move(unit), std::move(sc),
                                std::move(grading), std::move(idempotents)));
}

template <FieldLike F>
Json algebra_to_json(const GradedAlgebra<F>& a) {
  const auto& f = a.field();
  Json j;
  j["field"] = field_to_json(spec_of(f));
  j["basis"] = a.labels();
  j["unit"] = vec_to_json(f, a.unit());
  Json mul = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Vec<F>& v = a.sc(i, k);
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!f.is_zero(v[t]))
          mul.push_back(Json::array({i, k, t, scalar_to_json(f, v[t])}));
    }
  j["mul"] = std::move(mul);
  if (a.is_graded()) {
    Json degs = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
      degs.push_back(monoid_elt_to_json(a.degree(i)));
    j["grading"] = Json{{"monoid", monoid_to_json(a.grading().monoid)},
                        {"degrees", std::move(degs)}};
  }
  if (a.has_idempotents()) {
    Json idems = Json::array();
    for (const auto& e : a.idempotents()) idems.push_back(vec_to_json(f, e));
    j["idempotents"] = std::move(idems);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

template <FieldLike F>
Module<F> module_from_json(const F& f, const Json& j, const AlgebraPtr<F>& a) {
  if (!j.is_object() || !j.contains("action"))
    throw input_error("module: expected an object with an \"action\" list");
  const auto& act = j.at("action");
  if (!act.is_array() || act.size() != a->dim())
    throw input_error("module: need one action matrix per algebra basis element");
  const std::size_t dim = j.contains("dim")
                              ? j.at("dim").get<std::size_t>()
                              : (act.empty() || !act.at(0).is_array()
                                     ? 0
                                     : act.at(0).size());
  std::vector<Matrix<F>> action;
  for (const auto& mj : act) {
    Matrix<F> m = matrix_from_json(f, mj);
    if (m.rows() != dim || m.cols() != dim)
      throw input_error("module: action matrices must be square of size \"dim\"");
    action.push_back(std::move(m));
  }
  if (j.contains("degrees")) {
    std::vector<MonoidElt> degrees;
    for (const auto& d : j.at("degrees")) degrees.push_back(monoid_elt_from_json(d));
    return Module<F>(a, std::move(action), std::move(degrees));
  }
  return Module<F>(a, std::move(action));
}

template <FieldLike F>
Json module_to_json(const Module<F>& m, bool embed_algebra = true) {
  const auto& f = m.field();
  Json j;
  if (embed_algebra) j["algebra"] = algebra_to_json(m.algebra());
  j["dim"] = m.dim();
  Json act = Json::array();
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    act.push_back(matrix_to_json(f, m.action(i)));
  j["action"] = std::move(act);
  if (m.is_graded()) {
    Json degs = Json::array();
    for (const auto& d : m.degrees()) degs.push_back(monoid_elt_to_json(d));
    j["degrees"] = std::move(degs);
  }
  return j;
}

/// A module file together with its algebra, which may sit inline under
/// "algebra" or be a path reference resolved against dir.
template <FieldLike F>
std::pair<AlgebraPtr<F>, Module<F>> load_module_json(const F& f, const Json& j,
                                                     const std::filesystem::path& dir) {
  if (!j.is_object() || !j.contains("algebra"))
    throw input_error("module: missing \"algebra\" (inline object or file path)");
  const AlgebraPtr<F> a = algebra_from_json(f, resolve_ref(j.at("algebra"), dir));
  Module<F> m = module_from_json(f, j, a);
  return {a, std::move(m)};
}

// ---------------------------------------------------------------------------
// Ideal generators, balancing subalgebras, monoid actions
// ---------------------------------------------------------------------------

/// {"generators": [[...], ...]} as columns over the ambient dimension.
template <FieldLike F>
Matrix<F> generators_from_json(const F& f, const Json& j, std::size_t dim) {
  const auto& g = j.is_object() && j.contains("generators") ? j.at("generators") : j;
  if (!g.is_array()) throw input_error("ideal: expected a \"generators\" array");
  std::vector<Vec<F>> cols;
  for (const auto& v : g) {
    Vec<F> c = vec_from_json(f, v);
    if (c.size() != dim)
      throw input_error("ideal: generator has wrong length");
    cols.push_back(std::move(c));
  }
  return from_cols<F>(dim, cols);
}

/// {"kind":"ground"} | {"kind":"vertex_span"} | {"kind":"idempotents",
///  "elements":[[...], ...]}.
template <FieldLike F>
SubalgebraR<F> subalgebra_from_json(const F& f, const Json& j,
                                    const GradedAlgebra<F>& a) {
  if (!j.is_object() || !j.contains("kind"))
    throw input_error("subalgebra: expected an object with a \"kind\" member");
  const std::string k = j.at("kind").get<std::string>();
  if (k == "ground") return ground_field_subalgebra(a);
  if (k == "vertex_span") {
    if (!a.has_idempotents())
      throw input_error("subalgebra: the algebra lists no idempotents to span");
    return idempotent_subalgebra(a, a.idempotents());
  }
  if (k == "idempotents") {
    std::vector<Vec<F>> idems;
    for (const auto& e : j.at("elements")) idems.push_back(vec_from_json(f, e));
    return idempotent_subalgebra(a, std::move(idems));
  }
  throw input_error("subalgebra: unknown kind: " + k);
}

/// {"monoid": {...}, "sigma": [matrix, ...]}: one matrix per monoid
/// generator (coordinate) for the free kinds, one per element for tables.
template <FieldLike F>
GammaAlgebra<F> action_from_json(const F& f, const Json& j, GradedAlgebra<F> b,
                                 std::optional<GradedMonoid> default_monoid = {}) {
  GradedMonoid monoid = j.contains("monoid") ? monoid_from_json(j.at("monoid"))
                                             : (default_monoid
                                                    ? *default_monoid
                                                    : throw input_error(
                                                          "action: no monoid given"));
  std::vector<Matrix<F>> gens;
  for (const auto& mj : j.at("sigma")) gens.push_back(matrix_from_json(f, mj));
  return GammaAlgebra<F>(std::move(b), std::move(monoid), std::move(gens));
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

template <FieldLike F>
Json resolution_to_json(const F& f, const Resolution<F>& res, bool with_matrices) {
  Json j;
  j["graded"] = res.graded;
  j["complete"] = res.complete;
  j["dims"] = res.dims();
  if (res.graded) {
    Json degs = Json::array();
    for (const auto& t : res.terms) {
      Json td = Json::array();
      for (const auto& d : t.degrees()) td.push_back(monoid_elt_to_json(d));
      degs.push_back(std::move(td));
    }
    j["degrees"] = std::move(degs);
  }
  if (with_matrices) {
    Json diffs = Json::array();
    for (const auto& d : res.diffs) diffs.push_back(matrix_to_json(f, d));
    j["diffs"] = std::move(diffs);
  }
  return j;
}

inline Json tor_to_json(const TorTable& t) {
  return Json{{"kind", t.relative ? "relative" : "ordinary"},
              {"dims", t.dims},
              {"kmax", t.dims.empty() ? 0 : t.dims.size() - 1}};
}

inline Json verify_to_json(const VerifyReport& r) {
  return Json{{"exact", r.exact},
              {"projective_terms", r.projective_terms},
              {"minimal", r.minimal},
              {"detail", r.detail},
              {"holds", r.holds()}};
}

inline Json thm26_to_json(const Thm26Report& r) {
  return Json{{"hypotheses_ok", r.hypotheses_ok},
              {"graded_check", verify_to_json(r.graded_check)},
              {"forgotten_check", verify_to_json(r.forgotten_check)},
              {"graded_dims", r.graded_dims},
              {"ungraded_dims", r.ungraded_dims},
              {"dims_equal", r.dims_equal},
              {"holds", r.holds}};
}

inline Json axioms_to_json(const TwistedAxiomsReport& r) {
  return Json{{"units_agree", r.units_agree},
              {"splits_as_pair", r.splits_as_pair},
              {"left_multiplicative", r.left_multiplicative},
              {"right_multiplicative", r.right_multiplicative},
              {"holds", r.all()}};
}

inline Json thm36_to_json(const Thm36Report& r) {
  Json shifts = Json::array(), failing = Json::array();
  for (const auto& g : r.shifts_checked) shifts.push_back(monoid_elt_to_json(g));
  for (const auto& g : r.failing_shifts) failing.push_back(monoid_elt_to_json(g));
  return Json{{"hypotheses_ok", r.hypotheses_ok},
              {"shifts_checked", std::move(shifts)},
              {"failing_shifts", std::move(failing)},
              {"image_check", verify_to_json(r.image_check)},
              {"matches_direct", r.matches_direct},
              {"holds", r.holds}};
}

inline Json stratifying_to_json(const StratifyingReport& r) {
  Json j{{"ideal_dim", r.ideal_dim},
         {"quotient_dim", r.quotient_dim},
         {"ordinary", tor_to_json(r.ordinary)},
         {"stratifying", r.ordinary_stratifying}};
  if (r.relative) {
    j["relative"] = tor_to_json(*r.relative);
    j["relative_stratifying"] = *r.relative_stratifying;
    j["modules_projective_over_r"] = *r.modules_projective_over_r;
    j["a_free_over_r"] = *r.a_free_over_r;
  }
  return j;
}

inline Json thm43_to_json(const Thm43Report& r) {
  return Json{{"hypotheses", stratifying_to_json(r.hypotheses)},
              {"hypotheses_ok", r.hypotheses_ok},
              {"verdict_given", r.verdict_given},
              {"image_check", verify_to_json(r.image_check)},
              {"matches_direct", r.matches_direct},
              {"holds", r.holds}};
}

template <FieldLike F>
Json smash_to_json(const SmashAlgebra<F>& s) {
  Json j = algebra_to_json(*s.product);
  j["provenance"] = Json{{"construction", "twisted_product"},
                         {"left_basis", s.a->labels()},
                         {"right_basis", s.b->labels()},
                         {"left_dim", s.a->dim()},
                         {"right_dim", s.b->dim()}};
  return j;
}

}  // namespace gradres
