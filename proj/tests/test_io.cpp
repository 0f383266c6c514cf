#include "gradres/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace gradres;
using PF = PrimeField;
using QF = RationalField;

namespace {

AlgebraPtr<PF> d2() {
  PF f(2);
  QuiverPresentation q;
  q.vertices = 1;
  q.arrows = {{0, 0, "x"}};
  q.relations = {{{{0, 0}}, {"1"}}};
  return share(path_algebra(f, q));
}

Json d2_json() {
  return Json{
      {"field", {{"kind", "prime"}, {"p", 2}}},
      {"basis", {"e", "x"}},
      {"unit", {1, 0}},
      {"mul", Json::array({Json::array({0, 0, 0, 1}), Json::array({0, 1, 1, 1}),
                           Json::array({1, 0, 1, 1})})},
      {"grading",
       {{"monoid", {{"kind", "natural"}}}, {"degrees", Json::array({0, 1})}}},
  };
}

}  // namespace

TEST_CASE("field descriptors round-trip and default to characteristic two") {
  const FieldSpec p5 = field_from_json(Json{{"kind", "prime"}, {"p", 5}});
  REQUIRE(p5.kind == FieldSpec::Kind::prime);
  REQUIRE(p5.p == 5);
  REQUIRE(field_from_json(field_to_json(p5)).p == 5);
  const FieldSpec q = field_from_json(Json{{"kind", "rational"}});
  REQUIRE(q.kind == FieldSpec::Kind::rationals);
  REQUIRE(field_from_json(field_to_json(q)).kind == FieldSpec::Kind::rationals);
  const FieldSpec dflt = declared_field(Json{{"basis", Json::array()}});
  REQUIRE(dflt.kind == FieldSpec::Kind::prime);
  REQUIRE(dflt.p == 2);
  REQUIRE_THROWS_AS(field_from_json(Json{{"kind", "octonion"}}), input_error);
}

TEST_CASE("scalars parse from integers or strings over either field") {
  PF f(7);
  REQUIRE(scalar_from_json(f, Json(9)) == f.from_int(9));
  REQUIRE(scalar_from_json(f, Json("9")) == f.from_int(2));
  REQUIRE(scalar_to_json(f, f.from_int(-1)) == Json(6));
  QF r;
  REQUIRE(scalar_from_json(r, Json("3/7")) == r.parse("3/7"));
  REQUIRE(scalar_from_json(r, Json(4)) == r.from_int(4));
  REQUIRE(scalar_to_json(r, r.parse("3/7")) == Json("3/7"));
  REQUIRE_THROWS_AS(scalar_from_json(f, Json::array()), input_error);
}

TEST_CASE("matrices round-trip and ragged input is rejected") {
  PF f(3);
  Matrix<PF> m(2, 3);
  m(0, 0) = 1;
  m(1, 2) = 2;
  const Matrix<PF> back = matrix_from_json(f, matrix_to_json(f, m));
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 3);
  REQUIRE(back(1, 2) == 2);
  REQUIRE_THROWS_AS(
      matrix_from_json(f, Json::parse(R"([[1, 2], [1]])")), input_error);
  const Vec<PF> v = vec_from_json(f, Json::parse("[1, 5, \"2\"]"));
  REQUIRE(v == Vec<PF>({1, 2, 2}));
}

TEST_CASE("monoid descriptions survive a round trip") {
  const GradedMonoid n = monoid_from_json(monoid_to_json(GradedMonoid::natural()));
  REQUIRE(n.kind() == MonoidKind::natural);
  REQUIRE(n.leq({2}, {5}));

  const GradedMonoid p2 =
      monoid_from_json(monoid_to_json(GradedMonoid::natural_power(2)));
  REQUIRE(p2.kind() == MonoidKind::natural_power);
  REQUIRE(p2.dim() == 2);
  REQUIRE(p2.leq({1, 0}, {1, 2}));

  const Json capped = Json{
      {"kind", "table"},
      {"elements", {"0", "1", "2+"}},
      {"identity", 0},
      {"mul", {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}},
      {"order",
       Json::array({Json::array({0, 1}), Json::array({0, 2}), Json::array({1, 2})})}};
  const GradedMonoid g = monoid_from_json(capped);
  REQUIRE(g.table_size() == 3);
  REQUIRE(g.op({1}, {2}) == MonoidElt{2});
  const GradedMonoid g2 = monoid_from_json(monoid_to_json(g));
  REQUIRE(g2.op({1}, {2}) == MonoidElt{2});
  REQUIRE(g2.lt({0}, {2}));
  REQUIRE(monoid_to_json(g2) == monoid_to_json(g));
  const OrderReport before = g.validate(), after = g2.validate();
  REQUIRE(before.is_ordered == after.is_ordered);
  REQUIRE(before.e_is_least == after.e_is_least);
  REQUIRE(before.well_founded == after.well_founded);
  REQUIRE(after.e_is_least);

  REQUIRE_THROWS_AS(monoid_from_json(Json{{"kind", "free"}}), input_error);
}

TEST_CASE("structure-constant algebras load, validate, and round-trip") {
  PF f(2);
  const AlgebraPtr<PF> a = algebra_from_json(f, d2_json());
  REQUIRE(a->dim() == 2);
  REQUIRE(a->is_graded());
  REQUIRE(a->degree(1) == MonoidElt{1});
  const Vec<PF> xx = mat_vec(f, a->left_mult(unit_vec(f, 2, 1)), unit_vec(f, 2, 1));
  REQUIRE(xx == zero_vec(f, 2));

  const AlgebraPtr<PF> b = algebra_from_json(f, algebra_to_json(*a));
  REQUIRE(same_structure(*a, *b));
  REQUIRE(b->is_graded());
}

TEST_CASE("quiver descriptions use arrow labels in relations") {
  PF f(2);
  const Json qj = Json{
      {"vertices", 1},
      {"arrows", Json::array({Json::array({0, 0, "x"})})},
      {"relations",
       Json::array({Json{{"paths", Json::array({Json::array({"x", "x"})})},
                         {"coeffs", Json::array({1})}}})},
  };
  const AlgebraPtr<PF> a = algebra_from_json(f, qj);
  REQUIRE(same_structure(*a, *d2()));

  Json bad = qj;
  bad["relations"][0]["paths"][0][0] = "y";
  REQUIRE_THROWS_AS(algebra_from_json(f, bad), input_error);
}

TEST_CASE("modules round-trip with their gradings intact") {
  PF f(2);
  const AlgebraPtr<PF> a = d2();
  const Module<PF> reg = regular_module(a);
  const Json j = module_to_json(reg);
  const AlgebraPtr<PF> a2 = algebra_from_json(f, j.at("algebra"));
  const Module<PF> back = module_from_json(f, j, a2);
  REQUIRE(same_module_presentation(reg, back));
  REQUIRE(back.is_graded());
  REQUIRE(back.degrees() == reg.degrees());

  Json bad = j;
  bad["action"][0][0][0] = 1;
  bad["action"][0][0][1] = 1;
  bad["action"][1][0][0] = 1;  // unit no longer acts as the identity
  REQUIRE_THROWS_AS(module_from_json(f, bad, a2), input_error);
}

TEST_CASE("ideal generators and balancing subalgebras parse") {
  PF f(2);
  const AlgebraPtr<PF> a = d2();
  const Json ideal = Json{{"generators", Json::array({Json::array({0, 1})})}};
  const Matrix<PF> gen = generators_from_json(f, ideal, a->dim());
  REQUIRE(gen.cols() == 1);
  REQUIRE(gen(1, 0) == 1);
  REQUIRE_THROWS_AS(
      generators_from_json(f, Json{{"generators", Json::array({Json::array({1})})}},
                           a->dim()),
      input_error);

  const SubalgebraR<PF> ground =
      subalgebra_from_json(f, Json{{"kind", "ground"}}, *a);
  REQUIRE(ground.kind == SubalgebraR<PF>::Kind::ground_field);
  const Json idem = Json{{"kind", "idempotents"},
                         {"elements", Json::array({Json::array({1, 0})})}};
  REQUIRE(subalgebra_from_json(f, idem, *a).kind ==
          SubalgebraR<PF>::Kind::idempotent_span);
  REQUIRE(subalgebra_from_json(f, Json{{"kind", "vertex_span"}}, *a).kind ==
          SubalgebraR<PF>::Kind::idempotent_span);
  const AlgebraPtr<PF> bare = algebra_from_json(f, d2_json());
  REQUIRE(!bare->has_idempotents());
  REQUIRE_THROWS_AS(subalgebra_from_json(f, Json{{"kind", "vertex_span"}}, *bare),
                    input_error);
}

TEST_CASE("reports serialize with their verdicts") {
  PF f(2);
  const AlgebraPtr<PF> a = d2();
  const Module<PF> reg = regular_module(a);
  const Module<PF> k = quotient_module(reg, radical_submodule(reg)).quotient;
  const Resolution<PF> res = minimal_resolution(k, 3, true);
  const Json rj = resolution_to_json(f, res, true);
  REQUIRE(rj.at("dims") == Json(std::vector<std::size_t>{2, 2, 2, 2}));
  REQUIRE(rj.at("graded") == true);
  REQUIRE(rj.contains("degrees"));
  REQUIRE(rj.at("diffs").size() == 4);

  const Json vj = verify_to_json(verify_resolution(res));
  REQUIRE(vj.at("holds") == true);

  TorTable t{false, {1, 1}};
  REQUIRE(tor_to_json(t).at("kind") == "ordinary");
  REQUIRE(tor_to_json(t).at("kmax") == 1);

  const Json tj = thm26_to_json(theorem_2_6_check(k, 2));
  REQUIRE(tj.at("holds") == true);
  REQUIRE(tj.at("graded_dims") == tj.at("ungraded_dims"));
}

TEST_CASE("file loading reports parse failures as bad input") {
  const std::string good = "/tmp/gradres_io_good.json";
  const std::string bad = "/tmp/gradres_io_bad.json";
  {
    std::ofstream out(good);
    out << R"({"kind": "prime", "p": 3})";
    std::ofstream out2(bad);
    out2 << "{ not json";
  }
  REQUIRE(field_from_json(load_json_file(good)).p == 3);
  REQUIRE_THROWS_AS(load_json_file(bad), input_error);
  REQUIRE_THROWS_AS(load_json_file("/tmp/gradres_io_missing.json"), input_error);
  std::remove(good.c_str());
  std::remove(bad.c_str());

  const Json ref = Json("gradres_io_good.json");
  REQUIRE_THROWS_AS(resolve_ref(Json(3), "/tmp"), input_error);
}
