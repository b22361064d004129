#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "comdec/io.hpp"
#include "helpers.hpp"

using namespace comdec;
using th::fp;
using th::q;
using th::si;

namespace {

bool mentions(const Error& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

template <typename E, typename Fn>
void check_throws_mentioning(Fn fn, const std::string& needle) {
  try {
    fn();
    FAIL_CHECK("expected an exception mentioning '" << needle << "'");
  } catch (const E& e) {
    CHECK_MESSAGE(mentions(e, needle), "message was: " << e.what());
  }
}

}  // namespace

TEST_CASE("field round trip and rejection") {
  CHECK(parse_field(field_to_json(q())) == q());
  CHECK(parse_field(field_to_json(fp(7))) == fp(7));
  CHECK(field_to_json(q()) == Json{{"kind", "Q"}});

  check_throws_mentioning<SchemaError>([] { parse_field(Json{{"kind", "Fp"}, {"p", 6}}); },
                                       "$.p");
  CHECK_THROWS_AS(parse_field(Json{{"kind", "R"}}), SchemaError);
  CHECK_THROWS_AS(parse_field(Json{{"kind", "Fp"}}), SchemaError);
  CHECK_THROWS_AS(parse_field(Json{{"kind", "Fp"}, {"p", "7"}}), SchemaError);
  CHECK_THROWS_AS(parse_field(Json("Q")), SchemaError);
  CHECK_THROWS_AS(parse_field(Json{{"kind", "Q"}, {"extra", 1}}), SchemaError);
}

TEST_CASE("scalar forms") {
  Scalar s = Scalar(q(), -2, 3);
  CHECK(parse_scalar(q(), scalar_to_json(s)) == s);
  CHECK(scalar_to_json(s) == Json("-2/3"));
  CHECK(parse_scalar(q(), Json(5)) == si(q(), 5));  // integers accepted on input
  CHECK(parse_scalar(fp(7), Json("13")) == si(fp(7), 6));
  check_throws_mentioning<SchemaError>([] { parse_scalar(q(), Json("x"), "$.a"); }, "$.a");
  CHECK_THROWS_AS(parse_scalar(q(), Json(1.5)), SchemaError);
  CHECK_THROWS_AS(parse_scalar(q(), Json::array()), SchemaError);
}

TEST_CASE("matrix round trip") {
  Mat m = th::mat(q(), {{"1", "-1/2"}, {"0", "3"}});
  Json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(parse_matrix(q(), j) == m);
  CHECK(j.dump() == matrix_to_json(parse_matrix(q(), j)).dump());

  // ragged entries
  CHECK_THROWS_AS(parse_matrix(q(), Json{{"entries", Json::array({Json::array({"1", "2"}),
                                                                  Json::array({"3"})})}}),
                  SchemaError);
  // declared shape must match
  j["cols"] = 3;
  CHECK_THROWS_AS(parse_matrix(q(), j), SchemaError);
  CHECK_THROWS_AS(parse_matrix(q(), Json{{"cols", 2}}), SchemaError);
}

TEST_CASE("subspace serialization canonicalizes") {
  // the stored basis is RREF, so scaled spanning vectors parse to equality
  Json j{{"ambient", 3},
         {"basis", Json::array({Json::array({"2", "2", "0"}), Json::array({"0", "0", "-5"})})}};
  Subspace s = parse_subspace(q(), j);
  Subspace expect = Subspace::from_vectors(
      q(), 3, {{si(q(), 1), si(q(), 1), si(q(), 0)}, {si(q(), 0), si(q(), 0), si(q(), 1)}});
  CHECK(s == expect);
  CHECK(parse_subspace(q(), subspace_to_json(s)) == s);
  check_throws_mentioning<SchemaError>(
      [] {
        parse_subspace(q(), Json{{"ambient", 2}, {"basis", Json::array({Json::array({"1"})})}});
      },
      "$.basis[0]");
}

TEST_CASE("group round trip, builders, and semantic forwarding") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  Json js3 = group_to_json(s3);
  CHECK(js3["order"] == 6);
  CHECK(js3.contains("table"));
  FiniteGroup back = parse_group(js3);
  CHECK(back.same_structure(s3));
  CHECK(back.labels() == s3.labels());
  CHECK(back.identity() == s3.identity());

  // a declared order must match the table
  js3["order"] = 7;
  CHECK_THROWS_AS(parse_group(js3), SchemaError);

  CHECK(parse_group(Json{{"cyclic", 4}}).same_structure(FiniteGroup::cyclic(4)));
  CHECK(parse_group(Json{{"name", "quaternion8"}}).same_structure(FiniteGroup::quaternion8()));
  CHECK_THROWS_AS(parse_group(Json{{"name", "monster"}}), SchemaError);
  CHECK_THROWS_AS(parse_group(Json{{"cyclic", 2}, {"name", "klein4"}}), SchemaError);
  CHECK_THROWS_AS(parse_group(Json::object()), SchemaError);

  // ragged table: shape problem, reported as schema
  CHECK_THROWS_AS(parse_group(Json{{"cayley", Json::array({Json::array({0, 1}),
                                                           Json::array({1})})}}),
                  SchemaError);

  // a well-shaped non-group parses; the axioms are the group module's business
  FiniteGroup broken = parse_group(Json{{"cayley", Json::array({Json::array({0, 0}),
                                                                Json::array({1, 1})})}});
  CHECK(broken.validate().has_value());
}

TEST_CASE("cocycle round trip and builders") {
  FiniteGroup v4 = FiniteGroup::klein4();
  TwistingFunction tau = TwistingFunction::quaternionic(v4, q());
  TwistingFunction back = parse_cocycle(v4, q(), cocycle_to_json(tau));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(back.value(x, y) == tau.value(x, y));
  CHECK_FALSE(back.validate().has_value());

  TwistingFunction triv = parse_cocycle(v4, q(), Json{{"kind", "trivial"}});
  CHECK(triv.value(1, 2) == si(q(), 1));
  CHECK_THROWS_AS(parse_cocycle(v4, q(), Json{{"kind", "weird"}}), SchemaError);
  CHECK_THROWS_AS(parse_cocycle(v4, q(), Json::object()), SchemaError);
  // ragged values: rejected by the twisting function itself
  CHECK_THROWS_AS(parse_cocycle(v4, q(), Json{{"values", Json::array({Json::array({"1"})})}}),
                  InvalidParams);
}

TEST_CASE("poly round trip and builders") {
  NcPoly s4 = standard_polynomial(q(), 4);
  CHECK(parse_poly(poly_to_json(s4)) == s4);

  Json jq = field_to_json(q());
  CHECK(parse_poly(Json{{"field", jq}, {"standard", 4}}) == s4);
  CHECK(parse_poly(Json{{"field", jq}, {"gn", 2}}) == build_gn(q(), 2));

  // explicit terms: [x0, x1] as two signed words
  Json comm{{"field", jq},
            {"terms", Json::array({Json{{"word", Json::array({0, 1})}, {"coeff", "1"}},
                                   Json{{"word", Json::array({1, 0})}, {"coeff", "-1"}}})}};
  NcPoly expected = nc_commutator(NcPoly::variable(q(), 0), NcPoly::variable(q(), 1));
  CHECK(parse_poly(comm) == expected);

  // the compact pair form is accepted too
  Json pairs{{"field", jq},
             {"terms", Json::array({Json::array({Json::array({0, 1}), "1"}),
                                    Json::array({Json::array({1, 0}), "-1"})})}};
  CHECK(parse_poly(pairs) == expected);

  // duplicate words accumulate, zero coefficients drop out
  Json cancel{{"field", jq},
              {"terms", Json::array({Json::array({Json::array({0}), "1"}),
                                     Json::array({Json::array({0}), "-1"})})}};
  CHECK(parse_poly(cancel).is_zero());

  CHECK_THROWS_AS(parse_poly(Json{{"field", jq}}), SchemaError);
  CHECK_THROWS_AS(parse_poly(Json{{"field", jq}, {"standard", 4}, {"gn", 2}}), SchemaError);
  check_throws_mentioning<SchemaError>(
      [&] {
        parse_poly(Json{{"field", jq},
                        {"terms", Json::array({Json::array({Json::array({-1}), "1"})})}});
      },
      "$.terms[0][0][0]");
}

TEST_CASE("element round trip") {
  auto a = build_matrix_algebra(q(), 2);
  a->validate();
  AlgebraPtr ap = a;
  Element x = ap->element({si(q(), 1), si(q(), 2), si(q(), 3), si(q(), 4)});
  CHECK(parse_element(ap, element_to_json(x)) == x);
  CHECK_THROWS_AS(parse_element(ap, Json{{"coords", Json::array({"1", "2"})}}), SchemaError);
}

TEST_CASE("raw algebra specs round trip through serialization") {
  auto m2 = build_matrix_algebra(q(), 2);
  m2->validate();
  Json j = algebra_to_json(*m2);
  AlgebraPtr back = parse_algebra_spec(j);
  CHECK(back->validated());
  CHECK(back->field() == m2->field());
  CHECK(back->dim() == m2->dim());
  CHECK(back->labels() == m2->labels());
  CHECK(back->unit_coords() == m2->unit_coords());
  CHECK(back->table() == m2->table());
  CHECK(algebra_to_json(*back).dump() == j.dump());
}

TEST_CASE("builder specs match the library builders") {
  // quaternion spec from the documented example
  Json quat{{"quaternion", {{"a", "-1"}, {"b", "-1"}}}, {"field", {{"kind", "Q"}}}};
  AlgebraPtr qa = parse_algebra_spec(quat);
  AlgebraPtr direct = build_quaternion(q(), si(q(), -1), si(q(), -1));
  CHECK(qa->table() == direct->table());
  CHECK(qa->unit_coords() == direct->unit_coords());

  Json m3{{"matrix", {{"n", 3}}}, {"field", {{"kind", "Q"}}}};
  CHECK(parse_algebra_spec(m3)->table() == build_matrix_algebra(q(), 3)->table());

  Json ga{{"group_algebra", {{"group", {{"cyclic", 2}}}}}, {"field", {{"kind", "Q"}}}};
  CHECK(parse_algebra_spec(ga)->table() ==
        build_group_algebra(FiniteGroup::cyclic(2), q())->table());

  // the quaternionic twist of the Klein group is the Hamilton table again
  Json tw{{"twisted_group",
           {{"group", {{"name", "klein4"}}}, {"tau", {{"kind", "quaternionic"}}}}},
          {"field", {{"kind", "Q"}}}};
  CHECK(parse_algebra_spec(tw)->table() == direct->table());

  Json prod{{"product", Json::array({m3, quat})}};
  AlgebraPtr p = parse_algebra_spec(prod);
  CHECK(p->dim() == 13);
  CHECK(p->validated());
}

TEST_CASE("nested matrix-over builder") {
  Json inner{{"quaternion", {{"a", "-1"}, {"b", "-1"}}}, {"field", {{"kind", "Q"}}}};
  Json outer{{"matrix", {{"n", 2}, {"over", inner}}}};
  AlgebraPtr m2h = parse_algebra_spec(outer);
  CHECK(m2h->dim() == 16);
  CHECK(m2h->validated());
  CHECK(m2h->field() == q());

  Json clash{{"matrix", {{"n", 2}, {"over", inner}}}, {"field", {{"kind", "Q"}}}};
  CHECK_THROWS_AS(parse_algebra_spec(clash), SchemaError);
}

TEST_CASE("spec form detection") {
  CHECK_THROWS_AS(parse_algebra_spec(Json::object()), SchemaError);
  Json two{{"matrix", {{"n", 2}}}, {"quaternion", {{"a", "1"}, {"b", "1"}}},
           {"field", {{"kind", "Q"}}}};
  CHECK_THROWS_AS(parse_algebra_spec(two), SchemaError);
  Json unknown{{"matrix", {{"n", 2}}}, {"field", {{"kind", "Q"}}}, {"workers", 4}};
  CHECK_THROWS_AS(parse_algebra_spec(unknown), SchemaError);
  check_throws_mentioning<SchemaError>(
      [] {
        parse_algebra_spec(Json{{"matrix", {{"n", 2}}}, {"field", {{"kind", "Fp"}, {"p", 6}}}});
      },
      "$.field.p");
  CHECK_THROWS_AS(parse_algebra_spec(Json{{"product", Json::array()}}), SchemaError);
}

TEST_CASE("semantic violations are forwarded, not schema errors") {
  // non-associative raw table: (e1 e1) e1 = 0 but e1 (e1 e1) = e0
  Json bad{{"field", {{"kind", "Q"}}},
           {"dim", 3},
           {"basis", Json::array({"u", "a", "b"})},
           {"unit", Json::array({"1", "0", "0"})},
           {"mul", Json::array({
                       Json::array({0, 0, 0, "1"}),
                       Json::array({0, 1, 1, "1"}),
                       Json::array({0, 2, 2, "1"}),
                       Json::array({1, 0, 1, "1"}),
                       Json::array({2, 0, 2, "1"}),
                       Json::array({1, 1, 2, "1"}),
                       Json::array({1, 2, 0, "1"}),
                   })}};
  CHECK_THROWS_AS(parse_algebra_spec(bad), InvalidParams);

  // group axioms fail inside a builder: forwarded from the group module
  Json nonlatin{{"group_algebra",
                 {{"group", {{"cayley", Json::array({Json::array({0, 0}),
                                                     Json::array({1, 1})})}}}}},
                {"field", {{"kind", "Q"}}}};
  CHECK_THROWS_AS(parse_algebra_spec(nonlatin), InvalidParams);
}

TEST_CASE("text and file entry points") {
  std::string text = R"({"matrix": {"n": 2}, "field": {"kind": "Q"}})";
  CHECK(parse_algebra_spec_text(text)->dim() == 4);
  CHECK_THROWS_AS(parse_algebra_spec_text("not json at all"), SchemaError);

  auto path = std::filesystem::temp_directory_path() / "comdec_io_test.json";
  {
    std::ofstream out(path);
    out << text;
  }
  Json loaded = load_json_file(path.string());
  CHECK(parse_algebra_spec(loaded)->dim() == 4);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_json_file(path.string()), SchemaError);

  auto bad = std::filesystem::temp_directory_path() / "comdec_io_bad.json";
  {
    std::ofstream out(bad);
    out << "{ broken";
  }
  CHECK_THROWS_AS(load_json_file(bad.string()), SchemaError);
  std::filesystem::remove(bad);
}

TEST_CASE("parsed algebras drive the analysis modules") {
  Json spec{{"matrix", {{"n", 2}}}, {"field", {{"kind", "Fp"}, {"p", 2}}}};
  AlgebraPtr m2f2 = parse_algebra_spec(spec);
  auto report = m2f2->check_decomposition();
  CHECK_FALSE(report.holds);
  CHECK(report.dim_sum == 3);

  Json hq{{"quaternion", {{"a", "-1"}, {"b", "-1"}}}, {"field", {{"kind", "Q"}}}};
  AlgebraPtr h = parse_algebra_spec(hq);
  CHECK(h->check_decomposition().holds);
}
