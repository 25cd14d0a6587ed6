#include "corecalc/json_io.hpp"

#include "corecalc/errors.hpp"
#include "corecalc/subdiff.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace {

Json parse(const char* text) { return Json::parse(text); }

}  // namespace

TEST_CASE("rationals travel as exact strings") {
  CHECK(to_json(Rational(3, 4)).get<std::string>() == "3/4");
  CHECK(to_json(Rational(-2)).get<std::string>() == "-2");
  CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK(rational_from_json(Json("-7/2")) == Rational(-7, 2));
  CHECK_THROWS_AS(rational_from_json(Json("elephant")), InputError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), InputError);
}

TEST_CASE("vectors round-trip and length checks bite") {
  const Vec v = vecq({Rational(1, 2), Rational(-3)});
  const Vec back = vec_from_json(to_json(v));
  CHECK(vec_eq(v, back));
  CHECK_THROWS_AS(vec_from_json(to_json(v), 3), InputError);
  CHECK_THROWS_AS(vec_from_json(Json{{"not", "an array"}}), InputError);
}

TEST_CASE("constraint descriptors parse in flat and nested form") {
  const Json flat = parse(R"({
    "dim": 2,
    "ineqs": [{"a": [1, 0], "b": 1}, {"a": [-1, 0], "b": 0},
              {"a": [0, 1], "b": 1}, {"a": [0, -1], "b": 0}]
  })");
  CHECK(set_equal(polyhedron_from_json(flat), unit_square()));

  const Json nested = parse(R"({"kind": "polyhedron", "hrep": {
    "dim": 2,
    "ineqs": [{"a": [1, 0], "b": 1}, {"a": [-1, 0], "b": 0},
              {"a": [0, 1], "b": 1}, {"a": [0, -1], "b": 0}]
  }})");
  CHECK(set_equal(polyhedron_from_json(nested), unit_square()));

  const Json eqs = parse(R"({"dim": 2, "eqs": [{"a": [1, -1], "b": 0}]})");
  CHECK(contains(polyhedron_from_json(eqs), vec({3, 3})));
  CHECK_FALSE(contains(polyhedron_from_json(eqs), vec({3, 2})));
}

TEST_CASE("generator descriptors parse, including edge cases") {
  const Json cone = parse(R"({
    "dim": 2, "vertices": [[0, 0]], "rays": [[1, 0], [1, 1]]
  })");
  const Polyhedron c = polyhedron_from_json(cone);
  CHECK(contains(c, vec({5, 3})));
  CHECK_FALSE(contains(c, vec({1, 2})));

  const Json empty = parse(R"({"dim": 3, "vertices": [], "rays": []})");
  CHECK(polyhedron_from_json(empty).is_empty());

  // A ray bundle with no base point does not describe a set.
  const Json baseless = parse(R"({"dim": 2, "vertices": [], "rays": [[1, 0]]})");
  CHECK_THROWS_AS(polyhedron_from_json(baseless), InputError);

  const Json fraction = parse(R"({"dim": 1, "vertices": [["1/3"], ["2/3"]]})");
  CHECK(set_equal(polyhedron_from_json(fraction),
                  Polyhedron::from_vrep(
                      VRep{1, {vecq({Rational(1, 3)}), vecq({Rational(2, 3)})}, {}})));
}

TEST_CASE("set serialization round-trips through both representations") {
  const Polyhedron cases[] = {
      unit_square(),
      B{2}.le({0, 1}, 0).p(),                            // half-plane
      B{2}.equ({1, -1}, 0).p(),                          // line (lineality)
      singleton(vecq({Rational(1, 2), Rational(-3)})),   // point
      Polyhedron(HRep::empty_set(2)),                    // empty
      B{3}.le({1, 1, 1}, 1).le({-1, 0, 0}, 0).le({0, -1, 0}, 0).le({0, 0, -1}, 0).p(),
  };
  for (const Polyhedron& p : cases) {
    const Json j = set_to_json(p);
    CHECK(j.contains("hrep"));
    CHECK(j.contains("vrep"));
    CHECK(j["empty"].get<bool>() == p.is_empty());
    // Constraint form wins on re-parse; strip it to exercise the generator path.
    Json gen = j;
    gen.erase("hrep");
    CHECK(set_equal(polyhedron_from_json(j), p));
    CHECK(set_equal(polyhedron_from_json(gen), p));
  }
}

TEST_CASE("function descriptors validate on parse") {
  const Json abs = parse(R"({
    "dim": 1,
    "epi": {"dim": 2, "ineqs": [{"a": [1, -1], "b": 0}, {"a": [-1, -1], "b": 0}]}
  })");
  const PolyFunction f = function_from_json(abs);
  CHECK(evaluate(f, vecq({Rational(-2)})) == ExtRational(Rational(2)));

  // Epigraph missing the upward direction is rejected during validation.
  const Json capped = parse(R"({
    "dim": 1,
    "epi": {"dim": 2, "ineqs": [{"a": [0, 1], "b": 1}, {"a": [0, -1], "b": 0}]}
  })");
  CHECK_THROWS_AS(function_from_json(capped), InputError);
  CHECK_THROWS_AS(function_from_json(parse(R"({"dim": 1})")), InputError);
}

TEST_CASE("map and matrix descriptors parse") {
  const Json m = parse(R"({
    "dim_in": 1, "dim_out": 1,
    "graph": {"dim": 2, "ineqs": [{"a": [1, -1], "b": 0}]}
  })");
  const SetValuedMap f = map_from_json(m);
  CHECK(contains(map_value(f, vecq({Rational(0)})), vecq({Rational(3)})));

  const Json bad_dim = parse(R"({
    "dim_in": 2, "dim_out": 2,
    "graph": {"dim": 2, "ineqs": [{"a": [1, -1], "b": 0}]}
  })");
  CHECK_THROWS_AS(map_from_json(bad_dim), InputError);

  const Json a = parse(R"({"rows": 2, "cols": 3, "entries": [[1, 0, "1/2"], [0, 1, -1]]})");
  const Mat mat = matrix_from_json(a);
  REQUIRE(mat.rows() == 2);
  REQUIRE(mat.cols() == 3);
  CHECK(mat(0, 2) == Rational(1, 2));
  CHECK(mat(1, 2) == Rational(-1));
  CHECK_THROWS_AS(matrix_from_json(parse(R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})")),
                  InputError);
}

TEST_CASE("malformed descriptors name the problem") {
  CHECK_THROWS_AS(polyhedron_from_json(parse(R"({"ineqs": []})")), InputError);  // no dim
  CHECK_THROWS_AS(polyhedron_from_json(parse(R"({"dim": 0, "ineqs": []})")), InputError);
  CHECK_THROWS_AS(polyhedron_from_json(parse(R"({"dim": 2, "kind": "function"})")), InputError);
  CHECK_THROWS_AS(polyhedron_from_json(parse(
                      R"({"dim": 2, "ineqs": [{"a": [1], "b": 0}]})")),
                  InputError);  // row width mismatch
}
