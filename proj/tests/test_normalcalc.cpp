#include "corecalc/normalcalc.hpp"

#include "corecalc/corealg.hpp"
#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace {

PolyCone cone_of(std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Vec> gs;
  for (const auto& g : gens) gs.push_back(vec(g));
  return make_cone(2, std::move(gs), {});
}

// F(x) = {y : y >= x} over one input and one output coordinate.
SetValuedMap epigraph_map() { return make_map(1, 1, B{2}.le({1, -1}, 0).p()); }

// F(x) = {y : y >= |x|}.
SetValuedMap vee_map() { return make_map(1, 1, B{2}.le({1, -1}, 0).le({-1, -1}, 0).p()); }

// F(x) = {0} for every x.
SetValuedMap zero_map() { return make_map(1, 1, B{2}.equ({0, 1}, 0).p()); }

// The identity set-valued map y -> {y}.
SetValuedMap identity_map() { return make_map(1, 1, B{2}.equ({1, -1}, 0).p()); }

Vec v1(int x) { return vec({x}); }

}  // namespace

TEST_CASE("cone normalization") {
  const PolyCone c = make_cone(2, {vec({2, 2}), vec({1, 1}), vec({0, 0})}, {});
  CHECK(c.generators.size() == 1);
  CHECK(vec_eq(c.generators[0], vec({1, 1})));
  // Generators collapse onto the lineality quotient.
  const PolyCone q = make_cone(2, {vec({1, 1})}, {vec({1, 0})});
  CHECK(q.lineality.size() == 1);
  REQUIRE(q.generators.size() == 1);
  CHECK(vec_eq(q.generators[0], vec({0, 1})));
  // A generator inside the lineality span vanishes entirely.
  const PolyCone z = make_cone(2, {vec({-3, 0})}, {vec({1, 0})});
  CHECK(z.generators.empty());
  CHECK_THROWS_AS((void)make_cone(2, {vec({1})}, {}), DimensionMismatch);
}

TEST_CASE("cone as a set") {
  const Polyhedron quad = cone_as_polyhedron(cone_of({{1, 0}, {0, 1}}));
  CHECK(set_equal(quad, B{2}.le({-1, 0}, 0).le({0, -1}, 0).p()));
  const Polyhedron line = cone_as_polyhedron(make_cone(2, {}, {vec({0, 1})}));
  CHECK(set_equal(line, B{2}.equ({1, 0}, 0).p()));
  const Polyhedron origin = cone_as_polyhedron(make_cone(2, {}, {}));
  CHECK(set_equal(origin, singleton(vec({0, 0}))));
}

TEST_CASE("cone sum concatenates generator systems") {
  const PolyCone s = cone_sum(cone_of({{1, 0}}), cone_of({{0, 1}}));
  CHECK(cone_equal(s, cone_of({{1, 0}, {0, 1}})));
  CHECK(s.generators.size() == 2);
  // Opposite rays stay a generator pair, yet equal the line as a set.
  const PolyCone pair = cone_sum(cone_of({{0, 1}}), cone_of({{0, -1}}));
  CHECK(pair.lineality.empty());
  CHECK(pair.generators.size() == 2);
  CHECK(cone_equal(pair, make_cone(2, {}, {vec({0, 1})})));
}

TEST_CASE("cone negation and intersection") {
  CHECK(cone_equal(cone_neg(cone_of({{1, 0}, {0, 1}})), cone_of({{-1, 0}, {0, -1}})));
  const PolyCone meet = cone_intersect(cone_of({{1, 0}, {0, 1}}), cone_of({{-1, 0}, {0, 1}}));
  CHECK(cone_equal(meet, cone_of({{0, 1}})));
  const PolyCone lines_meet =
      cone_intersect(make_cone(2, {}, {vec({1, 0})}), make_cone(2, {}, {vec({0, 1})}));
  CHECK(cone_is_trivial(lines_meet));
  const PolyCone half_meet = cone_intersect(make_cone(2, {}, {vec({0, 1})}),
                                            cone_of({{0, 1}, {1, 1}}));
  CHECK(cone_equal(half_meet, cone_of({{0, 1}})));
}

TEST_CASE("trivial cone recognition") {
  CHECK(cone_is_trivial(make_cone(2, {}, {})));
  CHECK_FALSE(cone_is_trivial(cone_of({{1, 0}})));
  CHECK_FALSE(cone_is_trivial(make_cone(2, {}, {vec({1, 0})})));
  // Opposite generators form a line: nontrivial even though no single ray spans it.
  CHECK_FALSE(cone_is_trivial(cone_of({{0, 1}, {0, -1}})));
}

TEST_CASE("normal cone of a quadrant at its apex") {
  const auto nc = normal_cone(B{2}.le({1, 0}, 0).le({0, 1}, 0).p(), vec({0, 0}));
  REQUIRE(nc.has_value());
  CHECK(cone_equal(*nc, cone_of({{1, 0}, {0, 1}})));
  CHECK(nc->lineality.empty());
}

TEST_CASE("normal cone of a box") {
  const auto corner = normal_cone(unit_square(), vec({1, 1}));
  REQUIRE(corner.has_value());
  CHECK(cone_equal(*corner, cone_of({{1, 0}, {0, 1}})));
  const auto facet = normal_cone(unit_square(), vecq({Rational(1), Rational(1, 2)}));
  REQUIRE(facet.has_value());
  CHECK(cone_equal(*facet, cone_of({{1, 0}})));
  const auto interior = normal_cone(unit_square(), vecq({Rational(1, 2), Rational(1, 2)}));
  REQUIRE(interior.has_value());
  CHECK(cone_is_trivial(*interior));
  CHECK_FALSE(normal_cone(unit_square(), vec({3, 3})).has_value());
}

TEST_CASE("normal cone picks up equations as lineality") {
  const auto nc = normal_cone(B{2}.equ({0, 1}, 0).le({1, 0}, 1).p(), vec({1, 0}));
  REQUIRE(nc.has_value());
  REQUIRE(nc->lineality.size() == 1);
  CHECK(vec_eq(nc->lineality[0], vec({0, 1})));
  REQUIRE(nc->generators.size() == 1);
  CHECK(vec_eq(nc->generators[0], vec({1, 0})));
}

TEST_CASE("map construction and slicing") {
  const SetValuedMap f = vee_map();
  CHECK(set_equal(map_domain(f), Polyhedron(HRep::universe(1))));
  CHECK(set_equal(map_value(f, v1(2)), B{1}.le({-1}, -2).p()));
  const SetValuedMap diag = make_map(1, 1, B{2}.le({1, 0}, 1).le({-1, 0}, 0).equ({1, -1}, 0).p());
  CHECK(set_equal(map_domain(diag), B{1}.le({1}, 1).le({-1}, 0).p()));
  CHECK(set_equal(map_value(diag, vecq({Rational(1, 2)})), singleton(vecq({Rational(1, 2)}))));
  CHECK(map_value(diag, v1(2)).is_empty());
  CHECK_THROWS_AS((void)make_map(1, 2, unit_square()), DimensionMismatch);
}

TEST_CASE("graph interior splits into domain and value interiors") {
  const SetValuedMap f = vee_map();
  const auto above = graph_core_check(f, vec({0, 1}));
  CHECK(above.first);
  CHECK(above.second);
  const auto boundary = graph_core_check(f, vec({1, 1}));
  CHECK_FALSE(boundary.first);
  CHECK_FALSE(boundary.second);
  const auto apex = graph_core_check(f, vec({0, 0}));
  CHECK_FALSE(apex.first);
  CHECK_FALSE(apex.second);
  CHECK_THROWS_AS((void)graph_core_check(zero_map(), vec({0, 0})), NotCoreSolidError);
}

TEST_CASE("coderivative slices of the epigraph map") {
  const SetValuedMap f = epigraph_map();
  CHECK(set_equal(coderivative(f, v1(0), v1(0), v1(1)), singleton(v1(1))));
  CHECK(coderivative(f, v1(0), v1(0), v1(-1)).is_empty());
  CHECK(set_equal(coderivative(f, v1(0), v1(1), vecq({Rational(0)})), singleton(vecq({Rational(0)}))));
  CHECK(coderivative(f, v1(0), v1(1), v1(1)).is_empty());  // interior point, trivial normals
  CHECK(coderivative(f, v1(0), v1(-1), v1(1)).is_empty());  // off the graph
}

TEST_CASE("coderivative through an equation graph") {
  // The {0}-valued map: every dual vector returns {0}.
  CHECK(set_equal(coderivative(zero_map(), v1(5), v1(0), v1(3)), singleton(v1(0))));
  // The identity map: the coderivative is the identity on duals.
  CHECK(set_equal(coderivative(identity_map(), v1(2), v1(2), v1(7)), singleton(v1(7))));
}

TEST_CASE("coderivative with two inputs") {
  const SetValuedMap f = make_map(2, 1, B{3}.le({1, 1, -1}, 0).p());  // y >= x1 + x2
  CHECK(set_equal(coderivative(f, vec({0, 0}), v1(0), v1(1)), singleton(vec({1, 1}))));
  CHECK(coderivative(f, vec({0, 0}), v1(0), v1(-1)).is_empty());
}

TEST_CASE("pointwise sum of maps") {
  const SetValuedMap s = map_sum(epigraph_map(), make_map(1, 1, B{2}.le({-1, -1}, 0).p()));
  CHECK(s.dim_in == 1);
  CHECK(s.dim_out == 1);
  CHECK(set_equal(s.graph, B{2}.le({0, -1}, 0).p()));  // y >= 0 regardless of x
  const SetValuedMap t = map_sum(epigraph_map(), zero_map());
  CHECK(set_equal(t.graph, epigraph_map().graph));
}

TEST_CASE("sum domain is the domain intersection") {
  const SetValuedMap f1 = make_map(1, 1, B{2}.le({1, -1}, 0).le({1, 0}, 2).le({-1, 0}, 0).p());
  const SetValuedMap f2 = make_map(1, 1, B{2}.le({-1, -1}, 0).le({1, 0}, 5).le({-1, 0}, -1).p());
  const SetValuedMap s = map_sum(f1, f2);
  CHECK(set_equal(map_domain(s), intersect(map_domain(f1), map_domain(f2))));
  CHECK(set_equal(map_domain(s), B{1}.le({1}, 2).le({-1}, -1).p()));
}

TEST_CASE("sum of maps with an empty graph") {
  const SetValuedMap none = make_map(1, 1, Polyhedron(HRep::empty_set(2)));
  CHECK(map_sum(epigraph_map(), none).graph.is_empty());
}

TEST_CASE("decompositions of a sum value") {
  const SetValuedMap f1 = epigraph_map();
  const SetValuedMap f2 = make_map(1, 1, B{2}.le({-1, -1}, 0).p());
  CHECK(set_equal(sum_decompositions(f1, f2, v1(0), v1(0)), singleton(vec({0, 0}))));
  const Polyhedron seg = sum_decompositions(f1, f2, v1(0), v1(2));
  CHECK(set_equal(seg, B{2}.le({1, 0}, 2).le({-1, 0}, 0).equ({1, 1}, 2).p()));
  CHECK(set_equal(sum_decompositions(epigraph_map(), zero_map(), v1(1), v1(3)),
                  singleton(vec({3, 0}))));
}

TEST_CASE("composition of maps") {
  const SetValuedMap g = epigraph_map();  // z >= y
  const SetValuedMap c = map_compose(g, epigraph_map());
  CHECK(c.dim_in == 1);
  CHECK(c.dim_out == 1);
  CHECK(set_equal(c.graph, B{2}.le({1, -1}, 0).p()));  // z >= x
  const SetValuedMap ci = map_compose(identity_map(), vee_map());
  CHECK(set_equal(ci.graph, vee_map().graph));
}

TEST_CASE("intermediate points of a composition") {
  const SetValuedMap f = epigraph_map();
  const SetValuedMap g = epigraph_map();
  CHECK(set_equal(intermediate_points(f, g, v1(0), v1(0)), singleton(v1(0))));
  CHECK(set_equal(intermediate_points(f, g, v1(0), v1(2)),
                  B{1}.le({1}, 2).le({-1}, 0).p()));
  CHECK_THROWS_AS((void)intermediate_points(f, g, v1(0), v1(-1)), PreconditionError);
}

TEST_CASE("intersection rule on a quadrant") {
  const RuleVerdict v = intersection_rule(B{2}.le({1, 0}, 0).p(), B{2}.le({0, 1}, 0).p(),
                                          vec({0, 0}));
  CHECK(v.qc_satisfied);
  CHECK(v.equal);
  CHECK(v.rhs_subset_lhs);
  CHECK(set_equal(v.lhs, cone_as_polyhedron(cone_of({{1, 0}, {0, 1}}))));
}

TEST_CASE("intersection rule on touching half-planes") {
  const RuleVerdict v = intersection_rule(B{2}.le({0, 1}, 0).p(), B{2}.le({0, -1}, 0).p(),
                                          vec({0, 0}));
  CHECK_FALSE(v.qc_satisfied);  // neither interior reaches the other set
  CHECK(v.equal);               // yet both sides are the same vertical line
  CHECK(v.rhs_subset_lhs);
  CHECK(set_equal(v.lhs, B{2}.equ({1, 0}, 0).p()));
  CHECK(set_equal(v.rhs, v.lhs));
}

TEST_CASE("intersection rule of a set with itself") {
  const RuleVerdict v = intersection_rule(unit_square(), unit_square(),
                                          vecq({Rational(1, 2), Rational(1, 2)}));
  CHECK(v.qc_satisfied);
  CHECK(v.equal);
  CHECK(set_equal(v.lhs, singleton(vec({0, 0}))));
}

TEST_CASE("intersection rule rejects outside base points") {
  CHECK_THROWS_AS((void)intersection_rule(unit_square(), unit_square(), vec({7, 7})),
                  PreconditionError);
}

TEST_CASE("coderivative sum rule at the kink pair") {
  const SetValuedMap f1 = epigraph_map();
  const SetValuedMap f2 = make_map(1, 1, B{2}.le({-1, -1}, 0).p());
  const RuleVerdict v =
      coderivative_sum_rule(f1, f2, v1(0), v1(0), v1(0), v1(0), v1(1));
  CHECK(v.qc_satisfied);
  CHECK(v.equal);
  CHECK(v.rhs_subset_lhs);
  CHECK(set_equal(v.lhs, singleton(v1(0))));
  const RuleVerdict w =
      coderivative_sum_rule(f1, f2, v1(0), v1(0), v1(0), v1(0), v1(-1));
  CHECK(w.equal);
  CHECK(w.lhs.is_empty());
  CHECK(w.rhs.is_empty());
}

TEST_CASE("coderivative sum rule with the zero map") {
  const RuleVerdict v =
      coderivative_sum_rule(epigraph_map(), zero_map(), v1(1), v1(1), v1(1), v1(0), v1(1));
  CHECK(v.qc_satisfied);
  CHECK(v.equal);
  CHECK(set_equal(v.lhs, coderivative(epigraph_map(), v1(1), v1(1), v1(1))));
}

TEST_CASE("coderivative sum rule validates the decomposition") {
  CHECK_THROWS_AS((void)coderivative_sum_rule(epigraph_map(), zero_map(), v1(0), v1(0), v1(1),
                                              v1(1), v1(1)),
                  PreconditionError);
}

TEST_CASE("coderivative chain rule through an intermediate point") {
  const RuleVerdict v = coderivative_chain_rule(epigraph_map(), epigraph_map(), v1(0), v1(0),
                                                v1(0), v1(1));
  CHECK(v.qc_satisfied);
  CHECK(v.equal);
  CHECK(v.rhs_subset_lhs);
  CHECK(set_equal(v.lhs, singleton(v1(1))));
  const RuleVerdict w = coderivative_chain_rule(epigraph_map(), epigraph_map(), v1(0), v1(0),
                                                v1(0), v1(-1));
  CHECK(w.equal);
  CHECK(w.lhs.is_empty());
  CHECK(w.rhs.is_empty());
}

TEST_CASE("coderivative chain rule with the identity") {
  const RuleVerdict v = coderivative_chain_rule(epigraph_map(), identity_map(), v1(0), v1(0),
                                                v1(0), v1(1));
  CHECK(v.qc_satisfied);
  CHECK(v.equal);
  CHECK(set_equal(v.lhs, coderivative(epigraph_map(), v1(0), v1(0), v1(1))));
}

TEST_CASE("rule verdicts on cones built from both orientations agree with sets") {
  // The right side of the half-plane rule is a line given as two opposite
  // rays; its polyhedral reading must still compare equal to the line.
  const PolyCone pair = cone_sum(cone_of({{0, 1}}), cone_of({{0, -1}}));
  CHECK(set_equal(cone_as_polyhedron(pair), B{2}.equ({1, 0}, 0).p()));
}
