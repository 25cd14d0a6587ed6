#include "corecalc/corealg.hpp"

#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace {

Polyhedron lower_half_plane() { return B{2}.le({0, 1}, 0).p(); }
Polyhedron upper_half_plane() { return B{2}.le({0, -1}, 0).p(); }
Polyhedron segment_x01() {
  // {(t, 0) : 0 <= t <= 1}
  return B{2}.le({1, 0}, 1).le({-1, 0}, 0).equ({0, 1}, 0).p();
}

}  // namespace

TEST_CASE("interior membership by strict facets") {
  const Polyhedron sq = unit_square();
  CHECK(core_contains(sq, vecq({Rational(1, 2), Rational(1, 2)})));
  CHECK_FALSE(core_contains(sq, vecq({Rational(1), Rational(1, 2)})));
  CHECK_FALSE(core_contains(segment_x01(), vecq({Rational(1, 2), Rational(0)})));
  CHECK_FALSE(core_contains(sq, vec({5, 5})));
  CHECK(core_contains(Polyhedron(HRep::universe(2)), vec({0, 0})));
  CHECK_THROWS_AS((void)core_contains(sq, vec({1})), DimensionMismatch);
}

TEST_CASE("interior membership survives hidden equality pairs") {
  // x1 <= 0 and -x1 <= 0 pin x1 = 0 without an explicit equation row.
  const Polyhedron pinched = B{2}.le({1, 0}, 0).le({-1, 0}, 0).le({0, 1}, 1).p();
  CHECK(contains(pinched, vec({0, 0})));
  CHECK_FALSE(core_contains(pinched, vec({0, 0})));
}

TEST_CASE("solidity witness") {
  const auto w = is_core_solid(unit_square());
  REQUIRE(w.has_value());
  CHECK(core_contains(unit_square(), *w));
  CHECK_FALSE(is_core_solid(segment_x01()).has_value());
  const auto free_w = is_core_solid(Polyhedron(HRep::universe(2)));
  REQUIRE(free_w.has_value());
  CHECK(core_contains(Polyhedron(HRep::universe(2)), *free_w));
  CHECK_FALSE(is_core_solid(Polyhedron(HRep::empty_set(2))).has_value());
}

TEST_CASE("absorbing sets") {
  CHECK(is_absorbing(box({{-1, 1}, {-1, 1}})));
  CHECK_FALSE(is_absorbing(unit_square()));
  CHECK_FALSE(is_absorbing(B{2}.equ({0, 1}, 0).p()));
}

TEST_CASE("gauge closed form") {
  const Polyhedron cube = box({{-1, 1}, {-1, 1}});
  CHECK(gauge(cube, vec({2, 1})) == Rational(2));
  CHECK(gauge(cube, vec({0, 0})) == Rational(0));
  CHECK(gauge(B{2}.le({1, 0}, 1).p(), vec({3, 5})) == Rational(3));
  CHECK(gauge(cube, vecq({Rational(1, 3), Rational(-1, 2)})) == Rational(1, 2));
  CHECK_THROWS_AS((void)gauge(unit_square(), vec({1, 1})), PreconditionError);
}

TEST_CASE("gauge laws on sample points") {
  const Polyhedron om = B{2}.le({1, 1}, 2).le({-1, 0}, 1).le({0, -1}, 1).le({1, -2}, 3).p();
  REQUIRE(is_absorbing(om));
  const Vec xs[] = {vec({1, 1}), vec({-2, 3}), vecq({Rational(1, 2), Rational(-5, 3)})};
  for (const Vec& x : xs) {
    for (const Vec& y : xs)
      CHECK(gauge(om, Vec(x + y)) <= gauge(om, x) + gauge(om, y));  // subadditive
    CHECK(gauge(om, Vec(x * Rational(7, 3))) == Rational(7, 3) * gauge(om, x));
    CHECK(gauge(om, zero_vec(2)) == Rational(0));
  }
}

TEST_CASE("interior-meets decision") {
  CHECK(core_meets(B{2}.le({1, 0}, 0).p(), B{2}.le({0, 1}, 0).p()));
  CHECK_FALSE(core_meets(lower_half_plane(), upper_half_plane()));
  // A flat first argument has no interior at all.
  CHECK_FALSE(core_meets(segment_x01(), Polyhedron(HRep::universe(2))));
  // Hidden equality pair: still no interior, decided by the slack program.
  CHECK_FALSE(core_meets(B{2}.le({1, 0}, 0).le({-1, 0}, 0).p(), Polyhedron(HRep::universe(2))));
  CHECK_FALSE(core_meets(unit_square(), Polyhedron(HRep::empty_set(2))));
  CHECK(core_meets(unit_square(), singleton(vecq({Rational(1, 2), Rational(1, 2)}))));
  CHECK_FALSE(core_meets(unit_square(), singleton(vec({1, 1}))));  // corner only
}

TEST_CASE("point separation off a box") {
  const auto cert = separate_point(unit_square(), vec({2, 0}));
  REQUIRE(cert.has_value());
  CHECK(vec_eq(cert->f, vec({1, 0})));
  CHECK(cert->sup_lhs.value() == Rational(1));
  CHECK(cert->inf_rhs.value() == Rational(2));
  REQUIRE(cert->proper_witnesses.has_value());
  const auto& [w, x0] = *cert->proper_witnesses;
  CHECK(contains(unit_square(), w));
  CHECK(dot(cert->f, w) < dot(cert->f, x0));
}

TEST_CASE("point separation at a corner") {
  const auto cert = separate_point(unit_square(), vec({1, 1}));
  REQUIRE(cert.has_value());
  CHECK(vec_eq(cert->f, vec({1, 1})));
  CHECK(cert->sup_lhs.value() == Rational(2));
  CHECK(cert->inf_rhs.value() == Rational(2));
  REQUIRE(cert->proper_witnesses.has_value());
  const auto& [w, x0] = *cert->proper_witnesses;
  CHECK(dot(cert->f, w) < dot(cert->f, x0));
}

TEST_CASE("no separation from an interior point") {
  CHECK_FALSE(separate_point(unit_square(), vecq({Rational(1, 2), Rational(1, 2)})).has_value());
}

TEST_CASE("point separation preconditions") {
  CHECK_THROWS_AS((void)separate_point(Polyhedron(HRep::empty_set(2)), vec({0, 0})),
                  PreconditionError);
  CHECK_THROWS_AS((void)separate_point(segment_x01(), vec({5, 5})), NotCoreSolidError);
}

TEST_CASE("set separation of touching half-planes") {
  const auto cert = separate_sets(lower_half_plane(), upper_half_plane());
  REQUIRE(cert.has_value());
  // The difference is {x2 <= 0}; its boundary normal at 0 orients the functional.
  CHECK(vec_eq(cert->f, vec({0, 1})));
  CHECK(cert->sup_lhs.value() == Rational(0));
  CHECK(cert->inf_rhs.value() == Rational(0));
  REQUIRE(cert->proper_witnesses.has_value());
  const auto& [a, b] = *cert->proper_witnesses;
  CHECK(contains(lower_half_plane(), a));
  CHECK(contains(upper_half_plane(), b));
  CHECK(dot(cert->f, a) < dot(cert->f, b));
}

TEST_CASE("set separation of disjoint boxes") {
  const Polyhedron right = box({{2, 3}, {0, 1}});
  const auto cert = separate_sets(unit_square(), right);
  REQUIRE(cert.has_value());
  CHECK(vec_eq(cert->f, vec({1, 0})));
  CHECK(cert->sup_lhs.value() == Rational(1));
  CHECK(cert->inf_rhs.value() == Rational(2));
  REQUIRE(cert->proper_witnesses.has_value());
}

TEST_CASE("identical solid sets cannot be separated") {
  CHECK_FALSE(separate_sets(unit_square(), unit_square()).has_value());
}

TEST_CASE("set separation certificate stays valid on unbounded sides") {
  // Left set opens downward, right set opens upward; witnesses need the
  // sublevel fallback because the extremes are not attained.
  const Polyhedron left = B{2}.le({1, 0}, 0).p();   // x1 <= 0
  const Polyhedron right = B{2}.le({-1, 0}, -1).p();  // x1 >= 1
  const auto cert = separate_sets(left, right);
  REQUIRE(cert.has_value());
  CHECK(cert->sup_lhs.value() <= cert->inf_rhs.value());
  REQUIRE(cert->proper_witnesses.has_value());
  const auto& [a, b] = *cert->proper_witnesses;
  CHECK(contains(left, a));
  CHECK(contains(right, b));
  CHECK(dot(cert->f, a) < dot(cert->f, b));
}

TEST_CASE("extremal pair of touching half-planes") {
  const auto cert = is_extremal(lower_half_plane(), upper_half_plane());
  CHECK(cert.verdict);
  CHECK(vec_eq(cert.direction, vec({0, 1})));
  REQUIRE(cert.checked_ts.size() == 21);
  for (std::size_t k = 0; k < cert.checked_ts.size(); ++k) {
    CHECK(cert.checked_ts[k] == Rational(-1, 1L << k));
    const Vec shift = cert.direction * cert.checked_ts[k];
    CHECK(intersect(translate(lower_half_plane(), shift), upper_half_plane()).is_empty());
  }
}

TEST_CASE("overlapping boxes are not extremal") {
  const auto cert = is_extremal(unit_square(), unit_square());
  CHECK_FALSE(cert.verdict);
  CHECK(cert.checked_ts.empty());
}

TEST_CASE("disjoint sets are extremal") {
  const auto cert = is_extremal(unit_square(), box({{5, 6}, {5, 6}}));
  CHECK(cert.verdict);
  for (const Rational& t : cert.checked_ts)
    CHECK(intersect(translate(unit_square(), Vec(cert.direction * t)), box({{5, 6}, {5, 6}}))
              .is_empty());
}

TEST_CASE("extremality with a flat difference set") {
  // Both sets are the x1-axis: the difference is the axis itself, not solid.
  const Polyhedron axis = B{2}.equ({0, 1}, 0).p();
  const auto cert = is_extremal(axis, axis);
  CHECK(cert.verdict);
  REQUIRE(cert.direction.size() == 2);
  for (const Rational& t : cert.checked_ts)
    CHECK(intersect(translate(axis, Vec(cert.direction * t)), axis).is_empty());
}

TEST_CASE("extremality of sets touching at a displaced point") {
  // Shifted quadrants meeting only at (1, 1); the difference rests on the origin.
  const Polyhedron lo = B{2}.le({1, 0}, 1).le({0, 1}, 1).p();
  const Polyhedron hi = B{2}.le({-1, 0}, -1).le({0, -1}, -1).p();
  const auto cert = is_extremal(lo, hi);
  CHECK(cert.verdict);
  for (const Rational& t : cert.checked_ts)
    CHECK(intersect(translate(lo, Vec(cert.direction * t)), hi).is_empty());
}

TEST_CASE("extremality requires nonempty sets") {
  CHECK_THROWS_AS((void)is_extremal(Polyhedron(HRep::empty_set(2)), unit_square()),
                  PreconditionError);
}

TEST_CASE("common-point functional for touching half-planes") {
  const auto f = extremal_principle(lower_half_plane(), upper_half_plane(), vec({0, 0}));
  REQUIRE(f.has_value());
  CHECK(vec_eq(primitive(*f), vec({0, 1})));
}

TEST_CASE("common-point functional for boxes sharing a facet") {
  const auto f = extremal_principle(unit_square(), box({{1, 2}, {0, 1}}),
                                    vecq({Rational(1), Rational(1, 2)}));
  REQUIRE(f.has_value());
  CHECK(vec_eq(primitive(*f), vec({1, 0})));
}

TEST_CASE("no common-point functional inside an overlap") {
  CHECK_FALSE(extremal_principle(unit_square(), unit_square(),
                                 vecq({Rational(1, 2), Rational(1, 2)}))
                  .has_value());
}

TEST_CASE("common-point functional preconditions") {
  CHECK_THROWS_AS((void)extremal_principle(unit_square(), unit_square(), vec({9, 9})),
                  PreconditionError);
  const Polyhedron axis = B{2}.equ({0, 1}, 0).p();
  CHECK_THROWS_AS((void)extremal_principle(axis, axis, vec({0, 0})), NotCoreSolidError);
}

TEST_CASE("separation, extremality, and the common-point functional agree") {
  // Three verdict routes on the same touching pair must all say "separable".
  const Polyhedron lo = lower_half_plane();
  const Polyhedron hi = upper_half_plane();
  const bool sep = separate_sets(lo, hi).has_value();
  const bool ext = is_extremal(lo, hi).verdict;
  const bool ep = extremal_principle(lo, hi, vec({0, 0})).has_value();
  CHECK(sep == ext);
  CHECK(ext == ep);
  // And on an overlapping pair all must say "not separable".
  const bool sep2 = separate_sets(unit_square(), unit_square()).has_value();
  const bool ext2 = is_extremal(unit_square(), unit_square()).verdict;
  const bool ep2 = extremal_principle(unit_square(), unit_square(),
                                      vecq({Rational(1, 2), Rational(1, 2)}))
                       .has_value();
  CHECK_FALSE(sep2);
  CHECK(sep2 == ext2);
  CHECK(ext2 == ep2);
}

TEST_CASE("segment interiority") {
  // Points strictly between an interior point and any member stay interior.
  const Polyhedron om = B{2}.le({1, 1}, 2).le({-1, 0}, 0).le({0, -1}, 0).p();
  const Vec a = vecq({Rational(1, 2), Rational(1, 2)});
  REQUIRE(core_contains(om, a));
  const Vec bs[] = {vec({2, 0}), vec({0, 2}), vec({0, 0}), vecq({Rational(1), Rational(1)})};
  const Rational lams[] = {Rational(1, 3), Rational(1, 2), Rational(9, 10), Rational(1)};
  for (const Vec& b : bs) {
    REQUIRE(contains(om, b));
    for (const Rational& lam : lams) {
      const Vec mid = a * lam + b * (Rational(1) - lam);
      CHECK(core_contains(om, mid));
    }
  }
}
