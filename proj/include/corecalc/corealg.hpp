#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "corecalc/polyhedron.hpp"

namespace corecalc {

/**
 * Witness that a nonzero functional f separates two sets: sup of f on the left
 * never exceeds inf of f on the right. proper_witnesses, when present, is a
 * pair (x1 from the left set, x2 from the right set) with f(x1) < f(x2),
 * certifying the separation is not degenerate (f not constant across both).
 */
struct SeparationCertificate {
  Vec f;
  ExtRational sup_lhs;
  ExtRational inf_rhs;
  std::optional<std::pair<Vec, Vec>> proper_witnesses;
};

/**
 * Verdict that a pair of sets can be pushed apart by arbitrarily small
 * translations. When true, `direction` is a witness translation direction and
 * every t in checked_ts passed the exact emptiness check of
 * (first set + t*direction) ∩ second set.
 */
struct ExtremalityCertificate {
  bool verdict = false;
  Vec direction;
  std::vector<Rational> checked_ts;
};

/**
 * x lies in the algebraic interior of om. For a normalized constraint form
 * this is: member, no equations present, and every inequality strict at x.
 */
bool core_contains(const Polyhedron& om, const Vec& x);

/**
 * A point in the interior when the set is full-dimensional (found by the
 * max-slack program), absent otherwise.
 */
std::optional<Vec> is_core_solid(const Polyhedron& om);

/** 0 lies in the interior, i.e. every direction enters om scaled small enough. */
bool is_absorbing(const Polyhedron& om);

/**
 * Minkowski gauge inf{t > 0 : x in t*om} for absorbing om, by the closed form
 * max(0, max_i (a_i.x)/b_i) over the facet rows. Requires is_absorbing(om).
 */
Rational gauge(const Polyhedron& om, const Vec& x);

/**
 * Decides whether the interior of `solid` meets `other` (one max-slack LP).
 * The shared decision procedure behind every qualification condition.
 */
bool core_meets(const Polyhedron& solid, const Polyhedron& other);

/**
 * Separates x0 from om: a certificate exists iff x0 is not interior to om.
 * Boundary points are separated properly as well. Requires om nonempty and
 * full-dimensional; the certificate's right side is the singleton {x0}.
 */
std::optional<SeparationCertificate> separate_point(const Polyhedron& om, const Vec& x0);

/**
 * Separates two nonempty sets through the difference set route: a certificate
 * exists iff 0 is not interior to om1 - om2. Requires the difference
 * full-dimensional. Orientation: sup f(om1) <= inf f(om2).
 */
std::optional<SeparationCertificate> separate_sets(const Polyhedron& om1, const Polyhedron& om2);

/** Extremality test: 0 outside the interior of om1 - om2, with shift certificates. */
ExtremalityCertificate is_extremal(const Polyhedron& om1, const Polyhedron& om2);

/**
 * A nonzero f normal to om1 and anti-normal to om2 at the common point xbar,
 * when one exists; absent exactly when the pair is not extremal. Requires
 * xbar in both sets and om1 - om2 full-dimensional.
 */
std::optional<Vec> extremal_principle(const Polyhedron& om1, const Polyhedron& om2, const Vec& xbar);

}  // namespace corecalc
