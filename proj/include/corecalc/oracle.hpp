#pragma once

#include <cstdint>
#include <optional>

#include "corecalc/polyhedron.hpp"
#include "corecalc/subdiff.hpp"

/**
 * Brute-force definitional checkers, deliberately independent of the analytic
 * engine: they consume vertex/ray lists and raw constraint rows only, so a
 * bug in the cone or coderivative machinery cannot validate itself. They may
 * be much slower than the engine; that is fine — they exist to disagree.
 */

namespace corecalc {

/** What a definitional check asserts about its inputs. */
enum class OracleClaim {
  normal_member,
  subgrad_member,
  core_member,
  separation_valid,
  set_equal,
};

/** Outcome of one check. On a false membership verdict the witness violates
 * a single rational inequality that can be re-evaluated by hand. */
struct OracleReport {
  OracleClaim claim;
  bool verdict = false;
  std::optional<Vec> witness;     ///< violating point, ray, or direction
  std::optional<Rational> delta;  ///< interiority margin for core successes
  std::uint64_t seed = 0;         ///< RNG seed for randomized checks; 0 when deterministic
};

/**
 * Does f support om at xbar, i.e. f(x - xbar) <= 0 for every x in om?
 * Quantifier reduced to the vertices and rays. Throws PreconditionError
 * when xbar is not a member.
 */
OracleReport oracle_normal_member(const Polyhedron& om, const Vec& xbar, const Vec& f);

/**
 * Does f minorize phi from xbar, i.e. phi(x) >= phi(xbar) + f(x - xbar)
 * everywhere? Checked on every epigraph vertex and ray; the function value
 * at xbar comes from a one-variable LP over the raw epigraph rows. Throws
 * PreconditionError when xbar is outside the domain.
 */
OracleReport oracle_subgrad_member(const PolyFunction& phi, const Vec& xbar, const Vec& f);

/**
 * Is x in the algebraic interior of om? Walks the 2n signed coordinate
 * directions and records an explicit rational step that stays inside along
 * each; by convexity that certifies absorption in every direction. The
 * smallest step is reported as delta. Never throws: a non-member point or a
 * blocked direction is a false verdict with that witness.
 */
OracleReport oracle_core_member(const Polyhedron& om, const Vec& x);

/**
 * Does the nonzero functional f separate om1 from om2, i.e.
 * sup f(om1) <= inf f(om2)? Evaluated over vertices, with rays deciding
 * unboundedness. Throws PreconditionError when either set is empty.
 */
OracleReport oracle_separation_valid(const Polyhedron& om1, const Polyhedron& om2, const Vec& f);

/**
 * Spot-check that two sets are equal by sampling convex/conic combinations
 * of each side's vertices and rays and testing the raw constraint rows of
 * the other side. A deterministic pass (every vertex, every vertex plus one
 * ray) precedes `samples` seeded random combinations per side. Independent
 * of the H/V conversion used by set_equal.
 */
OracleReport oracle_rule_equal(const Polyhedron& lhs, const Polyhedron& rhs, int samples,
                               std::uint64_t seed = 1);

}  // namespace corecalc
