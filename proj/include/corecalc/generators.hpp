#pragma once

#include <cstdint>
#include <random>

#include "corecalc/normalcalc.hpp"
#include "corecalc/polyhedron.hpp"
#include "corecalc/subdiff.hpp"

/**
 * Seeded random instance generation for the property campaigns. All
 * coefficients are bounded rationals so double-description and simplex stay
 * fast; every generator is deterministic for a fixed engine state.
 */

namespace corecalc {

using Rng = std::mt19937_64;

/** Coefficient bounds for generated instances. */
struct GenConfig {
  int max_numerator = 4;
  int max_denominator = 4;
};

Rational random_rational(Rng& rng, const GenConfig& cfg);
Vec random_vec(Rng& rng, Index dim, const GenConfig& cfg);

/** Bounded: the hull of a few random points around `center` (center included). */
Polyhedron random_polytope(Rng& rng, Index dim, const Vec& center, const GenConfig& cfg);

/** Possibly unbounded: a polytope around `center` plus up to two recession rays. */
Polyhedron random_polyhedron(Rng& rng, Index dim, const Vec& center, const GenConfig& cfg);

/** Full-dimensional by construction: a random polytope fattened by a small box. */
Polyhedron random_solid(Rng& rng, Index dim, const Vec& center, const GenConfig& cfg);

/** Random map whose graph passes through (x, y); solid_graph fattens it. */
SetValuedMap random_map_through(Rng& rng, Index dim_in, Index dim_out, const Vec& x, const Vec& y,
                                const GenConfig& cfg, bool solid_graph);

/** Like random_map_through but with a bounded graph (every fiber is compact). */
SetValuedMap random_bounded_map_through(Rng& rng, Index dim_in, Index dim_out, const Vec& x,
                                        const Vec& y, const GenConfig& cfg, bool solid_graph);

/** Pointwise max of `pieces` random affine functions; finite everywhere. */
PolyFunction random_max_affine(Rng& rng, Index dim, int pieces, const GenConfig& cfg);

}  // namespace corecalc
