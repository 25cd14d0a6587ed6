#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "corecalc/polyhedron.hpp"

namespace corecalc {

/**
 * Polyhedral convex cone in generator form: all nonnegative combinations of
 * `generators` plus arbitrary combinations of `lineality`. Always contains 0.
 * The representation is not forced canonical as a set — a line may also appear
 * as a pair of opposite generators (sums concatenate) — so comparisons go
 * through cone_as_polyhedron / set_equal.
 */
struct PolyCone {
  Index dim = 0;
  std::vector<Vec> generators;
  std::vector<Vec> lineality;
};

/** Normalizes: lineality to a canonical basis, generators reduced mod lineality, primitive, deduped. */
PolyCone make_cone(Index dim, std::vector<Vec> generators, std::vector<Vec> lineality);

/** The cone as a Polyhedron (vertex 0, rays = generators and both line orientations). */
Polyhedron cone_as_polyhedron(const PolyCone& c);

/** Union of generator systems; represents the Minkowski sum of the cones. */
PolyCone cone_sum(const PolyCone& a, const PolyCone& b);

PolyCone cone_neg(const PolyCone& c);

/** Exact intersection: both cones pass to facet form, the joint system back to generators. */
PolyCone cone_intersect(const PolyCone& a, const PolyCone& b);

/** True iff the cone is exactly {0}. */
bool cone_is_trivial(const PolyCone& c);

bool cone_equal(const PolyCone& a, const PolyCone& b);

/**
 * Cone of outward normals at xbar: generated by the facet normals active at
 * xbar, with the equation normals as lineality. Empty optional when xbar is
 * outside the set — "no normal cone" is distinguished from the trivial cone.
 */
std::optional<PolyCone> normal_cone(const Polyhedron& om, const Vec& xbar);

/** Convex set-valued map as its graph; first dim_in coordinates are the input. */
struct SetValuedMap {
  Index dim_in = 0;
  Index dim_out = 0;
  Polyhedron graph;
};

/** Validates the dimension split. The graph may be empty (the nowhere-defined map). */
SetValuedMap make_map(Index dim_in, Index dim_out, Polyhedron graph);

/** Projection of the graph onto the input block. */
Polyhedron map_domain(const SetValuedMap& f);

/** The image set F(x) in the output space, by substituting x into the graph. */
Polyhedron map_value(const SetValuedMap& f, const Vec& x);

/**
 * Both sides of the graph-interior identity at (x, y): first component is
 * membership of (x,y) in the interior of the graph, second is (x interior to
 * the domain) and (y interior to the image F(x)). The two agree for maps with
 * solid graphs; callers assert that. Requires a solid graph.
 */
std::pair<bool, bool> graph_core_check(const SetValuedMap& f, const Vec& xy);

/**
 * {f : (f, -g) normal to the graph at (xbar, ybar)} as a polyhedron in the
 * input's dual space; may be empty. Computed in multiplier form and projected.
 */
Polyhedron coderivative(const SetValuedMap& f, const Vec& xbar, const Vec& ybar, const Vec& g);

/**
 * The coderivative at (xbar, ybar) bundled over every dual argument: the map
 * g -> {f : (f, -g) normal to the graph at (xbar, ybar)}, as a set-valued map
 * from the output's dual space to the input's. Its graph is one multiplier
 * projection; slicing it at g recovers coderivative(). Empty graph off gph f.
 */
SetValuedMap coderivative_as_map(const SetValuedMap& f, const Vec& xbar, const Vec& ybar);

/** Pointwise sum: (F1+F2)(x) = F1(x) + F2(x); graph by projection. */
SetValuedMap map_sum(const SetValuedMap& f1, const SetValuedMap& f2);

/** All splittings ybar = y1 + y2 with yi in Fi(xbar), as pairs (y1, y2). */
Polyhedron sum_decompositions(const SetValuedMap& f1, const SetValuedMap& f2, const Vec& xbar,
                              const Vec& ybar);

/** Composition G after F by eliminating the intermediate block. */
SetValuedMap map_compose(const SetValuedMap& g, const SetValuedMap& f);

/** {y : (xbar, y) in gph F, (y, zbar) in gph G}; throws if empty (point off the composition). */
Polyhedron intermediate_points(const SetValuedMap& f, const SetValuedMap& g, const Vec& xbar,
                               const Vec& zbar);

/**
 * Outcome of checking a two-sided calculus identity: both sides as sets, the
 * decidable qualification status, and the two containments. rhs_subset_lhs is
 * expected to hold always; equal is the theorem's claim under the QC.
 */
struct RuleVerdict {
  Polyhedron lhs;
  Polyhedron rhs;
  bool qc_satisfied = false;
  bool equal = false;
  bool rhs_subset_lhs = false;
};

/**
 * Normal cone to an intersection vs. the sum of the individual normal cones at
 * xbar. The left side is computed on a re-canonicalized intersection so its
 * facet description does not inherit the rows that feed the right side.
 * QC: some point of the first set's interior lies in the second set.
 */
RuleVerdict intersection_rule(const Polyhedron& om1, const Polyhedron& om2, const Vec& xbar);

/**
 * Coderivative of F1+F2 at (xbar, ybar) vs. the sum of coderivatives at the
 * decomposition (y1bar, y2bar). QC: the first graph is solid and some x
 * interior to dom F1 lies in dom F2 with F1(x) solid.
 */
RuleVerdict coderivative_sum_rule(const SetValuedMap& f1, const SetValuedMap& f2, const Vec& xbar,
                                  const Vec& ybar, const Vec& y1bar, const Vec& y2bar, const Vec& g);

/**
 * Coderivative of G∘F at (xbar, zbar) through the intermediate point ybar vs.
 * the composed coderivatives, the latter as one projection over the joint
 * multiplier system. QC: either (i) gph F solid and some interior graph point
 * of F has its image point in dom G, or (ii) gph G solid and some interior
 * graph point of G has its input reachable by F.
 */
RuleVerdict coderivative_chain_rule(const SetValuedMap& f, const SetValuedMap& g, const Vec& xbar,
                                    const Vec& zbar, const Vec& ybar, const Vec& h);

}  // namespace corecalc
