#pragma once

#include <utility>

#include "corecalc/normalcalc.hpp"
#include "corecalc/polyhedron.hpp"

namespace corecalc {

/**
 * Proper polyhedral convex function on Q^dim, represented by its epigraph in
 * Q^(dim+1) (last coordinate the value axis). Invariants: epi nonempty, the
 * upward value direction is a recession direction, and no point has value
 * -infinity (no downward value ray).
 */
struct PolyFunction {
  Index dim = 0;
  Polyhedron epi;
};

/** Validates the epigraph invariants. Throws ImproperFunctionError when violated. */
PolyFunction make_function(Index dim, Polyhedron epi);

/** {x : phi(x) finite}, the projection of the epigraph onto the arguments. */
Polyhedron fn_domain(const PolyFunction& phi);

/** Exact value: least alpha with (x, alpha) in the epigraph; +infinity off the domain. */
ExtRational evaluate(const PolyFunction& phi, const Vec& x);

/**
 * {f : phi(x) >= phi(xbar) + f.(x - xbar) for all x}, computed through the
 * epigraph viewed as a set-valued map and its coderivative at height phi(xbar).
 * Requires xbar in the domain.
 */
Polyhedron subdifferential(const PolyFunction& phi, const Vec& xbar);

/** Pointwise sum; the epigraph is a projection. Throws ImproperFunctionError on disjoint domains. */
PolyFunction fn_add(const PolyFunction& phi1, const PolyFunction& phi2);

/**
 * Subdifferential of a sum vs. the sum of subdifferentials at xbar (a common
 * domain point). QC: some argument interior to the first domain lies in the
 * second domain, with the first epigraph solid.
 */
RuleVerdict subdiff_sum_rule(const PolyFunction& phi1, const PolyFunction& phi2, const Vec& xbar);

/** phi composed with the linear map x -> a*x; epigraph rows substituted in place. */
PolyFunction fn_precompose(const PolyFunction& phi, const Mat& a);

/** Image of s under the transpose of a (generators mapped; zero images of rays dropped). */
Polyhedron adjoint_image(const Mat& a, const Polyhedron& s);

/**
 * Subdifferential of phi(a*x) at xbar vs. the transpose image of the
 * subdifferential of phi at a*xbar. QC: the range of a reaches the interior
 * of dom phi, with the epigraph of phi solid.
 */
RuleVerdict subdiff_chain_rule(const PolyFunction& phi, const Mat& a, const Vec& xbar);

/** The 0 / +infinity function of a nonempty set; its epigraph is om x [0, inf). */
PolyFunction indicator(const Polyhedron& om);

/**
 * Parametric minimization data: mu(x) = inf{phi(x, y) : y in F(x)}.
 * Construction rejects problems where mu takes -infinity (UnboundedBelowError)
 * or is nowhere finite (ImproperFunctionError).
 */
struct MarginalProblem {
  PolyFunction phi;  // on Q^(n+m), arguments split (x, y)
  SetValuedMap f;    // Q^n into Q^m
};

MarginalProblem make_marginal(PolyFunction phi, SetValuedMap f);

/** The optimal-value function mu as a PolyFunction on the input space. */
PolyFunction marginal_function(const MarginalProblem& m);

/** {y in F(xbar) : phi(xbar, y) = mu(xbar)}; requires xbar in dom mu. */
Polyhedron argmin_set(const MarginalProblem& m, const Vec& xbar);

/**
 * Subdifferential of the optimal-value function at xbar vs. the multiplier
 * form {f + u : (f, g) in the subdifferential of phi at (xbar, ybar), u in the
 * coderivative of F there at g}, as one joint projection. Requires ybar to be
 * a minimizer. QC: either the epigraph of phi is solid and its domain interior
 * meets gph F, or the graph interior of F meets dom phi.
 */
RuleVerdict marginal_subdiff_rule(const MarginalProblem& m, const Vec& xbar, const Vec& ybar);

}  // namespace corecalc
