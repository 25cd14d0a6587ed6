#include "corecalc/subdiff.hpp"

#include <utility>
#include <vector>

#include "corecalc/corealg.hpp"
#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"

namespace corecalc {

namespace {

std::vector<Index> iota_range(Index lo, Index hi) {
  std::vector<Index> c;
  c.reserve(static_cast<std::size_t>(hi - lo));
  for (Index i = lo; i < hi; ++i) c.push_back(i);
  return c;
}

/** The function's epigraph viewed as the set-valued map x -> [phi(x), inf). */
SetValuedMap epi_map(const PolyFunction& phi) { return SetValuedMap{phi.dim, 1, phi.epi}; }

}  // namespace

PolyFunction make_function(Index dim, Polyhedron epi) {
  if (dim < 1 || epi.ambient_dim() != dim + 1)
    throw DimensionMismatch("epigraph must add one value coordinate to the arguments");
  if (epi.is_empty()) throw ImproperFunctionError("function with empty domain");
  if (!contains_direction(epi.hrep(), unit_vec(dim + 1, dim)))
    throw ImproperFunctionError("epigraph does not recede upward");
  if (contains_direction(epi.hrep(), -unit_vec(dim + 1, dim)))
    throw ImproperFunctionError("function reaches minus infinity");
  return PolyFunction{dim, std::move(epi)};
}

Polyhedron fn_domain(const PolyFunction& phi) { return project(phi.epi, iota_range(0, phi.dim)); }

ExtRational evaluate(const PolyFunction& phi, const Vec& x) {
  if (x.size() != phi.dim) throw DimensionMismatch("function argument of wrong dimension");
  const Polyhedron heights = substitute_prefix(phi.epi, x);
  if (heights.is_empty()) return ExtRational::plus_inf();
  const OptResult lo = optimize(heights.hrep(), unit_vec(1, 0), /*maximize=*/false);
  if (!lo.bounded) throw ImproperFunctionError("function reaches minus infinity");
  return ExtRational(lo.value);
}

Polyhedron subdifferential(const PolyFunction& phi, const Vec& xbar) {
  const ExtRational val = evaluate(phi, xbar);
  if (!val.is_finite()) throw PreconditionError("subdifferential outside the domain");
  Vec height(1);
  height[0] = val.value();
  Vec one(1);
  one[0] = Rational(1);
  return coderivative(epi_map(phi), xbar, height, one);
}

PolyFunction fn_add(const PolyFunction& phi1, const PolyFunction& phi2) {
  if (phi1.dim != phi2.dim) throw DimensionMismatch("sum of functions on different spaces");
  // Summing the epigraph maps adds the value intervals [phi_i(x), inf).
  return make_function(phi1.dim, map_sum(epi_map(phi1), epi_map(phi2)).graph);
}

RuleVerdict subdiff_sum_rule(const PolyFunction& phi1, const PolyFunction& phi2, const Vec& xbar) {
  if (phi1.dim != phi2.dim) throw DimensionMismatch("sum rule for functions on different spaces");
  if (!evaluate(phi1, xbar).is_finite() || !evaluate(phi2, xbar).is_finite())
    throw PreconditionError("base point outside the common domain");

  const Polyhedron lhs = subdifferential(fn_add(phi1, phi2), xbar);
  const Polyhedron rhs = minkowski_sum(subdifferential(phi1, xbar), subdifferential(phi2, xbar));

  // QC: some (x, a1, a2) with (x, a1) interior to epi phi1 and (x, a2) in epi
  // phi2 — equivalently an argument interior to dom phi1 inside dom phi2,
  // with the first epigraph solid.
  const Index n = phi1.dim;
  std::vector<Index> c2 = iota_range(0, n);
  c2.push_back(n + 1);
  const bool qc =
      core_meets(embed(phi1.epi, n + 2, iota_range(0, n + 1)), embed(phi2.epi, n + 2, c2));
  return RuleVerdict{lhs, rhs, qc, set_equal(lhs, rhs), subset_of(rhs, lhs)};
}

PolyFunction fn_precompose(const PolyFunction& phi, const Mat& a) {
  if (a.rows() != phi.dim) throw DimensionMismatch("linear map lands outside the function's space");
  const Index m = phi.dim;
  const Index n = a.cols();
  const HRep& h = phi.epi.hrep();
  HRep out = HRep::universe(n + 1);
  out.A = Mat::Constant(h.A.rows(), n + 1, Rational(0));
  out.b = h.b;
  for (Index i = 0; i < h.A.rows(); ++i) {
    out.A.row(i).head(n) = h.A.row(i).head(m) * a;
    out.A(i, n) = h.A(i, m);
  }
  out.C = Mat::Constant(h.C.rows(), n + 1, Rational(0));
  out.d = h.d;
  for (Index i = 0; i < h.C.rows(); ++i) {
    out.C.row(i).head(n) = h.C.row(i).head(m) * a;
    out.C(i, n) = h.C(i, m);
  }
  return make_function(n, Polyhedron(std::move(out)));
}

Polyhedron adjoint_image(const Mat& a, const Polyhedron& s) {
  if (s.ambient_dim() != a.rows()) throw DimensionMismatch("adjoint image of the wrong dual space");
  const VRep& v = s.vrep();
  VRep out;
  out.dim = a.cols();
  for (const Vec& vert : v.vertices) out.vertices.push_back(a.transpose() * vert);
  for (const Vec& ray : v.rays) {
    const Vec image = a.transpose() * ray;
    if (!is_zero_vec(image)) out.rays.push_back(image);
  }
  if (out.vertices.empty()) return Polyhedron(HRep::empty_set(a.cols()));
  return Polyhedron::from_vrep(std::move(out));
}

RuleVerdict subdiff_chain_rule(const PolyFunction& phi, const Mat& a, const Vec& xbar) {
  if (a.rows() != phi.dim) throw DimensionMismatch("linear map lands outside the function's space");
  if (xbar.size() != a.cols()) throw DimensionMismatch("chain rule point of wrong dimension");
  const Index m = phi.dim;
  const Index n = a.cols();
  const Vec ybar = a * xbar;
  if (!evaluate(phi, ybar).is_finite())
    throw PreconditionError("mapped base point outside the domain");

  const Polyhedron lhs = subdifferential(fn_precompose(phi, a), xbar);
  const Polyhedron rhs = adjoint_image(a, subdifferential(phi, ybar));

  // QC: the range of the map reaches the interior of the domain, with the
  // epigraph solid — one interior-meets check against range x value axis.
  Mat C = Mat::Constant(m, m + n, Rational(0));
  for (Index i = 0; i < m; ++i) {
    C(i, i) = Rational(1);
    C.row(i).tail(n) = -a.row(i);
  }
  const Polyhedron range = project(
      Polyhedron(HRep{m + n, Mat::Constant(0, m + n, Rational(0)), Vec(0), std::move(C),
                      zero_vec(m)}),
      iota_range(0, m));
  const bool qc = core_meets(phi.epi, product(range, Polyhedron(HRep::universe(1))));
  return RuleVerdict{lhs, rhs, qc, set_equal(lhs, rhs), subset_of(rhs, lhs)};
}

PolyFunction indicator(const Polyhedron& om) {
  if (om.is_empty()) throw ImproperFunctionError("indicator of the empty set");
  HRep axis = HRep::universe(1);
  axis.A = Mat::Constant(1, 1, Rational(-1));
  axis.b = zero_vec(1);
  return make_function(om.ambient_dim(), product(om, Polyhedron(std::move(axis))));
}

namespace {

/** Epigraph of the optimal-value function: eliminate y from (x,y,a) systems. */
Polyhedron marginal_epi(const PolyFunction& phi, const SetValuedMap& f) {
  const Index n = f.dim_in;
  const Index m = f.dim_out;
  const Polyhedron joint =
      intersect(phi.epi, embed(f.graph, n + m + 1, iota_range(0, n + m)));
  std::vector<Index> keep = iota_range(0, n);
  keep.push_back(n + m);
  return project(joint, keep);
}

}  // namespace

MarginalProblem make_marginal(PolyFunction phi, SetValuedMap f) {
  if (phi.dim != f.dim_in + f.dim_out)
    throw DimensionMismatch("objective arguments must split into map input and output");
  const Polyhedron epi_mu = marginal_epi(phi, f);
  if (epi_mu.is_empty()) throw ImproperFunctionError("value function with empty domain");
  if (contains_direction(epi_mu.hrep(), -unit_vec(f.dim_in + 1, f.dim_in)))
    throw UnboundedBelowError("objective unbounded below over some fiber");
  return MarginalProblem{std::move(phi), std::move(f)};
}

PolyFunction marginal_function(const MarginalProblem& m) {
  return make_function(m.f.dim_in, marginal_epi(m.phi, m.f));
}

Polyhedron argmin_set(const MarginalProblem& m, const Vec& xbar) {
  const Index dm = m.f.dim_out;
  const ExtRational val = evaluate(marginal_function(m), xbar);
  if (!val.is_finite()) throw PreconditionError("minimization point outside the value domain");
  // {y : phi(xbar, y) <= mu(xbar)} intersected with the fiber F(xbar).
  const Polyhedron heights = substitute_prefix(m.phi.epi, xbar);  // over (y, a)
  HRep level = HRep::universe(dm + 1);
  level.C = Mat::Constant(1, dm + 1, Rational(0));
  level.C(0, dm) = Rational(1);
  level.d = Vec(1);
  level.d[0] = val.value();
  const Polyhedron at_value = intersect(heights, Polyhedron(std::move(level)));
  return intersect(project(at_value, iota_range(0, dm)), map_value(m.f, xbar));
}

RuleVerdict marginal_subdiff_rule(const MarginalProblem& m, const Vec& xbar, const Vec& ybar) {
  const Index n = m.f.dim_in;
  const Index dm = m.f.dim_out;
  if (xbar.size() != n || ybar.size() != dm)
    throw DimensionMismatch("marginal rule point of wrong dimension");
  if (!contains(argmin_set(m, xbar), ybar))
    throw PreconditionError("base output is not a minimizer");

  const Polyhedron lhs = subdifferential(marginal_function(m), xbar);

  // rhs = {f + u : (f, g) subgradient of the objective, u in the coderivative
  // of the constraint map at g}, as one joint projection over (h, f, g, u).
  Vec xy(n + dm);
  xy.head(n) = xbar;
  xy.tail(dm) = ybar;
  const Polyhedron sd = subdifferential(m.phi, xy);
  const SetValuedMap cm = coderivative_as_map(m.f, xbar, ybar);
  const Index total = 3 * n + dm;  // blocks: h | f | g | u
  Mat C = Mat::Constant(n, total, Rational(0));
  for (Index i = 0; i < n; ++i) {
    C(i, i) = Rational(1);
    C(i, n + i) = Rational(-1);
    C(i, 2 * n + dm + i) = Rational(-1);
  }
  const Polyhedron split(HRep{total, Mat::Constant(0, total, Rational(0)), Vec(0), std::move(C),
                              zero_vec(n)});
  const Polyhedron joint = intersect(
      intersect(embed(sd, total, iota_range(n, 2 * n + dm)),
                embed(cm.graph, total, iota_range(2 * n, total))),
      split);
  const Polyhedron rhs = project(joint, iota_range(0, n));

  // QC route one: solid objective epigraph whose domain interior meets the
  // constraint graph (the dimension test is the solidity decision); route
  // two: the constraint graph's interior meets the objective domain.
  const bool qf = m.phi.epi.dim() == n + dm + 1 &&
                  core_meets(m.phi.epi, embed(m.f.graph, n + dm + 1, iota_range(0, n + dm)));
  const bool qf1 = core_meets(m.f.graph, fn_domain(m.phi));
  const bool qc = qf || qf1;
  return RuleVerdict{lhs, rhs, qc, set_equal(lhs, rhs), subset_of(rhs, lhs)};
}

}  // namespace corecalc
