#include "corecalc/normalcalc.hpp"

#include <algorithm>
#include <utility>

#include "corecalc/corealg.hpp"
#include "corecalc/dd.hpp"
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

void check_dim(const std::vector<Vec>& vs, Index dim, const char* what) {
  for (const Vec& v : vs)
    if (v.size() != dim) throw DimensionMismatch(what);
}

}  // namespace

PolyCone make_cone(Index dim, std::vector<Vec> generators, std::vector<Vec> lineality) {
  check_dim(generators, dim, "cone generator of wrong dimension");
  check_dim(lineality, dim, "cone line of wrong dimension");
  auto [basis, pivots] = rref_basis(lineality);
  std::vector<Vec> gens;
  for (const Vec& g : generators) {
    const Vec r = primitive(reduce_against(g, basis, pivots));
    if (is_zero_vec(r)) continue;
    bool seen = false;
    for (const Vec& k : gens) seen = seen || vec_eq(k, r);
    if (!seen) gens.push_back(r);
  }
  std::sort(gens.begin(), gens.end(), lex_less);
  return PolyCone{dim, std::move(gens), std::move(basis)};
}

Polyhedron cone_as_polyhedron(const PolyCone& c) {
  VRep v;
  v.dim = c.dim;
  v.vertices.push_back(zero_vec(c.dim));
  v.rays = c.generators;
  for (const Vec& l : c.lineality) {
    v.rays.push_back(l);
    v.rays.push_back(-l);
  }
  return Polyhedron::from_vrep(std::move(v));
}

PolyCone cone_sum(const PolyCone& a, const PolyCone& b) {
  if (a.dim != b.dim) throw DimensionMismatch("cone sum in different spaces");
  std::vector<Vec> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  std::vector<Vec> lines = a.lineality;
  lines.insert(lines.end(), b.lineality.begin(), b.lineality.end());
  return make_cone(a.dim, std::move(gens), std::move(lines));
}

PolyCone cone_neg(const PolyCone& c) {
  std::vector<Vec> gens;
  gens.reserve(c.generators.size());
  for (const Vec& g : c.generators) gens.push_back(-g);
  return make_cone(c.dim, std::move(gens), c.lineality);
}

namespace {

// Facet form {x : F x <= 0, E x = 0} of a generated cone. The facet normals
// are exactly the generators of the polar cone {a : g.a <= 0, l.a = 0}.
std::pair<Mat, Mat> cone_facets(const PolyCone& c) {
  Mat G = Mat::Constant(static_cast<Index>(c.generators.size()), c.dim, Rational(0));
  for (Index i = 0; i < G.rows(); ++i) G.row(i) = c.generators[i].transpose();
  Mat L = Mat::Constant(static_cast<Index>(c.lineality.size()), c.dim, Rational(0));
  for (Index i = 0; i < L.rows(); ++i) L.row(i) = c.lineality[i].transpose();
  const ConeGens polar = cone_generators(G, L);
  Mat F = Mat::Constant(static_cast<Index>(polar.rays.size()), c.dim, Rational(0));
  for (Index i = 0; i < F.rows(); ++i) F.row(i) = polar.rays[i].transpose();
  Mat E = Mat::Constant(static_cast<Index>(polar.lines.size()), c.dim, Rational(0));
  for (Index i = 0; i < E.rows(); ++i) E.row(i) = polar.lines[i].transpose();
  return {std::move(F), std::move(E)};
}

}  // namespace

PolyCone cone_intersect(const PolyCone& a, const PolyCone& b) {
  if (a.dim != b.dim) throw DimensionMismatch("cone intersection in different spaces");
  const auto [fa, ea] = cone_facets(a);
  const auto [fb, eb] = cone_facets(b);
  Mat F = Mat::Constant(fa.rows() + fb.rows(), a.dim, Rational(0));
  F.topRows(fa.rows()) = fa;
  F.bottomRows(fb.rows()) = fb;
  Mat E = Mat::Constant(ea.rows() + eb.rows(), a.dim, Rational(0));
  E.topRows(ea.rows()) = ea;
  E.bottomRows(eb.rows()) = eb;
  const ConeGens gens = cone_generators(F, E);
  return make_cone(a.dim, gens.rays, gens.lines);
}

bool cone_is_trivial(const PolyCone& c) { return cone_as_polyhedron(c).dim() == 0; }

bool cone_equal(const PolyCone& a, const PolyCone& b) {
  if (a.dim != b.dim) throw DimensionMismatch("cone comparison in different spaces");
  return set_equal(cone_as_polyhedron(a), cone_as_polyhedron(b));
}

std::optional<PolyCone> normal_cone(const Polyhedron& om, const Vec& xbar) {
  if (xbar.size() != om.ambient_dim())
    throw DimensionMismatch("normal cone base point of wrong dimension");
  if (!contains(om, xbar)) return std::nullopt;
  const HRep& h = om.hrep();
  std::vector<Vec> gens;
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), xbar) == h.b[i]) gens.push_back(h.A.row(i).transpose());
  std::vector<Vec> lines;
  for (Index j = 0; j < h.C.rows(); ++j) lines.push_back(h.C.row(j).transpose());
  return make_cone(h.dim, std::move(gens), std::move(lines));
}

SetValuedMap make_map(Index dim_in, Index dim_out, Polyhedron graph) {
  if (dim_in < 1 || dim_out < 1) throw DimensionMismatch("map needs nonzero input and output");
  if (graph.ambient_dim() != dim_in + dim_out)
    throw DimensionMismatch("graph dimension is not the sum of input and output");
  return SetValuedMap{dim_in, dim_out, std::move(graph)};
}

Polyhedron map_domain(const SetValuedMap& f) { return project(f.graph, iota_range(0, f.dim_in)); }

Polyhedron map_value(const SetValuedMap& f, const Vec& x) {
  if (x.size() != f.dim_in) throw DimensionMismatch("map argument of wrong dimension");
  return substitute_prefix(f.graph, x);
}

std::pair<bool, bool> graph_core_check(const SetValuedMap& f, const Vec& xy) {
  if (xy.size() != f.dim_in + f.dim_out)
    throw DimensionMismatch("graph point of wrong dimension");
  if (!is_core_solid(f.graph)) throw NotCoreSolidError("graph interior check needs a solid graph");
  const Vec x = xy.head(f.dim_in);
  const Vec y = xy.tail(f.dim_out);
  const bool whole = core_contains(f.graph, xy);
  const bool split = core_contains(map_domain(f), x) && core_contains(map_value(f, x), y);
  return {whole, split};
}

/**
 * Normals to a constraint set are the nonnegative combinations of its active
 * inequality rows plus arbitrary combinations of its equation rows, so the
 * bundled coderivative graph {(w, g) : (g, -w) normal at (xbar, ybar)} is the
 * projection of an exact multiplier system.
 */
SetValuedMap coderivative_as_map(const SetValuedMap& f, const Vec& xbar, const Vec& ybar) {
  const Index n = f.dim_in;
  const Index m = f.dim_out;
  Vec xy(n + m);
  xy.head(n) = xbar;
  xy.tail(m) = ybar;
  if (!contains(f.graph, xy)) return SetValuedMap{m, n, Polyhedron(HRep::empty_set(m + n))};

  const HRep& h = f.graph.hrep();
  std::vector<Index> act;
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), xy) == h.b[i]) act.push_back(i);
  const Index ka = static_cast<Index>(act.size());
  const Index ke = h.C.rows();
  const Index total = m + n + ka + ke;  // blocks: w | g | lambda | mu

  // g = sum_i lambda_i p_i + sum_j mu_j c_j  (input-block coordinates)
  // w + sum_i lambda_i q_i + sum_j mu_j d_j = 0  (output-block coordinates)
  Mat C = Mat::Constant(n + m, total, Rational(0));
  for (Index t = 0; t < n; ++t) {
    C(t, m + t) = Rational(1);
    for (Index i = 0; i < ka; ++i) C(t, m + n + i) = -h.A(act[i], t);
    for (Index j = 0; j < ke; ++j) C(t, m + n + ka + j) = -h.C(j, t);
  }
  for (Index s = 0; s < m; ++s) {
    C(n + s, s) = Rational(1);
    for (Index i = 0; i < ka; ++i) C(n + s, m + n + i) = h.A(act[i], n + s);
    for (Index j = 0; j < ke; ++j) C(n + s, m + n + ka + j) = h.C(j, n + s);
  }
  Mat A = Mat::Constant(ka, total, Rational(0));
  for (Index i = 0; i < ka; ++i) A(i, m + n + i) = Rational(-1);

  HRep sys{total, std::move(A), zero_vec(ka), std::move(C), zero_vec(n + m)};
  return SetValuedMap{m, n, project(Polyhedron(std::move(sys)), iota_range(0, m + n))};
}

Polyhedron coderivative(const SetValuedMap& f, const Vec& xbar, const Vec& ybar, const Vec& g) {
  if (xbar.size() != f.dim_in || ybar.size() != f.dim_out)
    throw DimensionMismatch("coderivative base point of wrong dimension");
  if (g.size() != f.dim_out) throw DimensionMismatch("coderivative argument of wrong dimension");
  const SetValuedMap cm = coderivative_as_map(f, xbar, ybar);
  if (cm.graph.is_empty()) return Polyhedron(HRep::empty_set(f.dim_in));
  return map_value(cm, g);
}

SetValuedMap map_sum(const SetValuedMap& f1, const SetValuedMap& f2) {
  if (f1.dim_in != f2.dim_in || f1.dim_out != f2.dim_out)
    throw DimensionMismatch("map sum of maps with different signatures");
  const Index n = f1.dim_in;
  const Index m = f1.dim_out;
  const Index total = n + 3 * m;  // blocks: x | y | y1 | y2

  std::vector<Index> c1 = iota_range(0, n);
  for (Index s = 0; s < m; ++s) c1.push_back(n + m + s);
  std::vector<Index> c2 = iota_range(0, n);
  for (Index s = 0; s < m; ++s) c2.push_back(n + 2 * m + s);

  Mat C = Mat::Constant(m, total, Rational(0));
  for (Index s = 0; s < m; ++s) {
    C(s, n + s) = Rational(1);
    C(s, n + m + s) = Rational(-1);
    C(s, n + 2 * m + s) = Rational(-1);
  }
  const Polyhedron split(HRep{total, Mat::Constant(0, total, Rational(0)), Vec(0), std::move(C),
                              zero_vec(m)});
  const Polyhedron joint =
      intersect(intersect(embed(f1.graph, total, c1), embed(f2.graph, total, c2)), split);
  return SetValuedMap{n, m, project(joint, iota_range(0, n + m))};
}

Polyhedron sum_decompositions(const SetValuedMap& f1, const SetValuedMap& f2, const Vec& xbar,
                              const Vec& ybar) {
  if (f1.dim_in != f2.dim_in || f1.dim_out != f2.dim_out)
    throw DimensionMismatch("decomposition of maps with different signatures");
  if (xbar.size() != f1.dim_in || ybar.size() != f1.dim_out)
    throw DimensionMismatch("decomposition point of wrong dimension");
  const Index m = f1.dim_out;
  Mat C = Mat::Constant(m, 2 * m, Rational(0));
  for (Index s = 0; s < m; ++s) {
    C(s, s) = Rational(1);
    C(s, m + s) = Rational(1);
  }
  const Polyhedron split(HRep{2 * m, Mat::Constant(0, 2 * m, Rational(0)), Vec(0), std::move(C),
                              Vec(ybar)});
  return intersect(product(map_value(f1, xbar), map_value(f2, xbar)), split);
}

SetValuedMap map_compose(const SetValuedMap& g, const SetValuedMap& f) {
  if (f.dim_out != g.dim_in) throw DimensionMismatch("composition of incompatible maps");
  const Index n = f.dim_in;
  const Index m = f.dim_out;
  const Index p = g.dim_out;
  const Index total = n + m + p;  // blocks: x | y | z
  const Polyhedron joint = intersect(embed(f.graph, total, iota_range(0, n + m)),
                                     embed(g.graph, total, iota_range(n, n + m + p)));
  std::vector<Index> keep = iota_range(0, n);
  for (Index s = 0; s < p; ++s) keep.push_back(n + m + s);
  return SetValuedMap{n, p, project(joint, keep)};
}

Polyhedron intermediate_points(const SetValuedMap& f, const SetValuedMap& g, const Vec& xbar,
                               const Vec& zbar) {
  if (f.dim_out != g.dim_in) throw DimensionMismatch("composition of incompatible maps");
  if (xbar.size() != f.dim_in || zbar.size() != g.dim_out)
    throw DimensionMismatch("composition point of wrong dimension");
  const Index m = f.dim_out;
  const Index p = g.dim_out;
  const Polyhedron reaching = map_value(f, xbar);
  const Polyhedron hitting = project(
      intersect(g.graph, embed(singleton(zbar), m + p, iota_range(m, m + p))), iota_range(0, m));
  const Polyhedron mid = intersect(reaching, hitting);
  if (mid.is_empty()) throw PreconditionError("no intermediate point joins the base points");
  return mid;
}

RuleVerdict intersection_rule(const Polyhedron& om1, const Polyhedron& om2, const Vec& xbar) {
  if (om1.ambient_dim() != om2.ambient_dim())
    throw DimensionMismatch("intersection rule in different spaces");
  if (!contains(om1, xbar) || !contains(om2, xbar))
    throw PreconditionError("base point outside the intersection");
  // Recompute the intersection's constraints from its generators so the left
  // side does not trivially reuse the rows feeding the right side.
  const auto lhs_cone = normal_cone(canonicalized(intersect(om1, om2)), xbar);
  const auto rhs_cone = cone_sum(*normal_cone(om1, xbar), *normal_cone(om2, xbar));
  const Polyhedron lhs = cone_as_polyhedron(*lhs_cone);
  const Polyhedron rhs = cone_as_polyhedron(rhs_cone);
  const bool qc = core_meets(om1, om2);
  return RuleVerdict{lhs, rhs, qc, set_equal(lhs, rhs), subset_of(rhs, lhs)};
}

RuleVerdict coderivative_sum_rule(const SetValuedMap& f1, const SetValuedMap& f2, const Vec& xbar,
                                  const Vec& ybar, const Vec& y1bar, const Vec& y2bar,
                                  const Vec& g) {
  if (f1.dim_in != f2.dim_in || f1.dim_out != f2.dim_out)
    throw DimensionMismatch("sum rule for maps with different signatures");
  const Index n = f1.dim_in;
  const Index m = f1.dim_out;
  if (xbar.size() != n || ybar.size() != m || y1bar.size() != m || y2bar.size() != m ||
      g.size() != m)
    throw DimensionMismatch("sum rule point of wrong dimension");
  if (!vec_eq(Vec(y1bar + y2bar), ybar))
    throw PreconditionError("decomposition does not add up to the base value");

  const Polyhedron lhs = coderivative(map_sum(f1, f2), xbar, ybar, g);
  const Polyhedron rhs =
      minkowski_sum(coderivative(f1, xbar, y1bar, g), coderivative(f2, xbar, y2bar, g));

  // QC: some (x, y, y2) with (x, y) interior to gph f1 and (x, y2) in gph f2.
  const Index total = n + 2 * m;
  std::vector<Index> c1 = iota_range(0, n + m);
  std::vector<Index> c2 = iota_range(0, n);
  for (Index s = 0; s < m; ++s) c2.push_back(n + m + s);
  const bool qc = core_meets(embed(f1.graph, total, c1), embed(f2.graph, total, c2));
  return RuleVerdict{lhs, rhs, qc, set_equal(lhs, rhs), subset_of(rhs, lhs)};
}

RuleVerdict coderivative_chain_rule(const SetValuedMap& f, const SetValuedMap& g, const Vec& xbar,
                                    const Vec& zbar, const Vec& ybar, const Vec& h) {
  if (f.dim_out != g.dim_in) throw DimensionMismatch("chain rule for incompatible maps");
  const Index n = f.dim_in;
  const Index m = f.dim_out;
  const Index p = g.dim_out;
  if (xbar.size() != n || zbar.size() != p || ybar.size() != m || h.size() != p)
    throw DimensionMismatch("chain rule point of wrong dimension");

  const Polyhedron lhs = coderivative(map_compose(g, f), xbar, zbar, h);
  // Right side: the composition of the two coderivative maps applied to h,
  // i.e. one joint multiplier system projected twice, never an enumeration.
  const SetValuedMap cf = coderivative_as_map(f, xbar, ybar);
  const SetValuedMap cg = coderivative_as_map(g, ybar, zbar);
  const Polyhedron rhs = cf.graph.is_empty() || cg.graph.is_empty()
                             ? Polyhedron(HRep::empty_set(n))
                             : map_value(map_compose(cf, cg), h);

  // QC (i): (x, y) interior to gph f with y in dom g; QC (ii): (y, z) interior
  // to gph g with y in the range of f. Either suffices.
  const Index total = n + m + p;
  const Polyhedron ef = embed(f.graph, total, iota_range(0, n + m));
  const Polyhedron eg = embed(g.graph, total, iota_range(n, n + m + p));
  const bool qc = core_meets(ef, eg) || core_meets(eg, ef);
  return RuleVerdict{lhs, rhs, qc, set_equal(lhs, rhs), subset_of(rhs, lhs)};
}

}  // namespace corecalc
