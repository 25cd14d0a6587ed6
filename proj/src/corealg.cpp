#include "corecalc/corealg.hpp"

#include <stdexcept>
#include <utility>

#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"
#include "corecalc/lp.hpp"
#include "corecalc/normalcalc.hpp"

namespace corecalc {

bool core_contains(const Polyhedron& om, const Vec& x) {
  if (!contains(om, x)) return false;
  const HRep& h = om.hrep();
  if (h.C.rows() > 0) return false;  // a genuine equation leaves no interior
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), x) == h.b[i]) return false;
  return true;
}

std::optional<Vec> is_core_solid(const Polyhedron& om) { return strict_interior_point(om.hrep()); }

bool is_absorbing(const Polyhedron& om) { return core_contains(om, zero_vec(om.ambient_dim())); }

Rational gauge(const Polyhedron& om, const Vec& x) {
  if (x.size() != om.ambient_dim()) throw DimensionMismatch("gauge argument of wrong dimension");
  if (!is_absorbing(om)) throw PreconditionError("gauge of a non-absorbing set");
  const HRep& h = om.hrep();
  Rational g(0);  // the infimum over an absorbing set is never negative
  for (Index i = 0; i < h.A.rows(); ++i) {
    // b > 0 for every row: 0 satisfies all of them strictly.
    const Rational v = dot(h.A.row(i).transpose(), x) / h.b[i];
    g = max(g, v);
  }
  return g;
}

bool core_meets(const Polyhedron& solid, const Polyhedron& other) {
  if (solid.ambient_dim() != other.ambient_dim())
    throw DimensionMismatch("qualification check in different spaces");
  const HRep& hs = solid.hrep();
  if (hs.C.rows() > 0) return false;  // equations preclude interior points
  const HRep& ho = other.hrep();
  const Index n = hs.dim;

  // Variables (z, s): maximize s with every solid row slack at least s.
  const Index rows = hs.A.rows() + ho.A.rows() + 2;
  Mat A = Mat::Constant(rows, n + 1, Rational(0));
  Vec b(rows);
  Index r = 0;
  for (Index i = 0; i < hs.A.rows(); ++i, ++r) {
    A.row(r).head(n) = hs.A.row(i);
    A(r, n) = Rational(1);
    b[r] = hs.b[i];
  }
  for (Index i = 0; i < ho.A.rows(); ++i, ++r) {
    A.row(r).head(n) = ho.A.row(i);
    b[r] = ho.b[i];
  }
  A(r, n) = Rational(-1);
  b[r] = Rational(0);
  ++r;
  A(r, n) = Rational(1);
  b[r] = Rational(1);

  Mat C = Mat::Constant(ho.C.rows(), n + 1, Rational(0));
  for (Index i = 0; i < ho.C.rows(); ++i) C.row(i).head(n) = ho.C.row(i);

  const LpResult lp = lp_solve(A, b, C, ho.d, unit_vec(n + 1, n), /*maximize=*/true);
  return lp.status == LpStatus::Optimal && lp.value.sign() > 0;
}

namespace {

// Sum of the facet normals violated at x0, or of the active ones when x0 is a
// boundary member. Nonzero whenever om is nonempty and full-dimensional.
Vec separating_direction(const HRep& h, const Vec& x0) {
  Vec f = zero_vec(h.dim);
  bool violated = false;
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), x0) > h.b[i]) {
      f += h.A.row(i).transpose();
      violated = true;
    }
  if (violated) return f;
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), x0) == h.b[i]) f += h.A.row(i).transpose();
  return f;
}

}  // namespace

std::optional<SeparationCertificate> separate_point(const Polyhedron& om, const Vec& x0) {
  if (x0.size() != om.ambient_dim())
    throw DimensionMismatch("separation point of wrong dimension");
  if (om.is_empty()) throw PreconditionError("separation from an empty set");
  const auto w = strict_interior_point(om.hrep());
  if (!w) throw NotCoreSolidError("separation requires a full-dimensional set");
  if (core_contains(om, x0)) return std::nullopt;

  const Vec f = primitive(separating_direction(om.hrep(), x0));
  if (is_zero_vec(f)) throw std::logic_error("separating direction degenerated to zero");

  const OptResult sup = optimize(om.hrep(), f, /*maximize=*/true);
  if (!sup.bounded) throw std::logic_error("separating functional unbounded on the set");

  SeparationCertificate cert;
  cert.f = f;
  cert.sup_lhs = ExtRational(sup.value);
  cert.inf_rhs = ExtRational(dot(f, x0));
  cert.proper_witnesses = std::make_pair(*w, x0);
  return cert;
}

namespace {

// A point of om with f-value strictly below `bound` (used when the minimum
// does not exist); caller guarantees such points exist.
Vec point_below(const Polyhedron& om, const Vec& f, const Rational& bound) {
  HRep h = om.hrep();
  const Index r = h.A.rows();
  Mat A(r + 1, h.dim);
  A.topRows(r) = h.A;
  A.row(r) = f.transpose();
  Vec b(r + 1);
  b.head(r) = h.b;
  b[r] = bound;
  h.A = std::move(A);
  h.b = std::move(b);
  const auto p = feasible_point(h);
  if (!p) throw std::logic_error("unbounded functional with no sublevel point");
  return *p;
}

}  // namespace

std::optional<SeparationCertificate> separate_sets(const Polyhedron& om1, const Polyhedron& om2) {
  if (om1.ambient_dim() != om2.ambient_dim())
    throw DimensionMismatch("separation of sets in different spaces");
  if (om1.is_empty() || om2.is_empty()) throw PreconditionError("separation of an empty set");
  const Polyhedron diff = minkowski_sum(om1, negate(om2));
  const auto base = separate_point(diff, zero_vec(diff.ambient_dim()));
  if (!base) return std::nullopt;
  const Vec& f = base->f;

  // f(a - b) <= 0 on the difference pins the orientation sup f(om1) <= inf f(om2).
  const OptResult sup1 = optimize(om1.hrep(), f, /*maximize=*/true);
  const OptResult inf2 = optimize(om2.hrep(), f, /*maximize=*/false);
  if (!sup1.bounded || !inf2.bounded)
    throw std::logic_error("separating functional unbounded on a separated side");

  SeparationCertificate cert;
  cert.f = f;
  cert.sup_lhs = ExtRational(sup1.value);
  cert.inf_rhs = ExtRational(inf2.value);

  const OptResult min1 = optimize(om1.hrep(), f, /*maximize=*/false);
  const Vec a = min1.bounded ? min1.point : point_below(om1, f, sup1.value - Rational(1));
  const OptResult max2 = optimize(om2.hrep(), f, /*maximize=*/true);
  const Vec b = max2.bounded ? max2.point : point_below(om2, -f, -(inf2.value + Rational(1)));
  if (dot(f, a) < dot(f, b)) cert.proper_witnesses = std::make_pair(a, b);
  return cert;
}

ExtremalityCertificate is_extremal(const Polyhedron& om1, const Polyhedron& om2) {
  if (om1.ambient_dim() != om2.ambient_dim())
    throw DimensionMismatch("extremality of sets in different spaces");
  if (om1.is_empty() || om2.is_empty()) throw PreconditionError("extremality of an empty set");
  const Polyhedron diff = minkowski_sum(om1, negate(om2));
  const Vec zero = zero_vec(diff.ambient_dim());

  ExtremalityCertificate cert;
  cert.verdict = !core_contains(diff, zero);
  if (!cert.verdict) return cert;

  // Witness direction: a constraint of the difference that 0 violates or sits
  // on. Shifting against it by 1/2^k exits the difference set for every k.
  const HRep& h = diff.hrep();
  Vec dir;
  int sign = -1;
  for (Index i = 0; dir.size() == 0 && i < h.A.rows(); ++i)
    if (h.b[i].sign() < 0) dir = h.A.row(i).transpose();  // violated facet
  for (Index i = 0; dir.size() == 0 && i < h.C.rows(); ++i)
    if (!h.d[i].is_zero()) {  // violated equation; exit on its strict side
      dir = h.C.row(i).transpose();
      sign = h.d[i].sign() > 0 ? 1 : -1;
    }
  for (Index i = 0; dir.size() == 0 && i < h.C.rows(); ++i) dir = h.C.row(i).transpose();
  for (Index i = 0; dir.size() == 0 && i < h.A.rows(); ++i)
    if (h.b[i].is_zero()) dir = h.A.row(i).transpose();  // active facet
  if (dir.size() == 0) throw std::logic_error("boundary point with no tight constraint");

  cert.direction = dir;
  for (long k = 0; k <= 20; ++k) {
    const Rational t(sign, 1L << k);
    if (!intersect(translate(om1, dir * t), om2).is_empty())
      throw std::logic_error("shift certificate failed the emptiness check");
    cert.checked_ts.push_back(t);
  }
  return cert;
}

std::optional<Vec> extremal_principle(const Polyhedron& om1, const Polyhedron& om2,
                                      const Vec& xbar) {
  if (!contains(om1, xbar) || !contains(om2, xbar))
    throw PreconditionError("base point outside the intersection");
  const Polyhedron diff = minkowski_sum(om1, negate(om2));
  if (!strict_interior_point(diff.hrep()))
    throw NotCoreSolidError("difference set is not full-dimensional");

  const auto n1 = normal_cone(om1, xbar);
  const auto n2 = normal_cone(om2, xbar);
  const PolyCone common = cone_intersect(*n1, cone_neg(*n2));
  if (cone_is_trivial(common)) return std::nullopt;
  if (!common.lineality.empty()) return common.lineality.front();
  return common.generators.front();
}

}  // namespace corecalc
