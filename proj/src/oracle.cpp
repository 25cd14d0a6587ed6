#include "corecalc/oracle.hpp"

#include <random>

#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"
#include "corecalc/lp.hpp"

namespace corecalc {

namespace {

/** Membership by direct row evaluation — no canonicalization, no caching. */
bool raw_member(const HRep& h, const Vec& x) {
  for (Index i = 0; i < h.A.rows(); ++i)
    if ((dot(Vec(h.A.row(i).transpose()), x) - h.b[i]).sign() > 0) return false;
  for (Index i = 0; i < h.C.rows(); ++i)
    if (!(dot(Vec(h.C.row(i).transpose()), x) - h.d[i]).is_zero()) return false;
  return true;
}

/** phi(xbar) as a one-variable LP over the raw epigraph rows. */
Rational value_by_rows(const PolyFunction& phi, const Vec& xbar) {
  const HRep& h = phi.epi.hrep();
  const Index n = phi.dim;
  Mat A(h.A.rows(), 1);
  Vec b(h.A.rows());
  for (Index i = 0; i < h.A.rows(); ++i) {
    A(i, 0) = h.A(i, n);
    b[i] = h.b[i] - dot(Vec(h.A.row(i).head(n).transpose()), xbar);
  }
  Mat C(h.C.rows(), 1);
  Vec d(h.C.rows());
  for (Index i = 0; i < h.C.rows(); ++i) {
    C(i, 0) = h.C(i, n);
    d[i] = h.d[i] - dot(Vec(h.C.row(i).head(n).transpose()), xbar);
  }
  Vec obj(1);
  obj[0] = Rational(1);
  const LpResult r = lp_solve(A, b, C, d, obj, /*maximize=*/false);
  if (r.status == LpStatus::Infeasible)
    throw PreconditionError("base point outside the function's domain");
  if (r.status == LpStatus::Unbounded)
    throw ImproperFunctionError("function reaches minus infinity");
  return r.value;
}

}  // namespace

OracleReport oracle_normal_member(const Polyhedron& om, const Vec& xbar, const Vec& f) {
  if (xbar.size() != om.ambient_dim() || f.size() != om.ambient_dim())
    throw DimensionMismatch("normal-membership check of mismatched dimensions");
  if (!raw_member(om.hrep(), xbar))
    throw PreconditionError("base point outside the set");
  OracleReport rep{OracleClaim::normal_member};
  for (const Vec& v : om.vrep().vertices) {
    if (dot(f, Vec(v - xbar)).sign() > 0) {
      rep.witness = v;
      return rep;
    }
  }
  for (const Vec& r : om.vrep().rays) {
    if (dot(f, r).sign() > 0) {
      rep.witness = r;
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

OracleReport oracle_subgrad_member(const PolyFunction& phi, const Vec& xbar, const Vec& f) {
  if (xbar.size() != phi.dim || f.size() != phi.dim)
    throw DimensionMismatch("subgradient check of mismatched dimensions");
  const Rational base = value_by_rows(phi, xbar);
  OracleReport rep{OracleClaim::subgrad_member};
  const Index n = phi.dim;
  // At an epigraph vertex (x_v, a_v) the minorization reads
  // a_v >= phi(xbar) + f(x_v - xbar); along a ray it reads a_r >= f(x_r).
  for (const Vec& v : phi.epi.vrep().vertices) {
    const Vec xv = v.head(n);
    if ((v[n] - base - dot(f, Vec(xv - xbar))).sign() < 0) {
      rep.witness = xv;
      return rep;
    }
  }
  for (const Vec& r : phi.epi.vrep().rays) {
    const Vec xr = r.head(n);
    if ((r[n] - dot(f, xr)).sign() < 0) {
      rep.witness = xr;
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

OracleReport oracle_core_member(const Polyhedron& om, const Vec& x) {
  if (x.size() != om.ambient_dim())
    throw DimensionMismatch("interiority check of mismatched dimensions");
  OracleReport rep{OracleClaim::core_member};
  const HRep& h = om.hrep();
  if (!raw_member(h, x)) {
    rep.witness = x;
    return rep;
  }
  Rational delta(1);
  bool first = true;
  for (Index axis = 0; axis < om.ambient_dim(); ++axis) {
    for (int sign : {1, -1}) {
      const Vec d = Vec(Rational(sign) * unit_vec(om.ambient_dim(), axis));
      // An equation row with a component along d blocks every positive step.
      bool blocked = false;
      for (Index i = 0; i < h.C.rows() && !blocked; ++i)
        if (!dot(Vec(h.C.row(i).transpose()), d).is_zero()) blocked = true;
      Rational step(1);
      for (Index i = 0; i < h.A.rows() && !blocked; ++i) {
        const Rational along = dot(Vec(h.A.row(i).transpose()), d);
        if (along.sign() <= 0) continue;
        const Rational cap = (h.b[i] - dot(Vec(h.A.row(i).transpose()), x)) / along;
        if (cap.is_zero()) blocked = true;
        step = min(step, cap);
      }
      if (blocked) {
        rep.witness = d;
        return rep;
      }
      delta = first ? step : min(delta, step);
      first = false;
    }
  }
  rep.verdict = true;
  rep.delta = delta;
  return rep;
}

OracleReport oracle_separation_valid(const Polyhedron& om1, const Polyhedron& om2, const Vec& f) {
  if (om1.ambient_dim() != om2.ambient_dim() || f.size() != om1.ambient_dim())
    throw DimensionMismatch("separation check of mismatched dimensions");
  if (om1.is_empty() || om2.is_empty())
    throw PreconditionError("separation check against an empty set");
  OracleReport rep{OracleClaim::separation_valid};
  if (is_zero_vec(f)) {
    rep.witness = f;
    return rep;
  }
  // A ray increasing f on the left (or decreasing it on the right) makes the
  // corresponding bound infinite, so no threshold can exist.
  for (const Vec& r : om1.vrep().rays) {
    if (dot(f, r).sign() > 0) {
      rep.witness = r;
      return rep;
    }
  }
  for (const Vec& r : om2.vrep().rays) {
    if (dot(f, r).sign() < 0) {
      rep.witness = r;
      return rep;
    }
  }
  const Vec* worst = nullptr;
  Rational sup1;
  for (const Vec& v : om1.vrep().vertices) {
    const Rational val = dot(f, v);
    if (worst == nullptr || val > sup1) {
      sup1 = val;
      worst = &v;
    }
  }
  Rational inf2;
  bool have2 = false;
  for (const Vec& v : om2.vrep().vertices) {
    const Rational val = dot(f, v);
    if (!have2 || val < inf2) {
      inf2 = val;
      have2 = true;
    }
  }
  if (sup1 > inf2) {
    rep.witness = *worst;
    return rep;
  }
  rep.verdict = true;
  return rep;
}

namespace {

/** Random convex combination of vertices plus a conic combination of rays,
 * with small integer-bounded coefficients. */
Vec sample_point(const VRep& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(0, 4);
  std::uniform_int_distribution<int> den(1, 2);
  Vec p = zero_vec(v.dim);
  Rational total(0);
  for (const Vec& vert : v.vertices) {
    const Rational w(weight(rng));
    p += w * vert;
    total += w;
  }
  if (total.is_zero()) {
    p = v.vertices.front();
  } else {
    p /= total;
  }
  for (const Vec& ray : v.rays) p += Rational(weight(rng), den(rng)) * ray;
  return p;
}

/** First point drawn from `from` that falls outside `into`, if any. */
std::optional<Vec> first_escapee(const Polyhedron& from, const Polyhedron& into, int samples,
                                 std::mt19937_64& rng) {
  const VRep& v = from.vrep();
  const HRep& target = into.hrep();
  for (const Vec& vert : v.vertices)
    if (!raw_member(target, vert)) return vert;
  for (const Vec& vert : v.vertices)
    for (const Vec& ray : v.rays) {
      const Vec p = vert + ray;
      if (!raw_member(target, p)) return p;
    }
  for (int k = 0; k < samples; ++k) {
    const Vec p = sample_point(v, rng);
    if (!raw_member(target, p)) return p;
  }
  return std::nullopt;
}

}  // namespace

OracleReport oracle_rule_equal(const Polyhedron& lhs, const Polyhedron& rhs, int samples,
                               std::uint64_t seed) {
  if (lhs.ambient_dim() != rhs.ambient_dim())
    throw DimensionMismatch("equality check of mismatched dimensions");
  OracleReport rep{OracleClaim::set_equal};
  rep.seed = seed;
  if (lhs.is_empty() != rhs.is_empty()) {
    const Polyhedron& full = lhs.is_empty() ? rhs : lhs;
    rep.witness = full.vrep().vertices.front();
    return rep;
  }
  if (lhs.is_empty()) {
    rep.verdict = true;
    return rep;
  }
  std::mt19937_64 rng(seed);
  if (auto w = first_escapee(lhs, rhs, samples, rng)) {
    rep.witness = *w;
    return rep;
  }
  if (auto w = first_escapee(rhs, lhs, samples, rng)) {
    rep.witness = *w;
    return rep;
  }
  rep.verdict = true;
  return rep;
}

}  // namespace corecalc
