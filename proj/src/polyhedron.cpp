#include "corecalc/polyhedron.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "corecalc/dd.hpp"
#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"
#include "corecalc/lp.hpp"

namespace corecalc {

namespace {

using RowList = std::vector<std::pair<Vec, Rational>>;

bool row_less(const std::pair<Vec, Rational>& x, const std::pair<Vec, Rational>& y) {
  if (lex_less(x.first, y.first)) return true;
  if (lex_less(y.first, x.first)) return false;
  return x.second < y.second;
}

bool row_eq(const std::pair<Vec, Rational>& x, const std::pair<Vec, Rational>& y) {
  return vec_eq(x.first, y.first) && x.second == y.second;
}

HRep build_hrep(Index dim, RowList ineq, RowList eq) {
  std::sort(ineq.begin(), ineq.end(), row_less);
  ineq.erase(std::unique(ineq.begin(), ineq.end(), row_eq), ineq.end());
  std::sort(eq.begin(), eq.end(), row_less);
  eq.erase(std::unique(eq.begin(), eq.end(), row_eq), eq.end());
  HRep h;
  h.dim = dim;
  h.A = Mat(static_cast<Index>(ineq.size()), dim);
  h.b = Vec(static_cast<Index>(ineq.size()));
  for (std::size_t i = 0; i < ineq.size(); ++i) {
    h.A.row(static_cast<Index>(i)) = ineq[i].first.transpose();
    h.b[static_cast<Index>(i)] = ineq[i].second;
  }
  h.C = Mat(static_cast<Index>(eq.size()), dim);
  h.d = Vec(static_cast<Index>(eq.size()));
  for (std::size_t i = 0; i < eq.size(); ++i) {
    h.C.row(static_cast<Index>(i)) = eq[i].first.transpose();
    h.d[static_cast<Index>(i)] = eq[i].second;
  }
  return h;
}

bool is_canonical_empty(const HRep& h) {
  if (h.A.rows() != 1 || h.C.rows() != 0) return false;
  for (Index j = 0; j < h.dim; ++j)
    if (!h.A(0, j).is_zero()) return false;
  return h.b[0].sign() < 0;
}

}  // namespace

HRep HRep::universe(Index n) {
  HRep h;
  h.dim = n;
  h.A = Mat(0, n);
  h.b = Vec(0);
  h.C = Mat(0, n);
  h.d = Vec(0);
  return h;
}

HRep HRep::empty_set(Index n) {
  HRep h = universe(n);
  h.A = Mat::Constant(1, n, Rational(0));
  h.b = Vec::Constant(1, Rational(-1));
  return h;
}

HRep normalize_hrep(HRep h) {
  if (h.A.rows() != h.b.size() || h.C.rows() != h.d.size() ||
      (h.A.rows() > 0 && h.A.cols() != h.dim) || (h.C.rows() > 0 && h.C.cols() != h.dim))
    throw DimensionMismatch("constraint form has inconsistent shapes");
  RowList ineq, eq;
  for (Index i = 0; i < h.A.rows(); ++i) {
    auto [a, bb] = primitive_row(h.A.row(i).transpose(), h.b[i]);
    if (is_zero_vec(a)) {
      if (bb.sign() < 0) return HRep::empty_set(h.dim);
      continue;
    }
    ineq.emplace_back(std::move(a), std::move(bb));
  }
  for (Index i = 0; i < h.C.rows(); ++i) {
    auto [c, dd] = primitive_row_signed(h.C.row(i).transpose(), h.d[i]);
    if (is_zero_vec(c)) {
      if (!dd.is_zero()) return HRep::empty_set(h.dim);
      continue;
    }
    eq.emplace_back(std::move(c), std::move(dd));
  }
  return build_hrep(h.dim, std::move(ineq), std::move(eq));
}

VRep normalize_vrep(VRep v) {
  if (v.vertices.empty() && !v.rays.empty())
    throw PreconditionError("generator form carries rays but no vertex");
  for (const Vec& x : v.vertices)
    if (x.size() != v.dim) throw DimensionMismatch("vertex of wrong dimension");
  std::vector<Vec> rays;
  for (const Vec& r : v.rays) {
    if (r.size() != v.dim) throw DimensionMismatch("ray of wrong dimension");
    if (is_zero_vec(r)) throw PreconditionError("zero ray in generator form");
    rays.push_back(primitive(r));
  }
  std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
  v.vertices.erase(std::unique(v.vertices.begin(), v.vertices.end(), vec_eq), v.vertices.end());
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end(), vec_eq), rays.end());
  v.rays = std::move(rays);
  return v;
}

VRep hrep_to_vrep(const HRep& h) {
  const Index n = h.dim;
  Mat A(h.A.rows() + 1, n + 1);
  A.row(0).setConstant(Rational(0));
  A(0, n) = Rational(-1);  // homogenizing coordinate stays nonnegative
  for (Index i = 0; i < h.A.rows(); ++i) {
    A.row(i + 1).head(n) = h.A.row(i);
    A(i + 1, n) = -h.b[i];
  }
  Mat C(h.C.rows(), n + 1);
  for (Index i = 0; i < h.C.rows(); ++i) {
    C.row(i).head(n) = h.C.row(i);
    C(i, n) = -h.d[i];
  }
  const ConeGens g = cone_generators(A, C);

  VRep v;
  v.dim = n;
  for (const Vec& r : g.rays) {
    const Rational& t = r[n];
    if (t.sign() > 0) {
      Vec x(n);
      for (Index j = 0; j < n; ++j) x[j] = r[j] / t;
      v.vertices.push_back(std::move(x));
    } else {
      Vec x = r.head(n);
      if (!is_zero_vec(x)) v.rays.push_back(std::move(x));
    }
  }
  if (v.vertices.empty()) return VRep{n, {}, {}};
  for (const Vec& l : g.lines) {
    Vec x = l.head(n);
    v.rays.push_back(x);
    v.rays.push_back(-x);
  }
  return normalize_vrep(std::move(v));
}

HRep vrep_to_hrep(const VRep& vin) {
  const VRep v = normalize_vrep(vin);
  const Index n = v.dim;
  if (v.vertices.empty()) return HRep::empty_set(n);
  Mat R(static_cast<Index>(v.vertices.size() + v.rays.size()), n + 1);
  Index k = 0;
  for (const Vec& x : v.vertices) {
    R.row(k).head(n) = x.transpose();
    R(k, n) = Rational(1);
    ++k;
  }
  for (const Vec& r : v.rays) {
    R.row(k).head(n) = r.transpose();
    R(k, n) = Rational(0);
    ++k;
  }
  const ConeGens polar = cone_generators(R, Mat(0, n + 1));

  RowList ineq, eq;
  for (const Vec& w : polar.rays) {
    Vec a = w.head(n);
    if (is_zero_vec(a)) continue;  // 0.x <= -a0 with a0 <= 0: trivial
    auto [na, nb] = primitive_row(a, -w[n]);
    ineq.emplace_back(std::move(na), std::move(nb));
  }
  for (const Vec& l : polar.lines) {
    Vec c = l.head(n);
    if (is_zero_vec(c)) continue;
    auto [nc, nd] = primitive_row_signed(c, -l[n]);
    eq.emplace_back(std::move(nc), std::move(nd));
  }
  return build_hrep(n, std::move(ineq), std::move(eq));
}

struct Polyhedron::Cache {
  std::mutex m;
  std::optional<VRep> v;
  std::optional<bool> empty;
  std::optional<int> dim;
};

Polyhedron::Polyhedron(HRep h) : h_(normalize_hrep(std::move(h))), cache_(std::make_shared<Cache>()) {}

Polyhedron Polyhedron::from_vrep(VRep v) {
  VRep nv = normalize_vrep(std::move(v));
  const bool empty = nv.vertices.empty();
  Polyhedron out(vrep_to_hrep(nv));
  std::lock_guard<std::mutex> lk(out.cache_->m);
  out.cache_->v = std::move(nv);
  out.cache_->empty = empty;
  return out;
}

const VRep& Polyhedron::vrep() const& {
  std::lock_guard<std::mutex> lk(cache_->m);
  if (!cache_->v) cache_->v = hrep_to_vrep(h_);
  return *cache_->v;
}

VRep Polyhedron::vrep() && { return static_cast<const Polyhedron&>(*this).vrep(); }

bool Polyhedron::is_empty() const {
  std::lock_guard<std::mutex> lk(cache_->m);
  if (!cache_->empty) {
    if (is_canonical_empty(h_))
      cache_->empty = true;
    else
      cache_->empty = !feasible_point(h_).has_value();
  }
  return *cache_->empty;
}

int Polyhedron::dim() const {
  {
    std::lock_guard<std::mutex> lk(cache_->m);
    if (cache_->dim) return *cache_->dim;
  }
  int result;
  if (is_empty()) {
    result = -1;
  } else {
    std::vector<Vec> normals;
    for (Index i = 0; i < h_.C.rows(); ++i) normals.push_back(h_.C.row(i).transpose());
    for (Index i = 0; i < h_.A.rows(); ++i) {
      const Vec a = h_.A.row(i).transpose();
      const OptResult lo = optimize(h_, a, /*maximize=*/false);
      if (lo.feasible && lo.bounded && lo.value == h_.b[i]) normals.push_back(a);
    }
    Mat m(static_cast<Index>(normals.size()), h_.dim);
    for (std::size_t i = 0; i < normals.size(); ++i) m.row(static_cast<Index>(i)) = normals[i].transpose();
    result = static_cast<int>(h_.dim - rank(std::move(m)));
  }
  std::lock_guard<std::mutex> lk(cache_->m);
  cache_->dim = result;
  return result;
}

bool contains(const Polyhedron& p, const Vec& x) {
  const HRep& h = p.hrep();
  if (x.size() != h.dim) throw DimensionMismatch("membership query of wrong dimension");
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), x) > h.b[i]) return false;
  for (Index i = 0; i < h.C.rows(); ++i)
    if (dot(h.C.row(i).transpose(), x) != h.d[i]) return false;
  return true;
}

bool contains_direction(const HRep& h, const Vec& r) {
  if (r.size() != h.dim) throw DimensionMismatch("direction query of wrong dimension");
  for (Index i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i).transpose(), r).sign() > 0) return false;
  for (Index i = 0; i < h.C.rows(); ++i)
    if (!dot(h.C.row(i).transpose(), r).is_zero()) return false;
  return true;
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("sum of sets in different spaces");
  const Index n = p.ambient_dim();
  if (p.is_empty() || q.is_empty()) return Polyhedron(HRep::empty_set(n));
  const VRep& vp = p.vrep();
  const VRep& vq = q.vrep();
  VRep s;
  s.dim = n;
  for (const Vec& a : vp.vertices)
    for (const Vec& b : vq.vertices) s.vertices.push_back(a + b);
  s.rays = vp.rays;
  s.rays.insert(s.rays.end(), vq.rays.begin(), vq.rays.end());
  return Polyhedron::from_vrep(std::move(s));
}

Polyhedron negate(const Polyhedron& p) {
  HRep h = p.hrep();
  h.A = -h.A;
  h.C = -h.C;
  Polyhedron out(std::move(h));
  std::optional<VRep> v;
  {
    std::lock_guard<std::mutex> lk(p.cache_->m);
    if (p.cache_->v) v = *p.cache_->v;
  }
  if (v) {
    for (Vec& x : v->vertices) x = -x;
    for (Vec& r : v->rays) r = -r;
    VRep nv = normalize_vrep(std::move(*v));
    std::lock_guard<std::mutex> lk(out.cache_->m);
    out.cache_->v = std::move(nv);
  }
  return out;
}

Polyhedron translate(const Polyhedron& p, const Vec& t) {
  if (t.size() != p.ambient_dim()) throw DimensionMismatch("translation of wrong dimension");
  HRep h = p.hrep();
  if (h.A.rows() > 0) h.b = h.b + h.A * t;
  if (h.C.rows() > 0) h.d = h.d + h.C * t;
  Polyhedron out(std::move(h));
  std::optional<VRep> v;
  {
    std::lock_guard<std::mutex> lk(p.cache_->m);
    if (p.cache_->v) v = *p.cache_->v;
  }
  if (v) {
    for (Vec& x : v->vertices) x = x + t;
    VRep nv = normalize_vrep(std::move(*v));
    std::lock_guard<std::mutex> lk(out.cache_->m);
    out.cache_->v = std::move(nv);
  }
  return out;
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("intersection of sets in different spaces");
  const HRep& hp = p.hrep();
  const HRep& hq = q.hrep();
  HRep h = HRep::universe(hp.dim);
  h.A = Mat(hp.A.rows() + hq.A.rows(), hp.dim);
  h.A.topRows(hp.A.rows()) = hp.A;
  h.A.bottomRows(hq.A.rows()) = hq.A;
  h.b = Vec(hp.b.size() + hq.b.size());
  h.b.head(hp.b.size()) = hp.b;
  h.b.tail(hq.b.size()) = hq.b;
  h.C = Mat(hp.C.rows() + hq.C.rows(), hp.dim);
  h.C.topRows(hp.C.rows()) = hp.C;
  h.C.bottomRows(hq.C.rows()) = hq.C;
  h.d = Vec(hp.d.size() + hq.d.size());
  h.d.head(hp.d.size()) = hp.d;
  h.d.tail(hq.d.size()) = hq.d;
  return Polyhedron(std::move(h));
}

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
  const HRep& hp = p.hrep();
  const HRep& hq = q.hrep();
  const Index n = hp.dim + hq.dim;
  HRep h = HRep::universe(n);
  h.A = Mat::Constant(hp.A.rows() + hq.A.rows(), n, Rational(0));
  h.A.topLeftCorner(hp.A.rows(), hp.dim) = hp.A;
  h.A.bottomRightCorner(hq.A.rows(), hq.dim) = hq.A;
  h.b = Vec(hp.b.size() + hq.b.size());
  h.b.head(hp.b.size()) = hp.b;
  h.b.tail(hq.b.size()) = hq.b;
  h.C = Mat::Constant(hp.C.rows() + hq.C.rows(), n, Rational(0));
  h.C.topLeftCorner(hp.C.rows(), hp.dim) = hp.C;
  h.C.bottomRightCorner(hq.C.rows(), hq.dim) = hq.C;
  h.d = Vec(hp.d.size() + hq.d.size());
  h.d.head(hp.d.size()) = hp.d;
  h.d.tail(hq.d.size()) = hq.d;
  return Polyhedron(std::move(h));
}

HRep prune_redundant(HRep h) {
  if (!feasible_point(h)) return HRep::empty_set(h.dim);
  Index i = 0;
  while (i < h.A.rows()) {
    Mat Ao(h.A.rows() - 1, h.dim);
    Vec bo(h.b.size() - 1);
    for (Index k = 0, t = 0; k < h.A.rows(); ++k) {
      if (k == i) continue;
      Ao.row(t) = h.A.row(k);
      bo[t] = h.b[k];
      ++t;
    }
    const LpResult r = lp_solve(Ao, bo, h.C, h.d, h.A.row(i).transpose(), /*maximize=*/true);
    if (r.status == LpStatus::Optimal && r.value <= h.b[i]) {
      h.A = std::move(Ao);
      h.b = std::move(bo);
    } else {
      ++i;
    }
  }
  return h;
}

Polyhedron project(const Polyhedron& p, const std::vector<Index>& coords) {
  const Index n = p.ambient_dim();
  if (coords.empty()) throw PreconditionError("projection onto no coordinates");
  std::vector<bool> keep(static_cast<std::size_t>(n), false);
  for (const Index c : coords) {
    if (c < 0 || c >= n) throw DimensionMismatch("projection coordinate out of range");
    if (keep[static_cast<std::size_t>(c)]) throw PreconditionError("repeated projection coordinate");
    keep[static_cast<std::size_t>(c)] = true;
  }
  const Index k = static_cast<Index>(coords.size());
  if (p.is_empty()) return Polyhedron(HRep::empty_set(k));

  // Project the generators: the image of conv(V) + cone(R) under a coordinate
  // selection is the convex hull of the selected vertex coordinates plus the
  // cone of the selected ray coordinates.  This stays polynomial in the
  // generator count, unlike variable elimination on the inequality side.
  const VRep& v = p.vrep();
  const auto select = [&](const Vec& x) {
    Vec y(k);
    for (Index t = 0; t < k; ++t) y[t] = x[coords[static_cast<std::size_t>(t)]];
    return y;
  };
  VRep out;
  out.dim = k;
  for (const Vec& x : v.vertices) out.vertices.push_back(select(x));
  for (const Vec& r : v.rays) {
    Vec pr = select(r);
    if (!is_zero_vec(pr)) out.rays.push_back(std::move(pr));
  }
  return Polyhedron::from_vrep(std::move(out));
}

Polyhedron embed(const Polyhedron& p, Index total_dim, const std::vector<Index>& coords) {
  const HRep& h = p.hrep();
  if (static_cast<Index>(coords.size()) != h.dim)
    throw DimensionMismatch("embedding coordinate list of wrong length");
  std::vector<bool> used(static_cast<std::size_t>(total_dim), false);
  for (const Index c : coords) {
    if (c < 0 || c >= total_dim) throw DimensionMismatch("embedding coordinate out of range");
    if (used[static_cast<std::size_t>(c)]) throw PreconditionError("repeated embedding coordinate");
    used[static_cast<std::size_t>(c)] = true;
  }
  HRep out = HRep::universe(total_dim);
  out.A = Mat::Constant(h.A.rows(), total_dim, Rational(0));
  for (Index j = 0; j < h.dim; ++j) out.A.col(coords[static_cast<std::size_t>(j)]) = h.A.col(j);
  out.b = h.b;
  out.C = Mat::Constant(h.C.rows(), total_dim, Rational(0));
  for (Index j = 0; j < h.dim; ++j) out.C.col(coords[static_cast<std::size_t>(j)]) = h.C.col(j);
  out.d = h.d;
  return Polyhedron(std::move(out));
}

bool subset_of(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("containment of sets in different spaces");
  if (p.is_empty()) return true;
  if (q.is_empty()) return false;
  const VRep& v = p.vrep();
  for (const Vec& x : v.vertices)
    if (!contains(q, x)) return false;
  for (const Vec& r : v.rays)
    if (!contains_direction(q.hrep(), r)) return false;
  return true;
}

bool set_equal(const Polyhedron& p, const Polyhedron& q) {
  return subset_of(p, q) && subset_of(q, p);
}

Polyhedron canonicalized(const Polyhedron& p) {
  if (p.is_empty()) return Polyhedron(HRep::empty_set(p.ambient_dim()));
  return Polyhedron::from_vrep(p.vrep());
}

Polyhedron singleton(const Vec& x) { return Polyhedron::from_vrep(VRep{x.size(), {x}, {}}); }

Polyhedron substitute_prefix(const Polyhedron& p, const Vec& x0) {
  const Index n = p.ambient_dim();
  const Index k = x0.size();
  if (k <= 0 || k >= n) throw DimensionMismatch("prefix substitution of wrong dimension");
  const Index m = n - k;
  const HRep& h = p.hrep();
  HRep out = HRep::universe(m);
  out.A = Mat(h.A.rows(), m);
  out.b = Vec(h.b.size());
  for (Index i = 0; i < h.A.rows(); ++i) {
    out.A.row(i) = h.A.row(i).tail(m);
    out.b[i] = h.b[i] - dot(h.A.row(i).head(k).transpose(), x0);
  }
  out.C = Mat(h.C.rows(), m);
  out.d = Vec(h.d.size());
  for (Index i = 0; i < h.C.rows(); ++i) {
    out.C.row(i) = h.C.row(i).tail(m);
    out.d[i] = h.d[i] - dot(h.C.row(i).head(k).transpose(), x0);
  }
  return Polyhedron(std::move(out));
}

std::optional<Vec> feasible_point(const HRep& h) {
  const LpResult r = lp_solve(h.A, h.b, h.C, h.d, zero_vec(h.dim), /*maximize=*/false);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.point;
}

std::optional<Vec> strict_interior_point(const HRep& h) {
  if (h.C.rows() > 0) return std::nullopt;  // normalized form: genuine equations
  const Index n = h.dim;
  Mat A(h.A.rows() + 2, n + 1);
  A.setConstant(Rational(0));
  A.topLeftCorner(h.A.rows(), n) = h.A;
  for (Index i = 0; i < h.A.rows(); ++i) A(i, n) = Rational(1);
  A(h.A.rows(), n) = Rational(-1);     // s >= 0
  A(h.A.rows() + 1, n) = Rational(1);  // s <= 1
  Vec b(h.b.size() + 2);
  b.head(h.b.size()) = h.b;
  b[h.b.size()] = Rational(0);
  b[h.b.size() + 1] = Rational(1);
  const LpResult r = lp_solve(A, b, Mat(0, n + 1), Vec(0), unit_vec(n + 1, n), /*maximize=*/true);
  if (r.status != LpStatus::Optimal || r.value.sign() <= 0) return std::nullopt;
  Vec x = r.point.head(n);
  return x;
}

OptResult optimize(const HRep& h, const Vec& obj, bool maximize) {
  if (obj.size() != h.dim) throw DimensionMismatch("objective of wrong dimension");
  const LpResult r = lp_solve(h.A, h.b, h.C, h.d, obj, maximize);
  OptResult out;
  out.feasible = r.status != LpStatus::Infeasible;
  out.bounded = r.status == LpStatus::Optimal;
  if (r.status == LpStatus::Optimal) {
    out.point = r.point;
    out.value = r.value;
  }
  return out;
}

}  // namespace corecalc
