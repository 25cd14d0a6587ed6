#include "corecalc/dd.hpp"

#include <algorithm>
#include <cstdint>

#include "corecalc/linalg.hpp"

namespace corecalc {

namespace {

// Incidence set over processed constraint indices.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool superset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if ((o.w[k] & ~w[k]) != 0) return false;
    return true;
  }
  static Bits intersect(const Bits& a, const Bits& b) {
    Bits r;
    r.w.resize(a.w.size());
    for (std::size_t k = 0; k < a.w.size(); ++k) r.w[k] = a.w[k] & b.w[k];
    return r;
  }
  bool operator==(const Bits& o) const { return w == o.w; }
};

struct Ray {
  Vec v;
  Bits zero;  // processed constraints tight at v
};

}  // namespace

ConeGens cone_generators(const Mat& A, const Mat& C) {
  const Index n = A.cols() > 0 ? A.cols() : C.cols();
  // Equations first (as opposite inequality pairs): they cut dimension early.
  std::vector<Vec> rows;
  for (Index i = 0; i < C.rows(); ++i) {
    rows.push_back(C.row(i).transpose());
    rows.push_back((-C.row(i)).transpose());
  }
  for (Index i = 0; i < A.rows(); ++i) rows.push_back(A.row(i).transpose());
  const std::size_t total = rows.size();

  std::vector<Vec> lines;
  for (Index i = 0; i < n; ++i) lines.push_back(unit_vec(n, i));
  std::vector<Ray> rays;

  for (std::size_t t = 0; t < total; ++t) {
    const Vec& m = rows[t];

    // A line off the hyperplane absorbs the constraint.
    std::size_t l0 = lines.size();
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (!dot(m, lines[k]).is_zero()) {
        l0 = k;
        break;
      }
    }
    if (l0 < lines.size()) {
      Vec piv = lines[l0];
      Rational mp = dot(m, piv);
      if (mp.sign() > 0) {
        piv = -piv;
        mp = -mp;
      }
      std::vector<Vec> nl;
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if (k == l0) continue;
        const Rational ml = dot(m, lines[k]);
        nl.push_back(ml.is_zero() ? lines[k] : Vec(lines[k] - (ml / mp) * piv));
      }
      lines = std::move(nl);
      for (Ray& r : rays) {
        const Rational mr = dot(m, r.v);
        if (!mr.is_zero()) r.v = r.v - (mr / mp) * piv;
        r.zero.set(t);
      }
      Ray nr{primitive(piv), Bits(total)};
      for (std::size_t j = 0; j < t; ++j) nr.zero.set(j);
      rays.push_back(std::move(nr));
      continue;
    }

    // All lines on the hyperplane: split rays by side.
    std::vector<Rational> s(rays.size());
    bool any_pos = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(m, rays[k].v);
      if (s[k].sign() > 0) any_pos = true;
    }
    if (!any_pos) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (s[k].is_zero()) rays[k].zero.set(t);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k].sign() < 0) {
        next.push_back(rays[k]);
      } else if (s[k].is_zero()) {
        Ray r = rays[k];
        r.zero.set(t);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p].sign() <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q].sign() >= 0) continue;
        const Bits common = Bits::intersect(rays[p].zero, rays[q].zero);
        bool adjacent = true;
        for (std::size_t u = 0; u < rays.size(); ++u) {
          if (u == p || u == q) continue;
          if (rays[u].zero.superset_of(common)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray w{primitive(s[p] * rays[q].v - s[q] * rays[p].v), common};
        w.zero.set(t);
        bool dup = false;
        for (const Ray& e : next) {
          if (vec_eq(e.v, w.v)) {
            dup = true;
            break;
          }
        }
        if (!dup) next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  ConeGens out;
  auto [basis, pivots] = rref_basis(lines);
  out.lines = std::move(basis);
  for (const Ray& r : rays) {
    Vec v = reduce_against(r.v, out.lines, pivots);
    if (is_zero_vec(v)) continue;
    out.rays.push_back(primitive(v));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end(), vec_eq), out.rays.end());
  return out;
}

}  // namespace corecalc
