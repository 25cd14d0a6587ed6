#include "corecalc/linalg.hpp"

#include <algorithm>

namespace corecalc {

namespace {

// Positive scale factor turning every coordinate of the row into a coprime integer.
// Works on the concatenation passed in; all-zero rows return scale 1.
Rational primitive_scale(const std::vector<const Rational*>& xs) {
  mpz_class l(1);
  bool any = false;
  for (const Rational* x : xs) {
    if (x->is_zero()) continue;
    any = true;
    l = lcm(l, x->den());
  }
  if (!any) return Rational(1);
  mpz_class g(0);
  for (const Rational* x : xs) {
    if (x->is_zero()) continue;
    g = gcd(g, mpz_class(abs(x->num() * (l / x->den()))));
  }
  return Rational(mpq_class(l, g));  // l/g > 0
}

}  // namespace

Vec primitive(const Vec& v) {
  std::vector<const Rational*> xs;
  xs.reserve(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) xs.push_back(&v[i]);
  const Rational s = primitive_scale(xs);
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

std::pair<Vec, Rational> primitive_row(const Vec& a, const Rational& b) {
  std::vector<const Rational*> xs;
  xs.reserve(static_cast<std::size_t>(a.size()) + 1);
  for (Index i = 0; i < a.size(); ++i) xs.push_back(&a[i]);
  xs.push_back(&b);
  const Rational s = primitive_scale(xs);
  Vec out(a.size());
  for (Index i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return {std::move(out), b * s};
}

std::pair<Vec, Rational> primitive_row_signed(const Vec& a, const Rational& b) {
  auto [na, nb] = primitive_row(a, b);
  for (Index i = 0; i < na.size(); ++i) {
    if (na[i].is_zero()) continue;
    if (na[i].sign() < 0) {
      for (Index j = 0; j < na.size(); ++j) na[j] = -na[j];
      nb = -nb;
    }
    break;
  }
  return {std::move(na), std::move(nb)};
}

Vec primitive_signed(const Vec& v) {
  auto [nv, nb] = primitive_row_signed(v, Rational(0));
  (void)nb;
  return nv;
}

bool lex_less(const Vec& a, const Vec& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_zero_vec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

Index rank(Mat m) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::pair<std::vector<Vec>, std::vector<Index>> rref_basis(const std::vector<Vec>& rows) {
  std::vector<Vec> work = rows;
  std::vector<Vec> basis;
  std::vector<Index> pivots;
  if (work.empty()) return {basis, pivots};
  const Index n = work.front().size();
  std::size_t r = 0;
  for (Index c = 0; c < n && r < work.size(); ++c) {
    std::size_t p = r;
    while (p < work.size() && work[p][c].is_zero()) ++p;
    if (p == work.size()) continue;
    std::swap(work[p], work[r]);
    const Rational piv = work[r][c];
    for (Index j = 0; j < n; ++j) work[r][j] /= piv;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == r || work[i][c].is_zero()) continue;
      const Rational f = work[i][c];
      for (Index j = 0; j < n; ++j) work[i][j] -= f * work[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  work.resize(r);
  for (auto& row : work) basis.push_back(primitive_signed(row));
  return {basis, pivots};
}

Vec reduce_against(const Vec& v, const std::vector<Vec>& basis, const std::vector<Index>& pivots) {
  Vec out = v;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Index c = pivots[k];
    if (out[c].is_zero()) continue;
    const Rational f = out[c] / basis[k][c];
    for (Index j = 0; j < out.size(); ++j) out[j] -= f * basis[k][j];
  }
  return out;
}

}  // namespace corecalc
