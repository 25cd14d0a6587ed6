#include "corecalc/lp.hpp"

#include <stdexcept>
#include <vector>

namespace corecalc {

namespace {

// Dense simplex tableau for min c.z, T z = q, z >= 0, with q >= 0 maintained.
struct Tableau {
  Mat T;                     // m x ncols
  Vec q;                     // m
  std::vector<Index> basis;  // basic column per row

  Index rows() const { return T.rows(); }
  Index cols() const { return T.cols(); }

  void pivot(Index pr, Index pc, Vec& cost_row) {
    const Rational piv = T(pr, pc);
    for (Index j = 0; j < cols(); ++j) T(pr, j) /= piv;
    q[pr] /= piv;
    for (Index i = 0; i < rows(); ++i) {
      if (i == pr || T(i, pc).is_zero()) continue;
      const Rational f = T(i, pc);
      for (Index j = 0; j < cols(); ++j) T(i, j) -= f * T(pr, j);
      q[i] -= f * q[pr];
    }
    if (!cost_row[pc].is_zero()) {
      const Rational f = cost_row[pc];
      for (Index j = 0; j < cols(); ++j) cost_row[j] -= f * T(pr, j);
    }
    basis[static_cast<std::size_t>(pr)] = pc;
  }

  // Bland: entering = lowest-index negative reduced cost; leaving = min ratio,
  // ties by lowest basic variable index. Returns false once optimal.
  enum class Step { Optimal, Pivoted, Unbounded };
  Step step(Vec& cost_row) {
    Index pc = -1;
    for (Index j = 0; j < cols(); ++j) {
      if (cost_row[j].sign() < 0) {
        pc = j;
        break;
      }
    }
    if (pc < 0) return Step::Optimal;
    Index pr = -1;
    Rational best;
    for (Index i = 0; i < rows(); ++i) {
      if (T(i, pc).sign() <= 0) continue;
      const Rational ratio = q[i] / T(i, pc);
      if (pr < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(pr)])) {
        pr = i;
        best = ratio;
      }
    }
    if (pr < 0) return Step::Unbounded;
    pivot(pr, pc, cost_row);
    return Step::Pivoted;
  }

  // Reduced costs of c relative to the current basis.
  Vec reduced_costs(const Vec& c) const {
    Vec r = c;
    for (Index i = 0; i < rows(); ++i) {
      const Rational cb = c[basis[static_cast<std::size_t>(i)]];
      if (cb.is_zero()) continue;
      for (Index j = 0; j < cols(); ++j) r[j] -= cb * T(i, j);
    }
    return r;
  }

  Rational objective(const Vec& c) const {
    Rational z(0);
    for (Index i = 0; i < rows(); ++i) z += c[basis[static_cast<std::size_t>(i)]] * q[i];
    return z;
  }

  void drop_column(Index c) {
    Mat nt(T.rows(), T.cols() - 1);
    if (c > 0) nt.leftCols(c) = T.leftCols(c);
    if (c + 1 < T.cols()) nt.rightCols(T.cols() - c - 1) = T.rightCols(T.cols() - c - 1);
    T = std::move(nt);
  }

  void drop_row(Index r) {
    Mat nt(T.rows() - 1, T.cols());
    if (r > 0) nt.topRows(r) = T.topRows(r);
    if (r + 1 < T.rows()) nt.bottomRows(T.rows() - r - 1) = T.bottomRows(T.rows() - r - 1);
    T = std::move(nt);
    Vec nq(q.size() - 1);
    for (Index i = 0, k = 0; i < q.size(); ++i)
      if (i != r) nq[k++] = q[i];
    q = std::move(nq);
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

}  // namespace

LpResult lp_solve(const Mat& A, const Vec& b, const Mat& C, const Vec& d, const Vec& obj,
                  bool maximize) {
  const Index n = obj.size();
  if ((A.rows() > 0 && A.cols() != n) || (C.rows() > 0 && C.cols() != n) || A.rows() != b.size() ||
      C.rows() != d.size())
    throw std::invalid_argument("lp_solve: inconsistent shapes");

  const Index mA = A.rows(), mC = C.rows(), m = mA + mC;
  const Index nsplit = 2 * n;          // x = z+ - z-
  const Index ncols = nsplit + mA;     // plus one slack per inequality

  Tableau tab;
  tab.T = Mat::Constant(m, ncols, Rational(0));
  tab.q = Vec::Constant(m, Rational(0));
  for (Index i = 0; i < m; ++i) {
    const bool ineq = i < mA;
    Rational rhs = ineq ? b[i] : d[i - mA];
    const int flip = rhs.sign() < 0 ? -1 : 1;
    for (Index k = 0; k < n; ++k) {
      const Rational& a = ineq ? A(i, k) : C(i - mA, k);
      if (a.is_zero()) continue;
      tab.T(i, 2 * k) = Rational(flip) * a;
      tab.T(i, 2 * k + 1) = Rational(-flip) * a;
    }
    if (ineq) tab.T(i, nsplit + i) = Rational(flip);
    tab.q[i] = Rational(flip) * rhs;
  }

  // Phase 1: artificial basis, minimize artificial mass.
  if (m > 0) {
    Mat ext = Mat::Constant(m, ncols + m, Rational(0));
    ext.leftCols(ncols) = tab.T;
    for (Index i = 0; i < m; ++i) ext(i, ncols + i) = Rational(1);
    tab.T = std::move(ext);
    tab.basis.resize(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) tab.basis[static_cast<std::size_t>(i)] = ncols + i;

    Vec c1 = Vec::Constant(ncols + m, Rational(0));
    for (Index i = 0; i < m; ++i) c1[ncols + i] = Rational(1);
    Vec r = tab.reduced_costs(c1);
    while (true) {
      const auto s = tab.step(r);
      if (s == Tableau::Step::Optimal) break;
      if (s == Tableau::Step::Unbounded) throw std::logic_error("phase-1 unbounded");
    }
    if (tab.objective(c1).sign() > 0) return {LpStatus::Infeasible, Vec(), Rational(0)};

    // Pivot artificials out of the basis; all-zero rows are redundant constraints.
    for (Index i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis[static_cast<std::size_t>(i)] < ncols) continue;
      Index pc = -1;
      for (Index j = 0; j < ncols; ++j) {
        if (!tab.T(i, j).is_zero()) {
          pc = j;
          break;
        }
      }
      if (pc < 0) {
        tab.drop_row(i);
      } else {
        Vec dummy = Vec::Constant(tab.cols(), Rational(0));
        tab.pivot(i, pc, dummy);
      }
    }
    for (Index c = tab.cols() - 1; c >= ncols; --c) tab.drop_column(c);
  } else {
    tab.basis.clear();
  }

  // Phase 2.
  Vec c2 = Vec::Constant(ncols, Rational(0));
  for (Index k = 0; k < n; ++k) {
    const Rational ck = maximize ? -obj[k] : obj[k];
    c2[2 * k] = ck;
    c2[2 * k + 1] = -ck;
  }
  Vec r = tab.reduced_costs(c2);
  while (true) {
    const auto s = tab.step(r);
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded) return {LpStatus::Unbounded, Vec(), Rational(0)};
  }

  Vec z = Vec::Constant(ncols, Rational(0));
  for (Index i = 0; i < tab.rows(); ++i) z[tab.basis[static_cast<std::size_t>(i)]] = tab.q[i];
  Vec x(n);
  for (Index k = 0; k < n; ++k) x[k] = z[2 * k] - z[2 * k + 1];
  Rational val = tab.objective(c2);
  if (maximize) val = -val;
  return {LpStatus::Optimal, std::move(x), std::move(val)};
}

}  // namespace corecalc
