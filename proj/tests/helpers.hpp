#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "corecalc/linalg.hpp"
#include "corecalc/polyhedron.hpp"

// Terse builders for hand-written constraint systems, shared by the test binaries.

using namespace corecalc;

inline Vec vec(std::initializer_list<int> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v[i++] = Rational(x);
  return v;
}

inline Vec vecq(std::initializer_list<Rational> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rational& x : xs) v[i++] = x;
  return v;
}

struct B {
  Index n;
  std::vector<std::pair<Vec, Rational>> ineq, eq;
  B& le(std::initializer_list<int> a, int b) {
    ineq.emplace_back(vec(a), Rational(b));
    return *this;
  }
  B& equ(std::initializer_list<int> a, int b) {
    eq.emplace_back(vec(a), Rational(b));
    return *this;
  }
  HRep h() const {
    HRep r = HRep::universe(n);
    r.A = Mat(static_cast<Index>(ineq.size()), n);
    r.b = Vec(static_cast<Index>(ineq.size()));
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      r.A.row(static_cast<Index>(i)) = ineq[i].first.transpose();
      r.b[static_cast<Index>(i)] = ineq[i].second;
    }
    r.C = Mat(static_cast<Index>(eq.size()), n);
    r.d = Vec(static_cast<Index>(eq.size()));
    for (std::size_t i = 0; i < eq.size(); ++i) {
      r.C.row(static_cast<Index>(i)) = eq[i].first.transpose();
      r.d[static_cast<Index>(i)] = eq[i].second;
    }
    return r;
  }
  Polyhedron p() const { return Polyhedron(h()); }
};

inline Polyhedron unit_square() {
  return B{2}.le({1, 0}, 1).le({0, 1}, 1).le({-1, 0}, 0).le({0, -1}, 0).p();
}

/** Axis-aligned box [lo1,hi1] x ... in any dimension. */
inline Polyhedron box(std::initializer_list<std::pair<int, int>> sides) {
  B b{static_cast<Index>(sides.size())};
  Index i = 0;
  for (const auto& [lo, hi] : sides) {
    std::vector<int> row(sides.size(), 0);
    row[static_cast<std::size_t>(i)] = 1;
    Vec a = Vec(static_cast<Index>(sides.size()));
    for (Index j = 0; j < a.size(); ++j) a[j] = Rational(row[static_cast<std::size_t>(j)]);
    b.ineq.emplace_back(a, Rational(hi));
    b.ineq.emplace_back(-a, Rational(-lo));
    ++i;
  }
  return b.p();
}
