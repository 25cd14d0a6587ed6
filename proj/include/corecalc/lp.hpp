#pragma once

#include "corecalc/rational.hpp"

namespace corecalc {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec point;       // optimizer (Optimal only)
  Rational value;  // objective at point (Optimal only)
};

/**
 * Exact rational LP over free variables x:
 *   optimize obj.x  subject to  A x <= b,  C x = d.
 *
 * Two-phase simplex with Bland's pivot rule: terminates on every input,
 * no tolerances anywhere. Deterministic for fixed input.
 */
LpResult lp_solve(const Mat& A, const Vec& b, const Mat& C, const Vec& d, const Vec& obj,
                  bool maximize);

}  // namespace corecalc
