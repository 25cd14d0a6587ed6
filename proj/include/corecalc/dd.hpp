#pragma once

#include <vector>

#include "corecalc/rational.hpp"

namespace corecalc {

/** Generator description of a polyhedral cone: cone(rays) + span(lines). */
struct ConeGens {
  std::vector<Vec> lines;  // canonical RREF basis, primitive, first nonzero positive
  std::vector<Vec> rays;   // primitive, reduced modulo the lines, lex-sorted
};

/**
 * Double description: computes the generators of {x : A x <= 0, C x = 0}.
 * Constraints are processed incrementally with the combinatorial adjacency
 * test, so returned rays are extreme modulo the lineality space.
 * Exact and deterministic.
 */
ConeGens cone_generators(const Mat& A, const Mat& C);

}  // namespace corecalc
