#pragma once

#include <utility>
#include <vector>

#include "corecalc/rational.hpp"

namespace corecalc {

/**
 * Scales v by a positive rational so entries become coprime integers.
 * Zero vectors pass through unchanged; direction (sign pattern) is preserved.
 */
Vec primitive(const Vec& v);

/** Joint positive scaling of (a, b) to coprime integers; used for inequality rows a.x <= b. */
std::pair<Vec, Rational> primitive_row(const Vec& a, const Rational& b);

/**
 * Like primitive_row, then flips sign so the first nonzero coordinate of a is positive;
 * used for equation rows and line directions, where orientation is not meaningful.
 */
std::pair<Vec, Rational> primitive_row_signed(const Vec& a, const Rational& b);

/** Same sign normalization for a bare direction vector. */
Vec primitive_signed(const Vec& v);

bool lex_less(const Vec& a, const Vec& b);

/** Exact componentwise equality (sizes must match to be equal). */
bool vec_eq(const Vec& a, const Vec& b);

bool is_zero_vec(const Vec& v);

/** Exact rank via Gaussian elimination. */
Index rank(Mat m);

/**
 * Reduced row echelon form of the span of `rows` (zero rows dropped).
 * Returns the canonical basis (each row primitive, first nonzero positive)
 * and the pivot column of each basis row.
 */
std::pair<std::vector<Vec>, std::vector<Index>> rref_basis(const std::vector<Vec>& rows);

/**
 * Subtracts multiples of the RREF basis rows from v so that v's entries at all
 * pivot columns become zero. Canonical representative of v modulo span(basis).
 */
Vec reduce_against(const Vec& v, const std::vector<Vec>& basis, const std::vector<Index>& pivots);

}  // namespace corecalc
