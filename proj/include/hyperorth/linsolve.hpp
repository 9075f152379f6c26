#pragma once

// Exact linear algebra on integer matrices (row-major, n x n) by Bareiss'
// fraction-free elimination. Gram numerators share one denominator, which
// cancels in the solve, so everything here stays in Z.

#include <cstddef>
#include <vector>

#include "hyperorth/errors.hpp"
#include "hyperorth/rational.hpp"

namespace hyperorth {

/// Singular system; `column` is the elimination step that found no pivot.
struct SingularSystemError : DegeneracyError {
  SingularSystemError(const std::string& what, std::size_t column) : DegeneracyError(what), column(column) {}
  std::size_t column;
};

/// Solves a x = b. Pivots on the largest remaining entry in the column.
std::vector<Rational> solve_fraction_free(std::vector<Integer> a, std::vector<Integer> b, std::size_t n);

/// Rational front end: rows are scaled to integers first.
std::vector<Rational> solve_exact(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n);

/// Leading principal minors det(a[0..k, 0..k]) for k = 0..n-1, from Bareiss without
/// pivoting. Stops after the first zero minor (which is included).
std::vector<Integer> leading_principal_minors(std::vector<Integer> a, std::size_t n);

}  // namespace hyperorth
