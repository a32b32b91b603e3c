#pragma once

#include <span>

#include "evtp/core/matrix.hpp"

namespace evtp {

/// Relative pivot guard for the float backend: a pivot counts as zero when
/// |pivot| <= kPivotTolerance * (largest absolute row sum of the input).
inline constexpr double kPivotTolerance = 1e-12;

/// Solves a x = b. Float: partial pivoting with the scaled guard above.
/// Exact: first nonzero pivot. Throws SingularMatrixError naming the step.
Vector<double> lu_solve(const Matrix<double>& a, std::span<const double> b);
Vector<Rational> lu_solve(const Matrix<Rational>& a, std::span<const Rational> b);

/// Determinant. Float: partial-pivot LU. Exact: fraction-free (Bareiss)
/// elimination, so integer input stays integral throughout.
double det(const Matrix<double>& a);
Rational det(const Matrix<Rational>& a);

Matrix<double> inverse(const Matrix<double>& a);
Matrix<Rational> inverse(const Matrix<Rational>& a);

}  // namespace evtp
