#pragma once

#include <cstddef>
#include <span>

#include "evtp/core/matrix.hpp"

namespace evtp {

/// Upper bound on n for compound-based routines; C(12, 6) = 924.
inline constexpr std::size_t kMaxCompoundOrder = 12;

/// The minor of a with the given 1-based row and column index lists.
template <Scalar T>
T minor(const Matrix<T>& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// j-th compound: entry (rank(I), rank(K)) is the minor a(I; K) over all
/// j-subsets I, K of [n] in lexicographic order. compound(a, 1) == a and
/// compound(a, n) == [det a].
template <Scalar T>
Matrix<T> compound(const Matrix<T>& a, std::size_t j);

/// x_1 ^ ... ^ x_j in R^C(n, j): coordinate r is the j x j minor of the
/// n x j matrix [x_1 ... x_j] on the rows of the r-th j-subset.
template <Scalar T>
Vector<T> exterior_product(std::span<const Vector<T>> vectors);

/// x (outer) y, entry (i, k) = x_i * y_k.
template <Scalar T>
Matrix<T> tensor_product(std::span<const T> x, std::span<const T> y);

}  // namespace evtp
