#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evtp/core/matrix.hpp"

namespace evtp {

/// Default relative threshold below which a float value counts as zero.
inline constexpr double kDefaultSignTolerance = 1e-9;

/// Entrywise sgn of a matrix; |a_ij| <= zero_tolerance maps to 0.
struct SignPattern {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> signs;
  double zero_tolerance = 0.0;

  int operator()(std::size_t i, std::size_t j) const { return signs[i * cols + j]; }
  bool all_positive() const;
  friend bool operator==(const SignPattern& a, const SignPattern& b) {
    return a.rows == b.rows && a.cols == b.cols && a.signs == b.signs;
  }
};

template <Scalar T>
SignPattern sign_pattern(const Matrix<T>& a, double zero_tolerance = 0.0);

/// Absolute zero threshold for a: 0 in the exact backend, rel * max|a_ij|
/// in the float backend.
template <Scalar T>
double zero_tolerance_for(const Matrix<T>& a, double rel = kDefaultSignTolerance);

/// Sign changes with zero coordinates discarded.
template <Scalar T>
int s_minus(std::span<const T> x, double zero_tolerance = 0.0);

/// Maximum sign changes over all +-1 assignments to the zero coordinates.
/// The zero vector gives dim - 1.
template <Scalar T>
int s_plus(std::span<const T> x, double zero_tolerance = 0.0);

/// A bipartition J | J^c of [n] and its signature s (s_i = +1 iff i in J).
/// Canonical form keeps 1 in J. Indices are 1-based.
struct SignPartition {
  std::size_t n = 0;
  std::vector<std::size_t> J;
  std::vector<int> s;

  static SignPartition from_signature(std::vector<int> signature);
  static SignPartition full(std::size_t n);
  /// Same partition with J and J^c swapped so that 1 is in J.
  SignPartition canonical() const;

  friend bool operator==(const SignPartition&, const SignPartition&) = default;
};

/// Strict J-sign-symmetry: every entry nonzero and s_i s_j sgn(a_ij) = +1
/// for s_i = sgn(a_i1) sgn(a_11). Returns the canonical partition or nothing.
template <Scalar T>
std::optional<SignPartition> detect_sjs(const Matrix<T>& a, double zero_tolerance = 0.0);

/// Weak J-sign-symmetry by 2-colouring the graph of nonzero entries; the
/// least vertex of each connected component gets s = +1.
template <Scalar T>
std::optional<SignPartition> detect_js(const Matrix<T>& a, double zero_tolerance = 0.0);

/// D A D with D = diag(s): the conjugation that maps a JS matrix to a
/// nonnegative one.
template <Scalar T>
Matrix<T> signature_conjugate(const Matrix<T>& a, const SignPartition& partition);

/// Entrywise (-1)^(i+j) a_ij. An involution.
template <Scalar T>
Matrix<T> checkerboard(const Matrix<T>& a);

}  // namespace evtp
