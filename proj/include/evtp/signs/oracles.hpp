#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evtp/core/matrix.hpp"
#include "evtp/signs/sign_pattern.hpp"

namespace evtp {

/// A minor that violates the property being tested (1-based indices).
struct MinorWitness {
  std::size_t order = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  double value = 0.0;
};

/// Outcome of a brute-force minor enumeration. In the float backend a
/// decisive minor that is nonzero but within 1e3 x the zero threshold sets
/// tolerance_warning: the verdict could flip in exact arithmetic.
struct OracleResult {
  bool holds = true;
  std::optional<MinorWitness> witness;
  bool tolerance_warning = false;

  explicit operator bool() const noexcept { return holds; }
};

/// Zero threshold for order-j minors of a: rel * (max|a_ij|)^j, 0 if exact.
template <Scalar T>
double minor_tolerance(const Matrix<T>& a, std::size_t j, double rel = kDefaultSignTolerance);

/// Every minor of every order >= 0 (TP) / > 0 (STP).
template <Scalar T>
OracleResult is_tp(const Matrix<T>& a, double rel = kDefaultSignTolerance);
template <Scalar T>
OracleResult is_stp(const Matrix<T>& a, double rel = kDefaultSignTolerance);

/// Every principal minor > 0. Index sets are visited by size, then
/// lexicographically; the first failure is the witness.
template <Scalar T>
OracleResult is_p_matrix(const Matrix<T>& a, double rel = kDefaultSignTolerance);

/// Totally sign-alternating: the checkerboard transform is TP.
template <Scalar T>
OracleResult is_tsa(const Matrix<T>& a, double rel = kDefaultSignTolerance);

/// Invertible with entrywise nonnegative inverse. Float inverses are scaled
/// to unit max-abs and entries >= -1e-10 pass.
template <Scalar T>
bool is_monotone(const Matrix<T>& s);

struct OscillatoryResult {
  bool holds = false;
  std::optional<std::size_t> k;  // first power that is STP
  OracleResult tp;
};

/// TP, and A^k STP for some k <= k_max.
template <Scalar T>
OscillatoryResult is_oscillatory(const Matrix<T>& a, std::size_t k_max, double rel = kDefaultSignTolerance);

/// Strict total J-sign-symmetry: every compound A^(j) is SJS. Returns the
/// per-order partitions (index j-1) or nothing.
template <Scalar T>
std::optional<std::vector<SignPartition>> detect_stjs(const Matrix<T>& a, double rel = kDefaultSignTolerance);

}  // namespace evtp
