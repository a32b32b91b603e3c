#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evtp/core/matrix.hpp"
#include "evtp/signs/sign_pattern.hpp"
#include "evtp/spectral/eigen.hpp"

namespace evtp {

enum class Status { yes, no, unknown };

const char* to_string(Status status);

struct PropertyCheck {
  Status status = Status::unknown;
  std::string reason;
  std::optional<SpectralCertificate> certificate;
  std::optional<SignPartition> partition;
  std::optional<FailureKind> failure;
};

/// One PropertyCheck per compound order j = 1..n (index j - 1). Evaluation
/// stops at the first "no".
struct CompoundPropertyCheck {
  Status status = Status::unknown;
  std::string reason;
  std::vector<PropertyCheck> levels;
};

/// Positive simple strictly dominant eigenvalue with a positive eigenvector.
PropertyCheck check_strong_pf(const Matrix<double>& a, double tol = kDefaultTol);

/// Positive simple strictly dominant eigenvalue, x and x* free of zero
/// coordinates and Sign(x) = Sign(x*). The partition is J = {i : x_i > 0}.
PropertyCheck check_signature_equality(const Matrix<double>& a, double tol = kDefaultTol);

/// Positive dominant eigenvalue with x_i x*_i >= 0 up to the zero threshold.
PropertyCheck check_weak_signature_equality(const Matrix<double>& a, double tol = kDefaultTol);

/// Positive dominant eigenvalue with a nonnegative eigenvector (no
/// simplicity demanded); used as the necessary condition for EN.
PropertyCheck check_pf(const Matrix<double>& a, double tol = kDefaultTol);

struct MarkovLevel {
  std::size_t j = 0;
  int sign = 0;  // +1 / -1 if the prefix wedge is strictly one-signed, else 0
};

struct MarkovReport {
  bool holds = false;
  std::vector<MarkovLevel> levels;
};

/// Every prefix wedge x_1 ^ ... ^ x_j is strictly one-signed. Float wedge
/// coordinates with |w| <= rel * ||w||_inf count as zero.
template <Scalar T>
MarkovReport check_markov_system(std::span<const Vector<T>> vectors, double rel = kDefaultSignTolerance);

/// Strong PF for every compound A^(j). n <= 12.
template <Scalar T>
CompoundPropertyCheck check_gk_property(const Matrix<T>& a, double tol = kDefaultTol);

/// The same test run on (A^(j))^T, i.e. on the compounds of A^T without
/// recomputing them.
template <Scalar T>
CompoundPropertyCheck check_gk_property_transposed(const Matrix<T>& a, double tol = kDefaultTol);

/// Signature equality for every compound A^(j). n <= 12.
template <Scalar T>
CompoundPropertyCheck check_tse_property(const Matrix<T>& a, double tol = kDefaultTol);

/// ||A^k / lambda^k - x (x)  x*||_inf with x*^T x = 1. Throws
/// PreconditionError unless A has a positive simple strictly dominant
/// eigenvalue.
double rank_one_limit_residual(const Matrix<double>& a, unsigned k, double tol = kDefaultTol);

}  // namespace evtp
