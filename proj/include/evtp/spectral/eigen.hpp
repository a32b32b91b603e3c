#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evtp/core/matrix.hpp"

namespace evtp {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr std::size_t kDefaultMaxIter = 100000;

/// Coordinates with |x_i| <= kZeroCoordinateRel * ||x||_inf count as zero
/// when eigenvector signs are read.
inline constexpr double kZeroCoordinateRel = 1e-7;

/// Dominant eigenpair of A together with the matching eigenvector of A^T.
/// x and x_star have unit inf-norm and their first coordinate above the
/// zero threshold is positive. Residuals are the absolute inf-norms
/// ||A x - lambda x|| and ||A^T x* - lambda x*||; a certificate is accepted
/// when both are <= tol * ||A||_inf.
struct SpectralCertificate {
  double lambda = 0.0;
  Vector<double> x;
  Vector<double> x_star;
  double residual_x = 0.0;
  double residual_xstar = 0.0;
  std::size_t iterations = 0;
  std::optional<double> dominance_gap;  // estimated |lambda_2| / |lambda_1|
};

enum class FailureKind { zero_matrix, dominance_tie, not_simple, not_converged, transpose_mismatch, inconsistent };

const char* to_string(FailureKind kind);

struct SpectralFailure {
  FailureKind kind = FailureKind::not_converged;
  std::string detail;
  std::size_t iterations = 0;
};

struct EigenpairResult {
  std::optional<SpectralCertificate> certificate;
  std::optional<SpectralFailure> failure;

  bool ok() const noexcept { return certificate.has_value(); }
};

/// Power iteration on A and A^T in lockstep from the all-ones vector, with a
/// single restart from ones + 1e-3 e_1 on stagnation and a second run from a
/// fixed irregular start to expose ties and multiple eigenvalues that the
/// first start cannot see. Failures are returned, never thrown.
EigenpairResult dominant_eigenpair(const Matrix<double>& a, double tol = kDefaultTol,
                                   std::size_t max_iter = kDefaultMaxIter);

inline EigenpairResult dominant_eigenpair(const Matrix<Rational>& a, double tol = kDefaultTol,
                                          std::size_t max_iter = kDefaultMaxIter) {
  return dominant_eigenpair(to_double(a), tol, max_iter);
}

/// Trace, determinant and discriminant of a 2 x 2 matrix.
template <Scalar T>
struct Characteristic2x2 {
  T trace;
  T det;
  T discriminant;
};

template <Scalar T>
Characteristic2x2<T> characteristic_2x2(const Matrix<T>& a);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending |lambda|
  std::string method;               // "compound-ratios" or "characteristic-2x2"
  std::vector<double> residuals;    // per compound order (compound-ratios only)
};

struct SpectrumFailure {
  std::size_t order = 0;  // compound order whose iteration failed; 0 for global checks
  SpectralFailure cause;
  std::optional<Characteristic2x2<double>> complex_pair;
};

struct SpectrumResult {
  std::optional<Spectrum> spectrum;
  std::optional<SpectrumFailure> failure;

  bool ok() const noexcept { return spectrum.has_value(); }
};

/// lambda_j = rho(A^(j)) / rho(A^(j-1)) with signs taken from the dominant
/// eigenvalue of each compound. The product is checked against det(A) to
/// 1e-6 relative. 2 x 2 input uses the closed form instead.
SpectrumResult spectrum_via_compounds(const Matrix<double>& a, double tol = kDefaultTol);
SpectrumResult spectrum_via_compounds(const Matrix<Rational>& a, double tol = kDefaultTol);

/// Shifted inverse iteration. Returns a unit inf-norm vector with
/// ||A x - mu x|| <= tol * ||A||_inf where mu is the refined eigenvalue.
/// If A - lambda I is singular at working precision the shift moves off
/// lambda by 1e-10 ||A||_inf, growing tenfold up to 1e-5 ||A||_inf.
/// Throws ConvergenceError.
Vector<double> eigenvector_for(const Matrix<double>& a, double lambda, double tol = 1e-10);

/// Unit inf-norm, first coordinate above the zero threshold positive.
void normalize_eigenvector(Vector<double>& x);

}  // namespace evtp
