#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "evtp/core/matrix.hpp"
#include "evtp/signs/sign_pattern.hpp"

namespace evtp {

/// Fixed-seed corpora for property suites and the CLI "generate" command.
/// Every generator returns an exact matrix so both backends can be run on
/// the same instance.
using Rng = std::mt19937_64;

/// Integer entries in [lo, hi].
Matrix<Rational> random_integer_matrix(std::size_t n, Rng& rng, int lo = -9, int hi = 9);

/// Integer entries in [1, 9].
Matrix<Rational> random_positive(std::size_t n, Rng& rng);

struct SignedInstance {
  Matrix<Rational> matrix;
  SignPartition partition;
};

/// D P D with D = diag(s) for a random signature s and a random positive P.
SignedInstance random_sign_conjugated_positive(std::size_t n, Rng& rng);

/// Product of n - 1 lower bidiagonal factors, a positive diagonal and n - 1
/// upper bidiagonal factors, all with entries in {1, 2}; retried until the
/// product is STP (checked exactly).
Matrix<Rational> random_stp(std::size_t n, Rng& rng);

/// Same construction with off-diagonal factor entries in {0, 1, 2}: TP and
/// invertible, not necessarily STP.
Matrix<Rational> random_tp(std::size_t n, Rng& rng);

/// Checkerboard of random_tp.
Matrix<Rational> random_tsa(std::size_t n, Rng& rng);

/// Diagonally dominant Z-matrix (an M-matrix, hence monotone).
Matrix<Rational> random_m_matrix(std::size_t n, Rng& rng);

struct SpectralInstance {
  Matrix<Rational> matrix;
  std::vector<Rational> eigenvalues;  // descending modulus
};

/// S diag(lambda) S^-1 with S = L U for random unit-triangular integer L, U
/// and eigenvalues of random sign whose moduli at least halve from one to
/// the next.
SpectralInstance random_well_separated(std::size_t n, Rng& rng, bool positive = false);

/// D B D or P B P^T for B = random_stp: an eventually P-matrix with a
/// positive simple spectrum.
Matrix<Rational> random_eventually_p(std::size_t n, Rng& rng);

/// Name-based dispatch used by the CLI: positive, sign-conjugated, stp, tp,
/// tsa, m-matrix, well-separated, eventually-p, integer.
Matrix<Rational> generate(const std::string& kind, std::size_t n, Rng& rng);

}  // namespace evtp
