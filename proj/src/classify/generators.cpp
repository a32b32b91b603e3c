#include "evtp/classify/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/signs/oracles.hpp"

namespace evtp {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix<Rational> bidiagonal_product(std::size_t n, Rng& rng, int off_lo) {
  Matrix<Rational> acc = Matrix<Rational>::identity(n);
  for (std::size_t f = 0; f + 1 < n; ++f) {
    Matrix<Rational> l = Matrix<Rational>::identity(n);
    for (std::size_t i = 0; i < n; ++i) l(i, i) = uniform(rng, 1, 2);
    for (std::size_t i = 1; i < n; ++i) l(i, i - 1) = uniform(rng, off_lo, 2);
    acc = multiply(acc, l);
  }
  Matrix<Rational> d = Matrix<Rational>::identity(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = uniform(rng, 1, 3);
  acc = multiply(acc, d);
  for (std::size_t f = 0; f + 1 < n; ++f) {
    Matrix<Rational> u = Matrix<Rational>::identity(n);
    for (std::size_t i = 0; i < n; ++i) u(i, i) = uniform(rng, 1, 2);
    for (std::size_t i = 1; i < n; ++i) u(i - 1, i) = uniform(rng, off_lo, 2);
    acc = multiply(acc, u);
  }
  return acc;
}

std::vector<int> random_signature(std::size_t n, Rng& rng) {
  std::vector<int> s(n);
  for (int& v : s) v = uniform(rng, 0, 1) ? 1 : -1;
  return s;
}

}  // namespace

Matrix<Rational> random_integer_matrix(std::size_t n, Rng& rng, int lo, int hi) {
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform(rng, lo, hi);
  return a;
}

Matrix<Rational> random_positive(std::size_t n, Rng& rng) { return random_integer_matrix(n, rng, 1, 9); }

SignedInstance random_sign_conjugated_positive(std::size_t n, Rng& rng) {
  const Matrix<Rational> p = random_positive(n, rng);
  const SignPartition part = SignPartition::from_signature(random_signature(n, rng)).canonical();
  return SignedInstance{signature_conjugate(p, part), part};
}

Matrix<Rational> random_stp(std::size_t n, Rng& rng) {
  for (;;) {
    Matrix<Rational> a = bidiagonal_product(n, rng, 1);
    if (is_stp(a).holds) return a;
  }
}

Matrix<Rational> random_tp(std::size_t n, Rng& rng) { return bidiagonal_product(n, rng, 0); }

Matrix<Rational> random_tsa(std::size_t n, Rng& rng) { return checkerboard(random_tp(n, rng)); }

Matrix<Rational> random_m_matrix(std::size_t n, Rng& rng) {
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    int off = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int v = uniform(rng, 0, 3);
      a(i, j) = -v;
      off += v;
    }
    a(i, i) = off + uniform(rng, 1, 3);
  }
  return a;
}

SpectralInstance random_well_separated(std::size_t n, Rng& rng, bool positive) {
  Matrix<Rational> l = Matrix<Rational>::identity(n);
  Matrix<Rational> u = Matrix<Rational>::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = uniform(rng, -2, 2);
      u(j, i) = uniform(rng, -2, 2);
    }
  }
  const Matrix<Rational> s = multiply(l, u);
  std::vector<Rational> eig(n);
  Rational modulus = uniform(rng, 1, 3);
  for (std::size_t i = n; i-- > 0;) {
    const int sign = positive || uniform(rng, 0, 1) ? 1 : -1;
    eig[i] = sign * modulus;
    modulus *= uniform(rng, 2, 3);
  }
  const Matrix<Rational> lambda = Matrix<Rational>::diagonal(eig);
  return SpectralInstance{multiply(multiply(s, lambda), inverse(s)), eig};
}

Matrix<Rational> random_eventually_p(std::size_t n, Rng& rng) {
  const Matrix<Rational> b = random_stp(n, rng);
  if (uniform(rng, 0, 1)) {
    const auto part = SignPartition::from_signature(random_signature(n, rng));
    return signature_conjugate(b, part);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<Rational> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = b(perm[i], perm[j]);
  return out;
}

Matrix<Rational> generate(const std::string& kind, std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("generated matrices need n >= 1");
  if (kind == "positive") return random_positive(n, rng);
  if (kind == "sign-conjugated") return random_sign_conjugated_positive(n, rng).matrix;
  if (kind == "stp") return random_stp(n, rng);
  if (kind == "tp") return random_tp(n, rng);
  if (kind == "tsa") return random_tsa(n, rng);
  if (kind == "m-matrix") return random_m_matrix(n, rng);
  if (kind == "well-separated") return random_well_separated(n, rng).matrix;
  if (kind == "eventually-p") return random_eventually_p(n, rng);
  if (kind == "integer") return random_integer_matrix(n, rng);
  throw std::invalid_argument("unknown generator '" + kind +
                              "' (positive, sign-conjugated, stp, tp, tsa, m-matrix, well-separated, eventually-p, integer)");
}

}  // namespace evtp
