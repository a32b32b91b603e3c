#include "evtp/core/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "evtp/core/error.hpp"

namespace evtp {

namespace {

void require_square(const Matrix<double>& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + " needs a square matrix");
}
void require_square(const Matrix<Rational>& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + " needs a square matrix");
}

[[noreturn]] void singular(std::size_t k) {
  throw SingularMatrixError(k, "matrix is singular at pivot " + std::to_string(k + 1));
}

// In-place LU with partial pivoting on a copy; returns the row permutation
// parity through `sign`. Used by solve/inverse (guarded) and det (unguarded).
struct FloatLu {
  Matrix<double> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
  std::size_t failed_step = 0;

  FloatLu(const Matrix<double>& a, double guard) : lu(a), perm(a.rows()) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::fabs(lu(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::fabs(lu(i, k)) > best) {
          best = std::fabs(lu(i, k));
          p = i;
        }
      }
      if (best <= guard) {
        singular = true;
        failed_step = k;
        return;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
        std::swap(perm[k], perm[p]);
        sign = -sign;
      }
      const double pivot = lu(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const double f = lu(i, k) / pivot;
        lu(i, k) = f;
        if (f == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
  }

  Vector<double> solve(std::span<const double> b) const {
    const std::size_t n = lu.rows();
    Vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[perm[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
      x[i] = s / lu(i, i);
    }
    return x;
  }
};

double pivot_guard(const Matrix<double>& a) { return kPivotTolerance * norm_inf(a); }

// Gaussian elimination over Q on the augmented system [a | rhs].
Matrix<Rational> exact_eliminate(const Matrix<Rational>& a, const Matrix<Rational>& rhs) {
  const std::size_t n = a.rows();
  const std::size_t m = rhs.cols();
  Matrix<Rational> aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = rhs(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug(p, k) == 0) ++p;
    if (p == n) singular(k);
    if (p != k)
      for (std::size_t j = 0; j < n + m; ++j) std::swap(aug(k, j), aug(p, j));
    const Rational pivot = aug(k, k);
    for (std::size_t j = k; j < n + m; ++j) aug(k, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug(i, k) == 0) continue;
      const Rational f = aug(i, k);
      for (std::size_t j = k; j < n + m; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  Matrix<Rational> x(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) x(i, j) = aug(i, n + j);
  return x;
}

}  // namespace

Vector<double> lu_solve(const Matrix<double>& a, std::span<const double> b) {
  require_square(a, "lu_solve");
  if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match matrix");
  FloatLu lu(a, pivot_guard(a));
  if (lu.singular) singular(lu.failed_step);
  return lu.solve(b);
}

Vector<Rational> lu_solve(const Matrix<Rational>& a, std::span<const Rational> b) {
  require_square(a, "lu_solve");
  if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match matrix");
  Matrix<Rational> rhs(a.rows(), 1, std::vector<Rational>(b.begin(), b.end()));
  return exact_eliminate(a, rhs).column(0);
}

double det(const Matrix<double>& a) {
  require_square(a, "det");
  FloatLu lu(a, 0.0);
  if (lu.singular) return 0.0;
  double d = lu.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= lu.lu(i, i);
  return d;
}

Rational det(const Matrix<Rational>& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  Matrix<Rational> m = a;
  Rational previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign < 0 ? Rational(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

Matrix<double> inverse(const Matrix<double>& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  FloatLu lu(a, pivot_guard(a));
  if (lu.singular) singular(lu.failed_step);
  Matrix<double> inv(n, n);
  Vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e.assign(n, 0.0);
    e[j] = 1.0;
    Vector<double> col = lu.solve(e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

Matrix<Rational> inverse(const Matrix<Rational>& a) {
  require_square(a, "inverse");
  return exact_eliminate(a, Matrix<Rational>::identity(a.rows()));
}

}  // namespace evtp
