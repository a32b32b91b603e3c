#include "evtp/core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "evtp/core/error.hpp"

namespace evtp {

namespace {

template <Scalar T>
void reject_nan(const std::vector<T>& data) {
  if constexpr (std::same_as<T, double>) {
    for (double v : data)
      if (std::isnan(v)) throw std::invalid_argument("matrix entries must not be NaN");
  }
}

}  // namespace

template <Scalar T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, std::vector<T>(rows * cols, T(0))) {}

template <Scalar T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
  reject_nan(data_);
}

template <Scalar T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <Scalar T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  if (rows.empty()) throw DimensionError("matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<T> data;
  data.reserve(rows.size() * cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionError("ragged row " + std::to_string(i + 1) + ": expected " + std::to_string(cols) +
                           " entries, got " + std::to_string(rows[i].size()));
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return Matrix(rows.size(), cols, std::move(data));
}

template <Scalar T>
Matrix<T> Matrix<T>::from_rows(std::initializer_list<std::initializer_list<T>> rows) {
  std::vector<std::vector<T>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

template <Scalar T>
Matrix<T> Matrix<T>::diagonal(std::span<const T> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

template <Scalar T>
Vector<T> Matrix<T>::column(std::size_t j) const {
  Vector<T> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

template <Scalar T>
Matrix<T> Matrix<T>::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix<double> to_double(const Matrix<Rational>& a) {
  std::vector<double> data;
  data.reserve(a.entries().size());
  for (const Rational& v : a.entries()) data.push_back(v.get_d());
  return Matrix<double>(a.rows(), a.cols(), std::move(data));
}

template <Scalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <Scalar T>
Vector<T> multiply(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector dimension mismatch");
  Vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <Scalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum dimension mismatch");
  std::vector<T> data(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] += b.entries()[i];
  return Matrix<T>(a.rows(), a.cols(), std::move(data));
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference dimension mismatch");
  std::vector<T> data(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] -= b.entries()[i];
  return Matrix<T>(a.rows(), a.cols(), std::move(data));
}

template <Scalar T>
Matrix<T> scaled(const Matrix<T>& a, const T& factor) {
  std::vector<T> data(a.entries().begin(), a.entries().end());
  for (T& v : data) v *= factor;
  return Matrix<T>(a.rows(), a.cols(), std::move(data));
}

template <Scalar T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned k) {
  if (!a.is_square()) throw DimensionError("matrix power needs a square matrix");
  Matrix<T> result = Matrix<T>::identity(a.rows());
  Matrix<T> base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : multiply(result, base);
      first = false;
    }
    k >>= 1u;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

template <Scalar T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const T& v : a.entries()) m = std::max(m, std::fabs(to_double(v)));
  return m;
}

template <Scalar T>
double norm_inf(const Matrix<T>& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (const T& v : a.row(i)) s += std::fabs(to_double(v));
    best = std::max(best, s);
  }
  return best;
}

double norm_inf(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

template <Scalar T>
bool positive_multiple(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Locate the first nonzero entry of a to fix the ratio.
  std::size_t pivot = a.entries().size();
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (a.entries()[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == a.entries().size()) return b == a;
  const T& ap = a.entries()[pivot];
  const T& bp = b.entries()[pivot];
  if (sign_of(ap) != sign_of(bp)) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    // b_i * a_p == a_i * b_p, cross-multiplied to avoid division.
    if (b.entries()[i] * ap != a.entries()[i] * bp) return false;
  }
  return true;
}

#define EVTP_INSTANTIATE(T)                                                  \
  template class Matrix<T>;                                                  \
  template Matrix<T> multiply(const Matrix<T>&, const Matrix<T>&);           \
  template Vector<T> multiply(const Matrix<T>&, std::span<const T>);         \
  template Matrix<T> operator+(const Matrix<T>&, const Matrix<T>&);          \
  template Matrix<T> operator-(const Matrix<T>&, const Matrix<T>&);          \
  template Matrix<T> scaled(const Matrix<T>&, const T&);                     \
  template Matrix<T> mat_pow(const Matrix<T>&, unsigned);                    \
  template double max_abs(const Matrix<T>&);                                 \
  template double norm_inf(const Matrix<T>&);                                \
  template bool positive_multiple(const Matrix<T>&, const Matrix<T>&);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
