#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "evtp/core/scalar.hpp"

namespace evtp {

template <Scalar T>
using Vector = std::vector<T>;

/// Dense row-major matrix with positive dimensions. The scalar type is the
/// backend: Matrix<Rational> is exact, Matrix<double> is IEEE-754 binary64
/// and never stores NaN.
template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows);
  static Matrix diagonal(std::span<const T> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const noexcept { return data_; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector<T> column(std::size_t j) const;

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

Matrix<double> to_double(const Matrix<Rational>& a);
inline const Matrix<double>& to_double(const Matrix<double>& a) { return a; }

template <Scalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b);

template <Scalar T>
Vector<T> multiply(const Matrix<T>& a, std::span<const T> x);

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return multiply(a, b);
}

template <Scalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);

template <Scalar T>
Matrix<T> scaled(const Matrix<T>& a, const T& factor);

/// A^k by repeated squaring; A^0 = I.
template <Scalar T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned k);

/// Largest |a_ij| as a double.
template <Scalar T>
double max_abs(const Matrix<T>& a);

/// Maximum absolute row sum.
template <Scalar T>
double norm_inf(const Matrix<T>& a);

double norm_inf(std::span<const double> x);

/// Positive multiple test: true iff b = c * a for some c > 0 (compared exactly).
template <Scalar T>
bool positive_multiple(const Matrix<T>& a, const Matrix<T>& b);

}  // namespace evtp
