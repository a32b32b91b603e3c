#include "evtp/exterior/compound.hpp"

#include <string>

#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/exterior/index_set.hpp"

namespace evtp {

template <Scalar T>
T minor(const Matrix<T>& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size() || rows.empty()) throw DimensionError("minor needs equally many rows and columns");
  const std::size_t j = rows.size();
  if (j == 1) return a(rows[0] - 1, cols[0] - 1);
  Matrix<T> sub(j, j);
  for (std::size_t r = 0; r < j; ++r)
    for (std::size_t c = 0; c < j; ++c) sub(r, c) = a(rows[r] - 1, cols[c] - 1);
  return det(sub);
}

template <Scalar T>
Matrix<T> compound(const Matrix<T>& a, std::size_t j) {
  if (!a.is_square()) throw DimensionError("compound needs a square matrix");
  const std::size_t n = a.rows();
  if (j < 1 || j > n)
    throw DimensionError("compound order " + std::to_string(j) + " outside [1, " + std::to_string(n) + "]");
  if (j == 1) return a;
  const auto subsets = lex_subsets(n, j);
  const std::size_t m = subsets.size();
  Matrix<T> c(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) c(r, s) = minor(a, subsets[r].elems, subsets[s].elems);
  return c;
}

template <Scalar T>
Vector<T> exterior_product(std::span<const Vector<T>> vectors) {
  if (vectors.empty()) throw DimensionError("exterior product of zero vectors");
  const std::size_t n = vectors.front().size();
  const std::size_t j = vectors.size();
  for (const auto& v : vectors)
    if (v.size() != n) throw DimensionError("exterior product factors differ in dimension");
  if (j > n) throw DimensionError("more factors than the ambient dimension");
  if (j == 1) return vectors.front();

  Matrix<T> stacked(n, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < j; ++c) stacked(i, c) = vectors[c][i];

  std::vector<std::size_t> all_cols(j);
  for (std::size_t c = 0; c < j; ++c) all_cols[c] = c + 1;
  const auto subsets = lex_subsets(n, j);
  Vector<T> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.push_back(minor(stacked, s.elems, all_cols));
  return out;
}

template <Scalar T>
Matrix<T> tensor_product(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw DimensionError("tensor product factors differ in dimension");
  if (x.empty()) throw DimensionError("tensor product of empty vectors");
  Matrix<T> m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k) m(i, k) = x[i] * y[k];
  return m;
}

#define EVTP_INSTANTIATE(T)                                                                        \
  template T minor(const Matrix<T>&, std::span<const std::size_t>, std::span<const std::size_t>); \
  template Matrix<T> compound(const Matrix<T>&, std::size_t);                                      \
  template Vector<T> exterior_product(std::span<const Vector<T>>);                                 \
  template Matrix<T> tensor_product(std::span<const T>, std::span<const T>);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
