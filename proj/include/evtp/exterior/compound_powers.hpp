#pragma once

#include <cstddef>
#include <vector>

#include "evtp/core/matrix.hpp"

namespace evtp {

/// Walks k = 1, 2, ... and exposes (A^(j))^k = (A^k)^(j) for every order j
/// through the Cauchy-Binet identity. In the float backend each sequence is
/// rescaled to unit max-abs after every step, which preserves all sign
/// information while keeping high powers finite and avoiding the
/// cancellation that direct minors of A^k would suffer.
template <Scalar T>
class CompoundPowerSequence {
 public:
  explicit CompoundPowerSequence(const Matrix<T>& a);

  std::size_t order() const noexcept { return bases_.size(); }
  std::size_t power() const noexcept { return k_; }

  /// (A^(j))^k up to a positive factor, j in [1, n].
  const Matrix<T>& current(std::size_t j) const { return powers_[j - 1]; }
  const std::vector<Matrix<T>>& all() const noexcept { return powers_; }

  void advance();

 private:
  std::vector<Matrix<T>> bases_;
  std::vector<Matrix<T>> powers_;
  std::size_t k_ = 1;
};

/// Divides by the largest |entry| (float only; identity for exact input).
template <Scalar T>
Matrix<T> normalized_scale(const Matrix<T>& a);

}  // namespace evtp
