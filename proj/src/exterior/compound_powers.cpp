#include "evtp/exterior/compound_powers.hpp"

#include "evtp/core/error.hpp"
#include "evtp/exterior/compound.hpp"

namespace evtp {

template <Scalar T>
Matrix<T> normalized_scale(const Matrix<T>& a) {
  if constexpr (is_exact_v<T>) {
    return a;
  } else {
    const double m = max_abs(a);
    return m > 0.0 ? scaled(a, 1.0 / m) : a;
  }
}

template <Scalar T>
CompoundPowerSequence<T>::CompoundPowerSequence(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("compound powers need a square matrix");
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    bases_.push_back(compound(a, j));
    powers_.push_back(normalized_scale(bases_.back()));
  }
}

template <Scalar T>
void CompoundPowerSequence<T>::advance() {
  for (std::size_t j = 0; j < bases_.size(); ++j) powers_[j] = normalized_scale(multiply(powers_[j], bases_[j]));
  ++k_;
}

template class CompoundPowerSequence<double>;
template class CompoundPowerSequence<Rational>;
template Matrix<double> normalized_scale(const Matrix<double>&);
template Matrix<Rational> normalized_scale(const Matrix<Rational>&);

}  // namespace evtp
