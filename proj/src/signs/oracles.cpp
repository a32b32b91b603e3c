#include "evtp/signs/oracles.hpp"

#include <cmath>

#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/exterior/compound.hpp"
#include "evtp/exterior/compound_powers.hpp"
#include "evtp/exterior/index_set.hpp"

namespace evtp {

namespace {

constexpr double kAmbiguityBand = 1e3;

bool ambiguous(double value, double tol) {
  return tol > 0.0 && value != 0.0 && std::fabs(value) <= kAmbiguityBand * tol;
}

enum class Bound { nonnegative, positive };

template <Scalar T>
OracleResult check_all_minors(const Matrix<T>& a, Bound bound, double rel) {
  if (!a.is_square()) throw DimensionError("total positivity checks need a square matrix");
  OracleResult result;
  bool any_ambiguous = false;
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    const double tol = minor_tolerance(a, j, rel);
    const Matrix<T> c = compound(a, j);
    const auto subsets = lex_subsets(a.rows(), j);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t s = 0; s < c.cols(); ++s) {
        const double v = to_double(c(r, s));
        const int sign = sign_of(c(r, s), tol);
        any_ambiguous = any_ambiguous || ambiguous(v, tol);
        const bool ok = bound == Bound::positive ? sign > 0 : sign >= 0;
        if (!ok) {
          result.holds = false;
          result.witness = MinorWitness{j, subsets[r].elems, subsets[s].elems, v};
          result.tolerance_warning = ambiguous(v, tol);
          return result;
        }
      }
    }
  }
  result.tolerance_warning = any_ambiguous;
  return result;
}

}  // namespace

template <Scalar T>
double minor_tolerance(const Matrix<T>& a, std::size_t j, double rel) {
  if constexpr (is_exact_v<T>) {
    (void)a;
    (void)j;
    (void)rel;
    return 0.0;
  } else {
    return rel * std::pow(max_abs(a), static_cast<double>(j));
  }
}

template <Scalar T>
OracleResult is_tp(const Matrix<T>& a, double rel) {
  return check_all_minors(a, Bound::nonnegative, rel);
}

template <Scalar T>
OracleResult is_stp(const Matrix<T>& a, double rel) {
  return check_all_minors(a, Bound::positive, rel);
}

template <Scalar T>
OracleResult is_p_matrix(const Matrix<T>& a, double rel) {
  if (!a.is_square()) throw DimensionError("P-matrix test needs a square matrix");
  OracleResult result;
  bool any_ambiguous = false;
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    const double tol = minor_tolerance(a, j, rel);
    for (const auto& subset : lex_subsets(a.rows(), j)) {
      const T m = minor(a, subset.elems, subset.elems);
      const double v = to_double(m);
      any_ambiguous = any_ambiguous || ambiguous(v, tol);
      if (sign_of(m, tol) <= 0) {
        result.holds = false;
        result.witness = MinorWitness{j, subset.elems, subset.elems, v};
        result.tolerance_warning = ambiguous(v, tol);
        return result;
      }
    }
  }
  result.tolerance_warning = any_ambiguous;
  return result;
}

template <Scalar T>
OracleResult is_tsa(const Matrix<T>& a, double rel) {
  return is_tp(checkerboard(a), rel);
}

template <Scalar T>
bool is_monotone(const Matrix<T>& s) {
  if (!s.is_square()) return false;
  try {
    const Matrix<T> inv = inverse(s);
    if constexpr (is_exact_v<T>) {
      for (const T& v : inv.entries())
        if (v < 0) return false;
      return true;
    } else {
      const double scale = max_abs(inv);
      for (double v : inv.entries())
        if (v / scale < -1e-10) return false;
      return true;
    }
  } catch (const SingularMatrixError&) {
    return false;
  }
}

template <Scalar T>
OscillatoryResult is_oscillatory(const Matrix<T>& a, std::size_t k_max, double rel) {
  OscillatoryResult out;
  out.tp = is_tp(a, rel);
  if (!out.tp.holds) return out;
  if constexpr (is_exact_v<T>) {
    Matrix<T> power = a;
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (k > 1) power = multiply(power, a);
      if (is_stp(power, rel).holds) {
        out.holds = true;
        out.k = k;
        return out;
      }
    }
  } else {
    CompoundPowerSequence<T> seq(a);
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (k > 1) seq.advance();
      bool stp = true;
      for (const auto& p : seq.all()) {
        const double tol = zero_tolerance_for(p, rel);
        for (double v : p.entries()) stp = stp && v > tol;
      }
      if (stp) {
        out.holds = true;
        out.k = k;
        return out;
      }
    }
  }
  return out;
}

template <Scalar T>
std::optional<std::vector<SignPartition>> detect_stjs(const Matrix<T>& a, double rel) {
  if (!a.is_square()) throw DimensionError("sign-symmetry detection needs a square matrix");
  std::vector<SignPartition> parts;
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    auto p = detect_sjs(compound(a, j), minor_tolerance(a, j, rel));
    if (!p) return std::nullopt;
    parts.push_back(std::move(*p));
  }
  return parts;
}

#define EVTP_INSTANTIATE(T)                                                                        \
  template double minor_tolerance(const Matrix<T>&, std::size_t, double);                          \
  template OracleResult is_tp(const Matrix<T>&, double);                                           \
  template OracleResult is_stp(const Matrix<T>&, double);                                          \
  template OracleResult is_p_matrix(const Matrix<T>&, double);                                     \
  template OracleResult is_tsa(const Matrix<T>&, double);                                          \
  template bool is_monotone(const Matrix<T>&);                                                     \
  template OscillatoryResult is_oscillatory(const Matrix<T>&, std::size_t, double);                \
  template std::optional<std::vector<SignPartition>> detect_stjs(const Matrix<T>&, double);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
