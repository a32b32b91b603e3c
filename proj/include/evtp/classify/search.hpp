#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evtp/core/matrix.hpp"
#include "evtp/exterior/compound_powers.hpp"

namespace evtp {

/// Walks A, A^2, ..., exposing each power and its compounds. Float powers are
/// rescaled to unit max-abs and their compounds come from the scaled
/// sequences (A^(j))^k; exact powers are kept verbatim and their compounds
/// are evaluated minor by minor.
template <Scalar T>
class PowerWalk {
 public:
  PowerWalk(const Matrix<T>& a, bool with_compounds);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return base_.rows(); }
  const Matrix<T>& power() const noexcept { return power_; }
  /// (A^k)^(j) up to a positive factor.
  const Matrix<T>& compound(std::size_t j);

  void advance();

 private:
  Matrix<T> base_;
  Matrix<T> power_;
  std::size_t k_ = 1;
  std::optional<CompoundPowerSequence<T>> seq_;
  std::map<std::size_t, Matrix<T>> cache_;
};

/// Pointwise evaluation of a property on one power.
struct PowerEval {
  bool holds = false;
  std::string key;  // certificate that must stay constant on the tail (e.g. J)
  std::string witness;
  bool ambiguous = false;
};

template <Scalar T>
using PowerPredicate = std::function<PowerEval(PowerWalk<T>&)>;

enum class SearchKind { holds, flicker, fails };

const char* to_string(SearchKind kind);

struct SearchOutcome {
  SearchKind kind = SearchKind::fails;
  std::optional<std::size_t> power_index;  // first k of the constant holding tail
  std::string key;                         // tail key
  std::vector<std::size_t> flicker;        // k that held before the tail began
  std::optional<std::size_t> anchor;       // first k with k and k + 1 both holding
  std::size_t evaluated = 0;               // largest k examined
  bool periodic = false;  // A^k is a positive multiple of an earlier power: outcome is definite
  std::optional<std::size_t> period_start;
  std::optional<std::size_t> period;
  std::optional<std::size_t> last_failure;
  std::string witness;  // description of the last failing power
  bool tolerance_warning = false;
};

/// Evaluates the predicate for k = 1..k_max, stopping early once A^k is a
/// positive multiple of some earlier A^m (then every later power repeats
/// the signs of the cycle m..k-1).
template <Scalar T>
SearchOutcome power_search(const Matrix<T>& a, std::size_t k_max, bool with_compounds,
                           const PowerPredicate<T>& predicate);

/// Stock predicates. rel is the relative zero threshold of the float backend.
template <Scalar T>
PowerPredicate<T> positive_predicate(double rel);
template <Scalar T>
PowerPredicate<T> nonnegative_predicate(double rel);
template <Scalar T>
PowerPredicate<T> sjs_predicate(double rel);
template <Scalar T>
PowerPredicate<T> stp_predicate(double rel);
template <Scalar T>
PowerPredicate<T> stjs_predicate(double rel);
template <Scalar T>
PowerPredicate<T> p_matrix_predicate(double rel);

}  // namespace evtp
