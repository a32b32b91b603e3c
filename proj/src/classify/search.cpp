#include "evtp/classify/search.hpp"

#include <cmath>
#include <sstream>

#include "evtp/core/error.hpp"
#include "evtp/exterior/compound.hpp"
#include "evtp/exterior/index_set.hpp"
#include "evtp/signs/sign_pattern.hpp"

namespace evtp {

const char* to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::holds: return "holds";
    case SearchKind::flicker: return "flicker";
    case SearchKind::fails: return "fails";
  }
  return "fails";
}

template <Scalar T>
PowerWalk<T>::PowerWalk(const Matrix<T>& a, bool with_compounds)
    : base_(a), power_(normalized_scale(a)) {
  if (!a.is_square()) throw DimensionError("power search needs a square matrix");
  if (with_compounds && !is_exact_v<T>) seq_.emplace(a);
}

template <Scalar T>
const Matrix<T>& PowerWalk<T>::compound(std::size_t j) {
  if (seq_) return seq_->current(j);
  auto it = cache_.find(j);
  if (it == cache_.end()) it = cache_.emplace(j, evtp::compound(power_, j)).first;
  return it->second;
}

template <Scalar T>
void PowerWalk<T>::advance() {
  power_ = normalized_scale(multiply(power_, base_));
  if (seq_) seq_->advance();
  cache_.clear();
  ++k_;
}

template <Scalar T>
SearchOutcome power_search(const Matrix<T>& a, std::size_t k_max, bool with_compounds,
                           const PowerPredicate<T>& predicate) {
  if (k_max < 1) throw PreconditionError("k_max must be positive");
  PowerWalk<T> walk(a, with_compounds);
  std::vector<PowerEval> evals;
  std::vector<Matrix<T>> history;
  SearchOutcome out;
  std::optional<std::size_t> cycle_start;

  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) walk.advance();
    for (std::size_t m = 0; m < history.size(); ++m) {
      if (positive_multiple(history[m], walk.power())) {
        cycle_start = m + 1;
        break;
      }
    }
    if (cycle_start) break;
    history.push_back(walk.power());
    evals.push_back(predicate(walk));
  }
  out.evaluated = evals.size();

  auto ok = [&](std::size_t k) { return evals[k - 1].holds; };
  for (std::size_t k = 1; k <= evals.size(); ++k) {
    out.tolerance_warning = out.tolerance_warning || evals[k - 1].ambiguous;
    if (!ok(k)) {
      out.last_failure = k;
      out.witness = evals[k - 1].witness;
    }
    if (!out.anchor && k + 1 <= evals.size() && ok(k) && ok(k + 1)) out.anchor = k;
  }

  const std::size_t last = evals.size();
  if (cycle_start) {
    out.periodic = true;
    out.period_start = cycle_start;
    out.period = last + 1 - *cycle_start;
    for (std::size_t k = *cycle_start; k <= last; ++k) {
      if (!ok(k) || evals[k - 1].key != evals[last - 1].key) {
        out.kind = SearchKind::fails;
        if (!ok(k)) {
          out.witness = evals[k - 1].witness;
          out.last_failure = k;
        } else {
          out.witness = "certificate changes along the power cycle";
        }
        return out;
      }
    }
  } else if (!ok(last)) {
    out.kind = SearchKind::fails;
    return out;
  }

  std::size_t k0 = last;
  while (k0 > 1 && ok(k0 - 1) && evals[k0 - 2].key == evals[last - 1].key) --k0;
  out.power_index = k0;
  out.key = evals[last - 1].key;
  for (std::size_t k = 1; k < k0; ++k)
    if (ok(k)) out.flicker.push_back(k);
  out.kind = out.flicker.empty() ? SearchKind::holds : SearchKind::flicker;
  return out;
}

namespace {

constexpr double kAmbiguityBand = 1e3;

bool near_threshold(double v, double tol) { return tol > 0.0 && v != 0.0 && std::fabs(v) <= kAmbiguityBand * tol; }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << '}';
  return s.str();
}

template <Scalar T>
std::string format_value(const T& v) {
  if constexpr (is_exact_v<T>) {
    return to_string(v);
  } else {
    std::ostringstream s;
    s << v << " (scaled)";
    return s.str();
  }
}

enum class EntryBound { positive, nonnegative };

template <Scalar T>
PowerEval entry_check(PowerWalk<T>& w, double rel, EntryBound bound) {
  const Matrix<T>& p = w.power();
  const double zt = zero_tolerance_for(p, rel);
  PowerEval e;
  e.holds = true;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const int s = sign_of(p(i, j), zt);
      e.ambiguous = e.ambiguous || near_threshold(to_double(p(i, j)), zt);
      const bool good = bound == EntryBound::positive ? s > 0 : s >= 0;
      if (!good && e.holds) {
        e.holds = false;
        e.witness = "A^" + std::to_string(w.k()) + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") = " + format_value(p(i, j));
      }
    }
  }
  return e;
}

std::string partition_key(const SignPartition& p) { return join(p.J); }

}  // namespace

template <Scalar T>
PowerPredicate<T> positive_predicate(double rel) {
  return [rel](PowerWalk<T>& w) { return entry_check(w, rel, EntryBound::positive); };
}

template <Scalar T>
PowerPredicate<T> nonnegative_predicate(double rel) {
  return [rel](PowerWalk<T>& w) { return entry_check(w, rel, EntryBound::nonnegative); };
}

template <Scalar T>
PowerPredicate<T> sjs_predicate(double rel) {
  return [rel](PowerWalk<T>& w) {
    const Matrix<T>& p = w.power();
    const double zt = zero_tolerance_for(p, rel);
    PowerEval e;
    for (const T& v : p.entries()) e.ambiguous = e.ambiguous || near_threshold(to_double(v), zt);
    if (auto part = detect_sjs(p, zt)) {
      e.holds = true;
      e.key = partition_key(*part);
    } else {
      e.witness = "A^" + std::to_string(w.k()) + " is not SJS";
    }
    return e;
  };
}

template <Scalar T>
PowerPredicate<T> stp_predicate(double rel) {
  return [rel](PowerWalk<T>& w) {
    PowerEval e;
    e.holds = true;
    for (std::size_t j = 1; j <= w.n(); ++j) {
      const Matrix<T>& c = w.compound(j);
      const double zt = zero_tolerance_for(c, rel);
      for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t s = 0; s < c.cols(); ++s) {
          e.ambiguous = e.ambiguous || near_threshold(to_double(c(r, s)), zt);
          if (e.holds && sign_of(c(r, s), zt) <= 0) {
            e.holds = false;
            e.witness = "A^" + std::to_string(w.k()) + " minor of order " + std::to_string(j) + " rows " +
                        join(lex_unrank(r, w.n(), j)) + " cols " + join(lex_unrank(s, w.n(), j)) + " = " +
                        format_value(c(r, s));
          }
        }
      }
      if (!e.holds) break;
    }
    return e;
  };
}

template <Scalar T>
PowerPredicate<T> stjs_predicate(double rel) {
  return [rel](PowerWalk<T>& w) {
    PowerEval e;
    e.holds = true;
    for (std::size_t j = 1; j <= w.n(); ++j) {
      const Matrix<T>& c = w.compound(j);
      const double zt = zero_tolerance_for(c, rel);
      for (const T& v : c.entries()) e.ambiguous = e.ambiguous || near_threshold(to_double(v), zt);
      auto part = detect_sjs(c, zt);
      if (!part) {
        e.holds = false;
        e.key.clear();
        e.witness = "compound of order " + std::to_string(j) + " of A^" + std::to_string(w.k()) + " is not SJS";
        break;
      }
      e.key += (j > 1 ? ";" : "") + partition_key(*part);
    }
    return e;
  };
}

template <Scalar T>
PowerPredicate<T> p_matrix_predicate(double rel) {
  return [rel](PowerWalk<T>& w) {
    PowerEval e;
    e.holds = true;
    // Principal minors of A^k are the diagonal entries of its compounds.
    for (std::size_t j = 1; j <= w.n() && e.holds; ++j) {
      const Matrix<T>& c = w.compound(j);
      const double zt = zero_tolerance_for(c, rel);
      for (std::size_t r = 0; r < c.rows(); ++r) {
        e.ambiguous = e.ambiguous || near_threshold(to_double(c(r, r)), zt);
        if (sign_of(c(r, r), zt) <= 0) {
          e.holds = false;
          e.witness = "A^" + std::to_string(w.k()) + " principal minor " + join(lex_unrank(r, w.n(), j)) + " = " +
                      format_value(c(r, r));
          break;
        }
      }
    }
    return e;
  };
}

#define EVTP_INSTANTIATE(T)                                                                                    \
  template class PowerWalk<T>;                                                                                 \
  template SearchOutcome power_search(const Matrix<T>&, std::size_t, bool, const PowerPredicate<T>&);          \
  template PowerPredicate<T> positive_predicate<T>(double);                                                    \
  template PowerPredicate<T> nonnegative_predicate<T>(double);                                                 \
  template PowerPredicate<T> sjs_predicate<T>(double);                                                         \
  template PowerPredicate<T> stp_predicate<T>(double);                                                         \
  template PowerPredicate<T> stjs_predicate<T>(double);                                                        \
  template PowerPredicate<T> p_matrix_predicate<T>(double);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
