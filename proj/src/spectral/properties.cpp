#include "evtp/spectral/properties.hpp"

#include <cmath>

#include "evtp/core/error.hpp"
#include "evtp/exterior/compound.hpp"

namespace evtp {

const char* to_string(Status status) {
  switch (status) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

PropertyCheck make(Status status, std::string reason) {
  PropertyCheck c;
  c.status = status;
  c.reason = std::move(reason);
  return c;
}

// Ties, multiple and zero dominant eigenvalues rule out a strictly dominant
// simple eigenvalue; the remaining failures are inconclusive.
PropertyCheck from_failure(const SpectralFailure& f) {
  PropertyCheck c;
  switch (f.kind) {
    case FailureKind::dominance_tie:
    case FailureKind::not_simple:
    case FailureKind::zero_matrix: c.status = Status::no; break;
    default: c.status = Status::unknown; break;
  }
  c.reason = std::string(to_string(f.kind)) + ": " + f.detail;
  c.failure = f.kind;
  return c;
}

// +1 / -1 if every coordinate is above the zero threshold with that sign.
int strict_sign(std::span<const double> x) {
  int sign = 0;
  for (double v : x) {
    if (std::fabs(v) <= kZeroCoordinateRel) return 0;
    const int s = v > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return 0;
    sign = s;
  }
  return sign;
}

bool has_zero_coordinate(std::span<const double> x) {
  for (double v : x)
    if (std::fabs(v) <= kZeroCoordinateRel) return true;
  return false;
}

}  // namespace

PropertyCheck check_strong_pf(const Matrix<double>& a, double tol) {
  const auto r = dominant_eigenpair(a, tol);
  if (!r.ok()) return from_failure(*r.failure);
  PropertyCheck c;
  c.certificate = r.certificate;
  if (r.certificate->lambda <= 0.0) {
    c.status = Status::no;
    c.reason = "dominant eigenvalue is not positive";
  } else if (strict_sign(r.certificate->x) == 0) {
    c.status = Status::no;
    c.reason = "dominant eigenvector has zero or mixed-sign coordinates";
  } else {
    c.status = Status::yes;
    c.reason = "positive simple strictly dominant eigenvalue with positive eigenvector";
  }
  return c;
}

PropertyCheck check_pf(const Matrix<double>& a, double tol) {
  const auto r = dominant_eigenpair(a, tol);
  if (!r.ok()) {
    PropertyCheck c = make(Status::unknown, std::string(to_string(r.failure->kind)) + ": " + r.failure->detail);
    c.failure = r.failure->kind;
    return c;
  }
  PropertyCheck c;
  c.certificate = r.certificate;
  bool nonnegative = true;
  for (double v : r.certificate->x) nonnegative = nonnegative && v >= -kZeroCoordinateRel;
  if (r.certificate->lambda <= 0.0) {
    c.status = Status::no;
    c.reason = "strictly dominant eigenvalue is not positive";
  } else if (!nonnegative) {
    c.status = Status::no;
    c.reason = "strictly dominant eigenvector has mixed signs";
  } else {
    c.status = Status::yes;
    c.reason = "positive dominant eigenvalue with nonnegative eigenvector";
  }
  return c;
}

PropertyCheck check_signature_equality(const Matrix<double>& a, double tol) {
  const auto r = dominant_eigenpair(a, tol);
  if (!r.ok()) return from_failure(*r.failure);
  PropertyCheck c;
  c.certificate = r.certificate;
  const auto& x = r.certificate->x;
  const auto& y = r.certificate->x_star;
  if (r.certificate->lambda <= 0.0) {
    c.status = Status::no;
    c.reason = "dominant eigenvalue is not positive";
    return c;
  }
  if (has_zero_coordinate(x) || has_zero_coordinate(y)) {
    c.status = Status::no;
    c.reason = "eigenvector or eigenfunctional has a zero coordinate";
    return c;
  }
  std::vector<int> sx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx[i] = x[i] > 0 ? 1 : -1;
    // Both vectors are normalized with a positive first coordinate, so equal
    // sign patterns compare directly.
    if (sx[i] != (y[i] > 0 ? 1 : -1)) {
      c.status = Status::no;
      c.reason = "Sign(x) differs from Sign(x*) at coordinate " + std::to_string(i + 1);
      return c;
    }
  }
  c.status = Status::yes;
  c.reason = "Sign(x) = Sign(x*)";
  c.partition = SignPartition::from_signature(std::move(sx)).canonical();
  return c;
}

PropertyCheck check_weak_signature_equality(const Matrix<double>& a, double tol) {
  const auto r = dominant_eigenpair(a, tol);
  if (!r.ok()) {
    PropertyCheck c = make(Status::unknown, std::string(to_string(r.failure->kind)) + ": " + r.failure->detail);
    c.failure = r.failure->kind;
    return c;
  }
  PropertyCheck c;
  c.certificate = r.certificate;
  if (r.certificate->lambda <= 0.0) {
    c.status = Status::no;
    c.reason = "dominant eigenvalue is not positive";
    return c;
  }
  const auto& x = r.certificate->x;
  const auto& y = r.certificate->x_star;
  bool same = true;
  bool flipped = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    same = same && x[i] * y[i] >= -kZeroCoordinateRel;
    flipped = flipped && -x[i] * y[i] >= -kZeroCoordinateRel;
  }
  c.status = same || flipped ? Status::yes : Status::no;
  c.reason = same || flipped ? "x_i x*_i >= 0 for all i" : "x_i x*_i < 0 for some i";
  return c;
}

template <Scalar T>
MarkovReport check_markov_system(std::span<const Vector<T>> vectors, double rel) {
  MarkovReport report;
  report.holds = !vectors.empty();
  for (std::size_t j = 1; j <= vectors.size(); ++j) {
    const Vector<T> w = exterior_product(vectors.subspan(0, j));
    double zero_tol = 0.0;
    if constexpr (!is_exact_v<T>) zero_tol = rel * norm_inf(w);
    int sign = 0;
    for (const T& v : w) {
      const int s = sign_of(v, zero_tol);
      if (s == 0 || (sign != 0 && s != sign)) {
        sign = 0;
        break;
      }
      sign = s;
    }
    report.levels.push_back(MarkovLevel{j, sign});
    report.holds = report.holds && sign != 0;
  }
  return report;
}

namespace {

template <Scalar T, class Check>
CompoundPropertyCheck per_compound(const Matrix<T>& a, bool transpose, Check check) {
  if (!a.is_square()) throw DimensionError("compound property checks need a square matrix");
  if (a.rows() > kMaxCompoundOrder) throw DimensionError("compound property checks are limited to n <= 12");
  CompoundPropertyCheck out;
  out.status = Status::yes;
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    Matrix<double> c = to_double(compound(a, j));
    if (transpose) c = c.transposed();
    PropertyCheck level = check(c);
    const Status s = level.status;
    const std::string reason = level.reason;
    out.levels.push_back(std::move(level));
    if (s == Status::no) {
      out.status = Status::no;
      out.reason = "order " + std::to_string(j) + ": " + reason;
      return out;
    }
    if (s == Status::unknown && out.status == Status::yes) {
      out.status = Status::unknown;
      out.reason = "order " + std::to_string(j) + ": " + reason;
    }
  }
  if (out.status == Status::yes) out.reason = "holds for every compound order";
  return out;
}

}  // namespace

template <Scalar T>
CompoundPropertyCheck check_gk_property(const Matrix<T>& a, double tol) {
  return per_compound(a, false, [tol](const Matrix<double>& c) { return check_strong_pf(c, tol); });
}

template <Scalar T>
CompoundPropertyCheck check_gk_property_transposed(const Matrix<T>& a, double tol) {
  return per_compound(a, true, [tol](const Matrix<double>& c) { return check_strong_pf(c, tol); });
}

template <Scalar T>
CompoundPropertyCheck check_tse_property(const Matrix<T>& a, double tol) {
  return per_compound(a, false, [tol](const Matrix<double>& c) { return check_signature_equality(c, tol); });
}

double rank_one_limit_residual(const Matrix<double>& a, unsigned k, double tol) {
  const auto r = dominant_eigenpair(a, tol);
  if (!r.ok() || r.certificate->lambda <= 0.0)
    throw PreconditionError("rank-one limit needs a positive simple strictly dominant eigenvalue");
  const auto& x = r.certificate->x;
  Vector<double> y = r.certificate->x_star;
  double xy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) xy += x[i] * y[i];
  for (double& v : y) v /= xy;
  const Matrix<double> p = mat_pow(scaled(a, 1.0 / r.certificate->lambda), k);
  return norm_inf(p - tensor_product<double>(x, y));
}

#define EVTP_INSTANTIATE(T)                                                                 \
  template MarkovReport check_markov_system(std::span<const Vector<T>>, double);            \
  template CompoundPropertyCheck check_gk_property(const Matrix<T>&, double);               \
  template CompoundPropertyCheck check_gk_property_transposed(const Matrix<T>&, double);    \
  template CompoundPropertyCheck check_tse_property(const Matrix<T>&, double);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
