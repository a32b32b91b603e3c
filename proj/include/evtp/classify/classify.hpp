#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evtp/classify/search.hpp"
#include "evtp/core/matrix.hpp"
#include "evtp/signs/sign_pattern.hpp"
#include "evtp/spectral/properties.hpp"

namespace evtp {

struct ClassifyOptions {
  double tol = kDefaultTol;                 // eigen-residual tolerance
  double sign_tol = kDefaultSignTolerance;  // relative zero threshold for float signs
  std::size_t k_max = 64;
};

/// One line of evidence behind a verdict. The search route is "definite"
/// when the power sequence was shown to cycle.
struct RouteResult {
  std::string name;
  Status status = Status::unknown;
  std::string detail;
  bool definite = false;
};

struct Verdict {
  Status status = Status::unknown;
  std::optional<std::size_t> power_index;
  std::string basis;
  std::string certificate_summary;
  std::string witness;
  std::string reason;
  std::vector<RouteResult> routes;
  std::vector<SpectralCertificate> certificates;
  std::vector<SignPartition> partitions;
  std::optional<SearchOutcome> search;
  bool finite_evidence = false;  // decided by the finite power search alone
  bool tolerance_warning = false;
};

/// Status of the route with the given name (unknown if absent).
Status route_status(const Verdict& v, const std::string& name);

template <Scalar T>
Verdict classify_ep(const Matrix<T>& a, const ClassifyOptions& opt = {});
template <Scalar T>
Verdict classify_en(const Matrix<T>& a, const ClassifyOptions& opt = {});
template <Scalar T>
Verdict classify_esjs(const Matrix<T>& a, const ClassifyOptions& opt = {});
template <Scalar T>
Verdict classify_estp(const Matrix<T>& a, const ClassifyOptions& opt = {});
template <Scalar T>
Verdict classify_estjs(const Matrix<T>& a, const ClassifyOptions& opt = {});
template <Scalar T>
Verdict classify_eventually_p(const Matrix<T>& a, const ClassifyOptions& opt = {});

struct ShiftCheck {
  Status gk_before = Status::unknown;
  Status gk_after = Status::unknown;
  bool holds = true;  // GK(A) => GK(A + alpha I)
};

/// Records whether the GK property survives the shift A + alpha I.
/// Throws PreconditionError for alpha <= 0.
template <Scalar T>
ShiftCheck shift_check(const Matrix<T>& a, double alpha, double tol = kDefaultTol);

/// S^-1 A S. Throws SingularMatrixError for singular S.
template <Scalar T>
Matrix<T> conjugate(const Matrix<T>& a, const Matrix<T>& s);

struct CrossCheck {
  std::string name;
  bool applicable = false;  // premise held
  bool holds = true;
  std::string detail;
};

struct ClassificationReport {
  std::string backend;
  std::size_t n = 0;
  ClassifyOptions options;
  std::vector<std::pair<std::string, Verdict>> verdicts;  // report order
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> warnings;

  const Verdict& at(const std::string& name) const;
};

/// Static verdicts (TP, STP, oscillatory, P, JS, SJS, TSA, monotone, STJS)
/// followed by the eventual ones (EP, EN, ESJS, ESTP, ESTJS, eventually-P)
/// and the implication cross-checks. Exact input is also evaluated in float
/// for the static verdicts; exact wins and disagreements are logged.
template <Scalar T>
ClassificationReport classify(const Matrix<T>& a, const ClassifyOptions& opt = {});

/// The eventual verdict with the given report name ("EP", "ESTP", ...).
template <Scalar T>
Verdict classify_property(const std::string& name, const Matrix<T>& a, const ClassifyOptions& opt = {});

}  // namespace evtp
