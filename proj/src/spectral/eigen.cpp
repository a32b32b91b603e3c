#include "evtp/spectral/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/exterior/compound.hpp"

namespace evtp {

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::zero_matrix: return "zero_matrix";
    case FailureKind::dominance_tie: return "dominance_tie";
    case FailureKind::not_simple: return "not_simple";
    case FailureKind::not_converged: return "not_converged";
    case FailureKind::transpose_mismatch: return "transpose_mismatch";
    case FailureKind::inconsistent: return "inconsistent";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kWindow = 100;
constexpr double kStagnation = 0.999;
constexpr double kRestartBump = 1e-3;
constexpr double kLambdaAgreement = 1e-8;
constexpr double kDirectionAgreement = 1e-6;
constexpr double kDefectiveProbeResidual = 1e-8;
constexpr double kDefectiveFactor = 10.0;
constexpr double kProductAgreement = 1e-6;
constexpr std::size_t kPolishSteps = 1000;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// |x . y| / (|x|_2 |y|_2): near zero when the eigenvalue is not algebraically
// simple (right and left eigenvectors become orthogonal).
double eigen_cosine(std::span<const double> x, std::span<const double> y) {
  const double d = norm2(x) * norm2(y);
  return d > 0.0 ? std::fabs(dot(x, y)) / d : 0.0;
}

double signed_max_abs(std::span<const double> v) {
  double best = 0.0;
  for (double e : v)
    if (std::fabs(e) > std::fabs(best)) best = e;
  return best;
}

Vector<double> probe_start(std::size_t n) {
  Vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(1.7 * static_cast<double>(i + 1) + 0.3);
  return v;
}

// One power sequence: v has unit max-abs entry, av = A v.
struct Sequence {
  const Matrix<double>* a = nullptr;
  Vector<double> v;
  double lambda = 0.0;
  double prev_lambda = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::infinity();  // relative to ||A||
  bool converged = false;
  bool vanished = false;
  double window_best = std::numeric_limits<double>::infinity();
  double prev_window_best = std::numeric_limits<double>::infinity();
  std::optional<double> contraction;
  double first_residual = 0.0;
  std::size_t steps = 0;

  void init(const Matrix<double>& m, Vector<double> start) {
    a = &m;
    const double s = signed_max_abs(start);
    for (double& e : start) e /= s;
    v = std::move(start);
  }

  void step(double scale, double tol) {
    Vector<double> av = multiply(*a, std::span<const double>(v));
    lambda = dot(v, av) / dot(v, v);
    double r = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::fabs(av[i] - lambda * v[i]));
    residual = r / scale;
    if (steps++ == 0) first_residual = residual;
    window_best = std::min(window_best, residual);
    converged = residual <= tol && std::fabs(lambda - prev_lambda) <= tol * scale;
    prev_lambda = lambda;
    const double m = signed_max_abs(av);
    if (m == 0.0) {
      vanished = true;
      return;
    }
    if (converged) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = av[i] / m;
  }

  // Called at window boundaries; true when the best residual of the window
  // did not improve on the previous window by the stagnation factor.
  bool close_window() {
    bool stagnant = false;
    if (std::isfinite(prev_window_best) && prev_window_best > 0.0) {
      contraction = window_best / prev_window_best;
      stagnant = window_best >= kStagnation * prev_window_best;
    }
    prev_window_best = window_best;
    window_best = std::numeric_limits<double>::infinity();
    return stagnant;
  }
};

enum class RunStatus { converged, stagnated, exhausted, vanished, defective };

struct Run {
  RunStatus status = RunStatus::exhausted;
  Sequence right;
  Sequence left;
  std::size_t iterations = 0;
};

Run lockstep(const Matrix<double>& a, const Matrix<double>& at, const Vector<double>& start, double scale,
             double tol, std::size_t max_iter) {
  Run run;
  run.right.init(a, start);
  run.left.init(at, start);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    run.iterations = it;
    if (!run.right.converged) run.right.step(scale, tol);
    if (!run.left.converged) run.left.step(scale, tol);
    if (run.right.vanished || run.left.vanished) {
      run.status = RunStatus::vanished;
      return run;
    }
    if (run.right.converged && run.left.converged) {
      run.status = RunStatus::converged;
      return run;
    }
    if (it % kWindow == 0) {
      const bool stuck_r = !run.right.converged && run.right.close_window();
      const bool stuck_l = !run.left.converged && run.left.close_window();
      if (stuck_r || stuck_l) {
        run.status = RunStatus::stagnated;
        return run;
      }
      // A defective dominant eigenvalue converges only sublinearly and keeps
      // the right and left vectors nearly orthogonal, at the level of the
      // square root of the residual.
      const double res = std::max(run.right.residual, run.left.residual);
      if (res <= kDefectiveProbeResidual &&
          eigen_cosine(run.right.v, run.left.v) <= kDefectiveFactor * std::sqrt(res)) {
        run.status = RunStatus::defective;
        return run;
      }
    }
  }
  run.status = RunStatus::exhausted;
  return run;
}

SpectralFailure failure(FailureKind kind, std::string detail, std::size_t iterations) {
  return SpectralFailure{kind, std::move(detail), iterations};
}

std::optional<SpectralFailure> run_failure(const Run& run, const char* label) {
  const std::string where = std::string(" (") + label + " start)";
  switch (run.status) {
    case RunStatus::converged: return std::nullopt;
    case RunStatus::stagnated:
      return failure(FailureKind::dominance_tie, "power iteration stagnated" + where, run.iterations);
    case RunStatus::exhausted:
      return failure(FailureKind::not_converged, "iteration budget exhausted" + where, run.iterations);
    case RunStatus::vanished:
      return failure(FailureKind::zero_matrix, "iterate vanished" + where, run.iterations);
    case RunStatus::defective:
      return failure(FailureKind::not_simple, "defective dominant eigenvalue" + where, run.iterations);
  }
  return std::nullopt;
}

bool close_rel(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b)); }

double residual_inf(const Matrix<double>& a, std::span<const double> x, double lambda) {
  const Vector<double> ax = multiply(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::fabs(ax[i] - lambda * x[i]));
  return r;
}

}  // namespace

void normalize_eigenvector(Vector<double>& x) {
  const double m = norm_inf(x);
  if (m == 0.0) return;
  for (double& e : x) e /= m;
  for (double e : x) {
    if (std::fabs(e) > kZeroCoordinateRel) {
      if (e < 0.0)
        for (double& f : x) f = -f;
      break;
    }
  }
}

EigenpairResult dominant_eigenpair(const Matrix<double>& a, double tol, std::size_t max_iter) {
  if (!a.is_square()) throw DimensionError("dominant eigenpair needs a square matrix");
  EigenpairResult out;
  const double scale = norm_inf(a);
  if (scale == 0.0) {
    out.failure = failure(FailureKind::zero_matrix, "zero matrix", 0);
    return out;
  }
  const Matrix<double> at = a.transposed();
  const std::size_t n = a.rows();

  Run main = lockstep(a, at, Vector<double>(n, 1.0), scale, tol, max_iter);
  std::size_t spent = main.iterations;
  if (main.status == RunStatus::stagnated) {
    Vector<double> bumped(n, 1.0);
    bumped[0] += kRestartBump;
    main = lockstep(a, at, bumped, scale, tol, max_iter);
    spent += main.iterations;
  }
  if (auto f = run_failure(main, "all-ones")) {
    f->iterations = spent;
    out.failure = std::move(f);
    return out;
  }

  Run probe = lockstep(a, at, probe_start(n), scale, tol, max_iter);
  spent += probe.iterations;
  if (auto f = run_failure(probe, "probe")) {
    f->iterations = spent;
    out.failure = std::move(f);
    return out;
  }

  // A start can miss the dominant direction on either side (e.g. the ones
  // vector is an eigenvector of A^T for a smaller eigenvalue); each side
  // keeps the larger modulus.
  auto pick = [](const Sequence& m, const Sequence& p) -> const Sequence& {
    return !close_rel(std::fabs(m.lambda), std::fabs(p.lambda), kLambdaAgreement) && std::fabs(p.lambda) > std::fabs(m.lambda)
               ? p
               : m;
  };
  const Sequence& right = pick(main.right, probe.right);
  const Sequence& left = pick(main.left, probe.left);
  const double lm = main.right.lambda;
  const double lp = probe.right.lambda;
  if (close_rel(std::fabs(lm), std::fabs(lp), kLambdaAgreement)) {
    if ((lm > 0) != (lp > 0)) {
      out.failure = failure(FailureKind::dominance_tie, "eigenvalues of equal modulus and opposite sign", spent);
      return out;
    }
    Vector<double> xm = main.right.v;
    Vector<double> xp = probe.right.v;
    normalize_eigenvector(xm);
    normalize_eigenvector(xp);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::fabs(xm[i] - xp[i]));
    if (diff > kDirectionAgreement) {
      out.failure = failure(FailureKind::not_simple, "two independent eigenvectors for the dominant eigenvalue", spent);
      return out;
    }
  }
  const double llm = main.left.lambda;
  const double llp = probe.left.lambda;
  if (close_rel(std::fabs(llm), std::fabs(llp), kLambdaAgreement) && (llm > 0) != (llp > 0)) {
    out.failure = failure(FailureKind::dominance_tie, "eigenvalues of equal modulus and opposite sign", spent);
    return out;
  }

  SpectralCertificate cert;
  cert.lambda = right.lambda;
  if (!close_rel(cert.lambda, left.lambda, kLambdaAgreement)) {
    out.failure = failure(FailureKind::transpose_mismatch, "A and A^T iterations disagree on the eigenvalue", spent);
    return out;
  }
  cert.x = right.v;
  cert.x_star = left.v;
  normalize_eigenvector(cert.x);
  normalize_eigenvector(cert.x_star);
  const double res = std::max(right.residual, left.residual);
  if (eigen_cosine(cert.x, cert.x_star) <= kDefectiveFactor * std::sqrt(std::max(res, tol))) {
    out.failure = failure(FailureKind::not_simple, "right and left eigenvectors are orthogonal", spent);
    return out;
  }
  // The one-sided Rayleigh quotients differ by about kappa * residual for a
  // non-normal A; iterate both vectors against the two-sided quotient until
  // they certify a common lambda.
  auto two_sided = [&] {
    const Vector<double> ax = multiply(a, std::span<const double>(cert.x));
    return dot(cert.x_star, ax) / dot(cert.x_star, cert.x);
  };
  cert.lambda = two_sided();
  for (std::size_t it = 0; it < kPolishSteps; ++it) {
    cert.residual_x = residual_inf(a, cert.x, cert.lambda);
    cert.residual_xstar = residual_inf(at, cert.x_star, cert.lambda);
    if (cert.residual_x <= tol * scale && cert.residual_xstar <= tol * scale) break;
    cert.x = multiply(a, std::span<const double>(cert.x));
    cert.x_star = multiply(at, std::span<const double>(cert.x_star));
    normalize_eigenvector(cert.x);
    normalize_eigenvector(cert.x_star);
    cert.lambda = two_sided();
    ++spent;
  }
  cert.iterations = spent;
  const Sequence& seq = right;
  if (seq.contraction && *seq.contraction > 0.0) {
    cert.dominance_gap = std::pow(*seq.contraction, 1.0 / static_cast<double>(kWindow));
  } else if (seq.steps > 1 && seq.first_residual > 0.0 && seq.residual > 0.0) {
    cert.dominance_gap =
        std::min(1.0, std::pow(seq.residual / seq.first_residual, 1.0 / static_cast<double>(seq.steps - 1)));
  }
  if (cert.residual_x > tol * scale || cert.residual_xstar > tol * scale) {
    out.failure = failure(FailureKind::not_converged, "certificate residual above tolerance on re-check", spent);
    return out;
  }
  out.certificate = std::move(cert);
  return out;
}

template <Scalar T>
Characteristic2x2<T> characteristic_2x2(const Matrix<T>& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("characteristic_2x2 needs a 2 x 2 matrix");
  T trace = a(0, 0) + a(1, 1);
  T d = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  T disc = trace * trace - 4 * d;
  return Characteristic2x2<T>{trace, d, disc};
}

template Characteristic2x2<double> characteristic_2x2(const Matrix<double>&);
template Characteristic2x2<Rational> characteristic_2x2(const Matrix<Rational>&);

namespace {

template <Scalar T>
SpectrumResult spectrum_impl(const Matrix<T>& a, double tol) {
  if (!a.is_square()) throw DimensionError("spectrum needs a square matrix");
  if (a.rows() > kMaxCompoundOrder) throw DimensionError("spectrum via compounds is limited to n <= 12");
  SpectrumResult out;
  const std::size_t n = a.rows();
  if (n == 1) {
    out.spectrum = Spectrum{{to_double(a(0, 0))}, "compound-ratios", {0.0}};
    return out;
  }
  if (n == 2) {
    const auto c = characteristic_2x2(a);
    const double tr = to_double(c.trace);
    const double disc = to_double(c.discriminant);
    if (sign_of(c.discriminant) < 0) {
      SpectrumFailure f;
      f.order = 1;
      f.cause = failure(FailureKind::dominance_tie, "complex conjugate pair", 0);
      f.complex_pair = Characteristic2x2<double>{tr, to_double(c.det), disc};
      out.failure = std::move(f);
      return out;
    }
    const double root = std::sqrt(disc);
    // Cancellation-free pair: the larger-modulus root first, the other from
    // the determinant.
    const double big = tr >= 0.0 ? (tr + root) / 2.0 : (tr - root) / 2.0;
    const double small = big != 0.0 ? to_double(c.det) / big : 0.0;
    out.spectrum = Spectrum{{big, small}, "characteristic-2x2", {}};
    return out;
  }

  Spectrum s;
  s.method = "compound-ratios";
  double prev = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    double rho = 0.0;
    if (j == n) {
      rho = to_double(det(a));
      s.residuals.push_back(0.0);
    } else {
      const auto r = dominant_eigenpair(to_double(compound(a, j)), tol);
      if (!r.ok()) {
        out.failure = SpectrumFailure{j, *r.failure, std::nullopt};
        return out;
      }
      rho = r.certificate->lambda;
      s.residuals.push_back(std::max(r.certificate->residual_x, r.certificate->residual_xstar));
    }
    s.eigenvalues.push_back(rho / prev);
    prev = rho;
    if (rho == 0.0 && j < n) {
      out.failure = SpectrumFailure{j, failure(FailureKind::zero_matrix, "zero spectral radius", 0), std::nullopt};
      return out;
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    if (std::fabs(s.eigenvalues[j]) > std::fabs(s.eigenvalues[j - 1]) * (1.0 + kProductAgreement)) {
      out.failure = SpectrumFailure{j + 1, failure(FailureKind::inconsistent, "ratios out of modulus order", 0),
                                    std::nullopt};
      return out;
    }
  }
  double product = 1.0;
  for (double v : s.eigenvalues) product *= v;
  const double d = to_double(det(a));
  if (std::fabs(product - d) > kProductAgreement * std::max(std::fabs(d), std::numeric_limits<double>::min())) {
    out.failure = SpectrumFailure{0, failure(FailureKind::inconsistent, "eigenvalue product differs from det", 0),
                                  std::nullopt};
    return out;
  }
  out.spectrum = std::move(s);
  return out;
}

}  // namespace

SpectrumResult spectrum_via_compounds(const Matrix<double>& a, double tol) { return spectrum_impl(a, tol); }
SpectrumResult spectrum_via_compounds(const Matrix<Rational>& a, double tol) { return spectrum_impl(a, tol); }

Vector<double> eigenvector_for(const Matrix<double>& a, double lambda, double tol) {
  if (!a.is_square()) throw DimensionError("eigenvector_for needs a square matrix");
  const std::size_t n = a.rows();
  const double scale = std::max(norm_inf(a), std::numeric_limits<double>::min());
  auto shifted = [&](double sigma) {
    Matrix<double> m = a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= sigma;
    return m;
  };
  double sigma = lambda;
  Matrix<double> m = shifted(sigma);
  Vector<double> x = probe_start(n);
  for (double offset = 1e-10 * scale;; offset *= 10.0) {
    try {
      (void)lu_solve(m, x);
      break;
    } catch (const SingularMatrixError&) {
      if (offset > 1e-5 * scale) throw ConvergenceError("shifted matrix stays singular near lambda");
      sigma = lambda + offset;
      m = shifted(sigma);
    }
  }
  constexpr int kMaxSteps = 200;
  for (int step = 0; step < kMaxSteps; ++step) {
    Vector<double> y = lu_solve(m, x);
    const double top = signed_max_abs(y);
    if (top == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
    const Vector<double> ax = multiply(a, std::span<const double>(x));
    const double mu = dot(x, ax) / dot(x, x);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::fabs(ax[i] - mu * x[i]));
    if (r <= tol * scale) {
      normalize_eigenvector(x);
      return x;
    }
  }
  throw ConvergenceError("inverse iteration did not converge");
}

}  // namespace evtp
