#include "evtp/classify/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/exterior/compound.hpp"
#include "evtp/signs/oracles.hpp"
#include "evtp/spectral/eigen.hpp"

namespace evtp {

Status route_status(const Verdict& v, const std::string& name) {
  for (const auto& r : v.routes)
    if (r.name == name) return r.status;
  return Status::unknown;
}

const Verdict& ClassificationReport::at(const std::string& name) const {
  for (const auto& [key, v] : verdicts)
    if (key == name) return v;
  throw std::out_of_range("no verdict named " + name);
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << '}';
  return s.str();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

template <Scalar T>
std::string fmt_scalar(const T& v) {
  if constexpr (is_exact_v<T>) {
    return to_string(v);
  } else {
    return fmt(v);
  }
}

Status both(Status a, Status b) {
  if (a == Status::no || b == Status::no) return Status::no;
  if (a == Status::yes && b == Status::yes) return Status::yes;
  return Status::unknown;
}

RouteResult spectral_route(std::string name, Status status, std::string detail) {
  return RouteResult{std::move(name), status, std::move(detail), status == Status::no};
}

RouteResult search_route(const SearchOutcome& s) {
  RouteResult r;
  r.name = "search";
  r.definite = s.periodic;
  std::ostringstream d;
  switch (s.kind) {
    case SearchKind::holds:
      r.status = Status::yes;
      d << "holds from k = " << *s.power_index << " through k = " << s.evaluated;
      break;
    case SearchKind::flicker:
      r.status = Status::unknown;
      d << "holds at " << join(s.flicker) << ", fails at k = " << s.last_failure.value_or(0) << ", then holds from k = "
        << *s.power_index;
      break;
    case SearchKind::fails:
      r.status = Status::no;
      d << (s.witness.empty() ? std::string("fails") : s.witness);
      break;
  }
  if (s.periodic) d << " (powers cycle from k = " << *s.period_start << " with period " << *s.period << ")";
  r.detail = d.str();
  return r;
}

// Yes needs every route to say yes; no needs a definite no and no yes;
// everything else is unknown with the reason recorded.
void combine(Verdict& v) {
  bool any_yes = false;
  bool any_no = false;
  bool all_yes = !v.routes.empty();
  bool definite_no = false;
  for (const auto& r : v.routes) {
    any_yes = any_yes || r.status == Status::yes;
    any_no = any_no || r.status == Status::no;
    all_yes = all_yes && r.status == Status::yes;
    definite_no = definite_no || (r.status == Status::no && r.definite);
  }
  std::string summary;
  for (const auto& r : v.routes) summary += (summary.empty() ? "" : "; ") + r.name + ": " + r.detail;
  if (all_yes) {
    v.status = Status::yes;
    v.reason = "all routes agree";
  } else if (any_yes && any_no) {
    v.status = Status::unknown;
    v.reason = "routes disagree: " + summary;
  } else if (any_no && definite_no) {
    v.status = Status::no;
    v.reason = summary;
    for (const auto& r : v.routes)
      if (r.status == Status::no && r.definite) {
        if (v.witness.empty()) v.witness = r.name + ": " + r.detail;
      }
  } else {
    v.status = Status::unknown;
    v.reason = "inconclusive: " + summary;
  }
}

void attach_search(Verdict& v, const SearchOutcome& s) {
  v.routes.push_back(search_route(s));
  v.search = s;
  v.tolerance_warning = v.tolerance_warning || s.tolerance_warning;
  if (s.kind == SearchKind::holds) v.power_index = s.power_index;
}

template <Scalar T>
std::string complex_pair_witness(const Matrix<T>& a) {
  if (a.rows() != 2) return {};
  const auto c = characteristic_2x2(a);
  if (sign_of(c.discriminant) >= 0) return {};
  return "complex pair: trace " + fmt_scalar(c.trace) + ", det " + fmt_scalar(c.det) + ", discriminant " +
         fmt_scalar(c.discriminant);
}

std::string certificate_text(const SpectralCertificate& c) {
  return "lambda = " + fmt(c.lambda) + ", residuals " + fmt(c.residual_x) + " / " + fmt(c.residual_xstar);
}

std::string partitions_text(const std::vector<SignPartition>& parts) {
  std::string s;
  for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? "; " : "") + ("J" + std::to_string(j + 1) + " = ") + join(parts[j].J);
  return s;
}

std::string partitions_key(const std::vector<SignPartition>& parts) {
  std::string s;
  for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? ";" : "") + join(parts[j].J);
  return s;
}

template <Scalar T>
bool nilpotent(const Matrix<T>& a) {
  const Matrix<T> p = mat_pow(a, static_cast<unsigned>(a.rows()));
  if constexpr (is_exact_v<T>) {
    return max_abs(p) == 0.0 && std::all_of(p.entries().begin(), p.entries().end(), [](const T& v) { return v == 0; });
  } else {
    const double m = max_abs(a);
    return max_abs(p) <= 1e-12 * std::pow(m, static_cast<double>(a.rows()));
  }
}

void require_compound_size(std::size_t n) {
  if (n > kMaxCompoundOrder) throw DimensionError("compound-based classification is limited to n <= 12");
}

}  // namespace

template <Scalar T>
Verdict classify_ep(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  Verdict v;
  v.basis = "strong Perron-Frobenius property of A and A^T <=> eventually positive; two consecutive positive powers";
  const Matrix<double> ad = to_double(a);
  const PropertyCheck pa = check_strong_pf(ad, opt.tol);
  const PropertyCheck pt = check_strong_pf(ad.transposed(), opt.tol);
  v.routes.push_back(spectral_route("spectral", both(pa.status, pt.status), "A: " + pa.reason + "; A^T: " + pt.reason));
  if (pa.certificate) v.certificates.push_back(*pa.certificate);
  if (pt.certificate) v.certificates.push_back(*pt.certificate);
  attach_search(v, power_search(a, opt.k_max, false, positive_predicate<T>(opt.sign_tol)));
  combine(v);
  if (v.status == Status::yes) {
    v.certificate_summary = certificate_text(v.certificates[0]) + "; x > 0 and x* > 0";
    if (v.search->anchor) v.certificate_summary += "; A^k > 0 and A^(k+1) > 0 at k = " + std::to_string(*v.search->anchor);
  }
  if (v.status == Status::no && v.witness.empty()) v.witness = pa.status == Status::no ? pa.reason : pt.reason;
  return v;
}

template <Scalar T>
Verdict classify_en(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  Verdict v;
  v.basis = "power search only; Perron-Frobenius property of A and A^T is necessary unless nilpotent";
  const SearchOutcome s = power_search(a, opt.k_max, false, nonnegative_predicate<T>(opt.sign_tol));
  attach_search(v, s);
  const bool nil = nilpotent(a);
  Status necessary = Status::yes;
  std::string necessary_detail = "nilpotent";
  if (!nil) {
    const Matrix<double> ad = to_double(a);
    const PropertyCheck pa = check_pf(ad, opt.tol);
    const PropertyCheck pt = check_pf(ad.transposed(), opt.tol);
    necessary = both(pa.status, pt.status);
    necessary_detail = "A: " + pa.reason + "; A^T: " + pt.reason;
    if (pa.certificate) v.certificates.push_back(*pa.certificate);
  }
  v.routes.push_back(spectral_route("necessary-condition", necessary, necessary_detail));

  if (s.kind == SearchKind::flicker) {
    v.status = Status::unknown;
    v.reason = "nonnegativity flickers: " + v.routes[0].detail;
  } else if (s.kind == SearchKind::holds) {
    if (necessary == Status::no) {
      v.status = Status::unknown;
      v.reason = "search holds but the Perron-Frobenius condition fails: " + necessary_detail;
    } else {
      v.status = Status::yes;
      v.finite_evidence = !s.periodic;
      v.reason = v.routes[0].detail;
      v.certificate_summary = nil ? "nilpotent" : "A^k >= 0 on the observed tail";
      if (v.finite_evidence) v.certificate_summary += " (finite evidence; no spectral converse)";
    }
  } else {
    v.status = Status::no;
    v.finite_evidence = !s.periodic && necessary != Status::no;
    v.witness = necessary == Status::no ? necessary_detail : s.witness;
    v.reason = v.routes[0].detail;
  }
  return v;
}

template <Scalar T>
Verdict classify_esjs(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  Verdict v;
  v.basis = "signature equality <=> eventually SJS; D A D eventually positive";
  const PropertyCheck se = check_signature_equality(to_double(a), opt.tol);
  v.routes.push_back(spectral_route("spectral", se.status, se.reason));
  if (se.certificate) v.certificates.push_back(*se.certificate);
  if (se.partition) {
    v.partitions.push_back(*se.partition);
    const Verdict ep = classify_ep(signature_conjugate(a, *se.partition), opt);
    v.routes.push_back(spectral_route("constructive", ep.status, "D A D with J = " + join(se.partition->J) + ": " + ep.reason));
  }
  const SearchOutcome s = power_search(a, opt.k_max, false, sjs_predicate<T>(opt.sign_tol));
  attach_search(v, s);
  if (se.partition && s.kind == SearchKind::holds && s.key != join(se.partition->J)) {
    v.routes.back().status = Status::unknown;
    v.routes.back().detail += "; tail partition " + s.key + " differs from the spectral partition";
  }
  combine(v);
  if (v.status == Status::yes) v.certificate_summary = certificate_text(se.certificate.value()) + "; J = " + join(se.partition->J);
  return v;
}

template <Scalar T>
Verdict classify_estp(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  require_compound_size(a.rows());
  Verdict v;
  v.basis = "GK property of A and A^T <=> every compound eventually positive <=> ESTP";
  const CompoundPropertyCheck gk = check_gk_property(a, opt.tol);
  const CompoundPropertyCheck gkt = check_gk_property_transposed(a, opt.tol);
  v.routes.push_back(spectral_route("spectral", both(gk.status, gkt.status), "A: " + gk.reason + "; A^T: " + gkt.reason));
  for (const auto& level : gk.levels)
    if (level.certificate) v.certificates.push_back(*level.certificate);

  Status compound_status = Status::yes;
  std::string compound_detail;
  std::size_t k_max_j = 0;
  std::vector<std::size_t> kj;
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    const Verdict ep = classify_ep(compound(a, j), opt);
    if (ep.status == Status::no) {
      compound_status = Status::no;
      compound_detail = "order " + std::to_string(j) + " is not eventually positive: " + ep.reason;
      break;
    }
    if (ep.status == Status::unknown) {
      compound_status = Status::unknown;
      compound_detail = "order " + std::to_string(j) + ": " + ep.reason;
      continue;
    }
    kj.push_back(*ep.power_index);
    k_max_j = std::max(k_max_j, *ep.power_index);
  }
  if (compound_status == Status::yes) compound_detail = "power indices per order " + join(kj);
  v.routes.push_back(spectral_route("compound-ep", compound_status, compound_detail));

  attach_search(v, power_search(a, opt.k_max, true, stp_predicate<T>(opt.sign_tol)));
  combine(v);
  if (v.status == Status::yes) {
    v.power_index = k_max_j;
    v.certificate_summary = "strong PF at every compound order of A and A^T; k0 = max k_j = " + std::to_string(k_max_j);
    if (v.search->power_index && *v.search->power_index != k_max_j)
      v.certificate_summary += " (direct search observed " + std::to_string(*v.search->power_index) + ")";
  }
  if (v.status == Status::no) {
    const std::string pair = complex_pair_witness(a);
    if (!pair.empty()) v.witness = pair;
  }
  return v;
}

template <Scalar T>
Verdict classify_estjs(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  require_compound_size(a.rows());
  Verdict v;
  v.basis = "total signature equality <=> every compound eventually SJS <=> ESTJS";
  const CompoundPropertyCheck tse = check_tse_property(a, opt.tol);
  v.routes.push_back(spectral_route("spectral", tse.status, tse.reason));
  std::vector<SignPartition> parts;
  for (const auto& level : tse.levels) {
    if (level.certificate) v.certificates.push_back(*level.certificate);
    if (level.partition) parts.push_back(*level.partition);
  }

  Status compound_status = Status::yes;
  std::string compound_detail = "every compound eventually SJS";
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    const Verdict e = classify_esjs(compound(a, j), opt);
    if (e.status == Status::no) {
      compound_status = Status::no;
      compound_detail = "order " + std::to_string(j) + " is not eventually SJS: " + e.reason;
      break;
    }
    if (e.status == Status::unknown) {
      compound_status = Status::unknown;
      compound_detail = "order " + std::to_string(j) + ": " + e.reason;
    }
  }
  v.routes.push_back(spectral_route("compound-esjs", compound_status, compound_detail));

  const SearchOutcome s = power_search(a, opt.k_max, true, stjs_predicate<T>(opt.sign_tol));
  attach_search(v, s);
  if (tse.status == Status::yes && s.kind == SearchKind::holds && s.key != partitions_key(parts)) {
    v.routes.back().status = Status::unknown;
    v.routes.back().detail += "; tail partitions " + s.key + " differ from the spectral partitions";
  }
  combine(v);
  if (v.status == Status::yes) {
    v.partitions = parts;
    v.certificate_summary = partitions_text(parts);
  }
  return v;
}

template <Scalar T>
Verdict classify_eventually_p(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  Verdict v;
  v.basis = "power search of principal minors; positive simple spectrum => ESTJS and total signature equality";
  const T d = det(a);
  const double zt = is_exact_v<T> ? 0.0 : opt.sign_tol * std::pow(max_abs(a), static_cast<double>(a.rows()));
  const int ds = sign_of(d, zt);
  v.routes.push_back(spectral_route("determinant", ds > 0 ? Status::yes : Status::no, "det(A) = " + fmt_scalar(d)));
  if (ds <= 0) {
    v.status = Status::no;
    v.witness = ds == 0 ? "det(A) = 0, so every power is singular"
                        : "det(A) = " + fmt_scalar(d) + " < 0, so every odd power has a negative determinant";
    v.reason = v.witness;
    return v;
  }
  const SearchOutcome s = power_search(a, opt.k_max, true, p_matrix_predicate<T>(opt.sign_tol));
  attach_search(v, s);
  if (s.kind == SearchKind::flicker) {
    v.status = Status::unknown;
    v.reason = "P-matrix property flickers: " + v.routes.back().detail;
    return v;
  }
  if (s.kind == SearchKind::fails) {
    v.status = Status::no;
    v.finite_evidence = !s.periodic;
    v.witness = s.witness;
    v.reason = v.routes.back().detail;
    return v;
  }
  v.status = Status::yes;
  v.finite_evidence = !s.periodic;
  v.reason = v.routes.back().detail;
  v.certificate_summary = "principal minors of A^k positive on the observed tail";

  if (a.rows() <= kMaxCompoundOrder) {
    const SpectrumResult sp = spectrum_via_compounds(a, opt.tol);
    bool positive_distinct = sp.ok();
    if (sp.ok()) {
      const auto& ev = sp.spectrum->eigenvalues;
      for (std::size_t i = 0; i < ev.size(); ++i) {
        positive_distinct = positive_distinct && ev[i] > 0.0;
        if (i > 0) positive_distinct = positive_distinct && ev[i] < ev[i - 1] * (1.0 - 1e-9);
      }
    }
    if (positive_distinct) {
      const Verdict e = classify_estjs(a, opt);
      v.routes.push_back(RouteResult{"positive-spectrum-estjs", e.status, e.reason, false});
      const CompoundPropertyCheck tse = check_tse_property(a, opt.tol);
      v.routes.push_back(RouteResult{"positive-spectrum-tse", tse.status, tse.reason, false});
      if (e.status != Status::yes || tse.status != Status::yes) {
        v.status = Status::unknown;
        v.reason = "positive simple spectrum but the ESTJS / TSE cross-check did not confirm";
      } else {
        v.partitions = e.partitions;
        v.certificate_summary += "; positive simple spectrum, ESTJS and TSE confirmed";
      }
    }
  }
  return v;
}

template <Scalar T>
ShiftCheck shift_check(const Matrix<T>& a, double alpha, double tol) {
  if (!(alpha > 0.0)) throw PreconditionError("shift must be positive");
  if (!a.is_square()) throw DimensionError("shift check needs a square matrix");
  Matrix<T> shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) += T(alpha);
  ShiftCheck out;
  out.gk_before = check_gk_property(a, tol).status;
  out.gk_after = check_gk_property(shifted, tol).status;
  out.holds = out.gk_before != Status::yes || out.gk_after == Status::yes;
  return out;
}

template <Scalar T>
Matrix<T> conjugate(const Matrix<T>& a, const Matrix<T>& s) {
  return multiply(multiply(inverse(s), a), s);
}

namespace {

std::string minor_witness_text(const std::optional<MinorWitness>& w) {
  if (!w) return {};
  return "minor of order " + std::to_string(w->order) + " rows " + join(w->rows) + " cols " + join(w->cols) + " = " +
         fmt(w->value);
}

Verdict static_verdict(bool holds, std::string basis, std::string witness, bool warning = false) {
  Verdict v;
  v.status = holds ? Status::yes : Status::no;
  v.basis = std::move(basis);
  if (!holds) v.witness = std::move(witness);
  v.tolerance_warning = warning;
  return v;
}

template <Scalar T>
std::vector<std::pair<std::string, Verdict>> static_verdicts(const Matrix<T>& a, const ClassifyOptions& opt) {
  std::vector<std::pair<std::string, Verdict>> out;
  const double rel = opt.sign_tol;
  const double zt = zero_tolerance_for(a, rel);

  const OracleResult tp = is_tp(a, rel);
  out.emplace_back("TP", static_verdict(tp.holds, "all minors >= 0", minor_witness_text(tp.witness), tp.tolerance_warning));
  const OracleResult stp = is_stp(a, rel);
  out.emplace_back("STP", static_verdict(stp.holds, "all minors > 0", minor_witness_text(stp.witness), stp.tolerance_warning));
  const OscillatoryResult osc = is_oscillatory(a, opt.k_max, rel);
  {
    Verdict v = static_verdict(osc.holds, "TP with an STP power", osc.tp.holds ? "no STP power up to k_max" : "not TP");
    if (osc.k) {
      v.power_index = osc.k;
      v.certificate_summary = "A^" + std::to_string(*osc.k) + " is STP";
    }
    out.emplace_back("oscillatory", v);
  }
  const OracleResult p = is_p_matrix(a, rel);
  out.emplace_back("P", static_verdict(p.holds, "all principal minors > 0", minor_witness_text(p.witness), p.tolerance_warning));
  // A nonzero entry inside the zero band makes the sign pattern ambiguous.
  bool entry_near_zero = false;
  for (const auto& e : a.entries()) entry_near_zero = entry_near_zero || (e != 0 && std::fabs(to_double(e)) <= zt);
  const auto js = detect_js(a, zt);
  {
    Verdict v = static_verdict(js.has_value(), "sign pattern factors through a bipartition", "inconsistent sign cycle",
                               entry_near_zero);
    if (js) {
      v.partitions.push_back(*js);
      v.certificate_summary = "J = " + join(js->J);
    }
    out.emplace_back("JS", v);
  }
  const auto sjs = detect_sjs(a, zt);
  {
    Verdict v = static_verdict(sjs.has_value(), "strict sign pattern factors through a bipartition",
                               "zero entry or inconsistent sign", entry_near_zero);
    if (sjs) {
      v.partitions.push_back(*sjs);
      v.certificate_summary = "J = " + join(sjs->J);
    }
    out.emplace_back("SJS", v);
  }
  const OracleResult tsa = is_tsa(a, rel);
  out.emplace_back("TSA", static_verdict(tsa.holds, "checkerboard transform is TP",
                                         minor_witness_text(tsa.witness) + (tsa.witness ? " (checkerboard)" : ""),
                                         tsa.tolerance_warning));
  out.emplace_back("monotone", static_verdict(is_monotone(a), "invertible with nonnegative inverse",
                                              "singular or inverse has a negative entry"));
  if (a.rows() <= kMaxCompoundOrder) {
    const auto stjs = detect_stjs(a, rel);
    Verdict v = static_verdict(stjs.has_value(), "every compound is SJS", "some compound is not SJS");
    if (stjs) {
      v.partitions = *stjs;
      v.certificate_summary = partitions_text(*stjs);
    }
    out.emplace_back("STJS", v);
  } else {
    Verdict v;
    v.reason = "compound-based checks are limited to n <= 12";
    out.emplace_back("STJS", v);
  }
  return out;
}

template <Scalar T>
Verdict guarded(const std::string& name, const Matrix<T>& a, const ClassifyOptions& opt) {
  try {
    return classify_property(name, a, opt);
  } catch (const DimensionError& e) {
    Verdict v;
    v.reason = e.what();
    return v;
  }
}

}  // namespace

template <Scalar T>
Verdict classify_property(const std::string& name, const Matrix<T>& a, const ClassifyOptions& opt) {
  if (name == "EP") return classify_ep(a, opt);
  if (name == "EN") return classify_en(a, opt);
  if (name == "ESJS") return classify_esjs(a, opt);
  if (name == "ESTP") return classify_estp(a, opt);
  if (name == "ESTJS") return classify_estjs(a, opt);
  if (name == "eventually_P") return classify_eventually_p(a, opt);
  throw std::invalid_argument("unknown property '" + name + "' (expected EP, EN, ESJS, ESTP, ESTJS, eventually_P)");
}

template <Scalar T>
ClassificationReport classify(const Matrix<T>& a, const ClassifyOptions& opt) {
  if (!a.is_square()) throw DimensionError("classification needs a square matrix");
  ClassificationReport r;
  r.backend = is_exact_v<T> ? "exact" : "float";
  r.n = a.rows();
  r.options = opt;

  r.verdicts = static_verdicts(a, opt);
  if constexpr (is_exact_v<T>) {
    const auto fl = static_verdicts(to_double(a), opt);
    for (std::size_t i = 0; i < fl.size(); ++i) {
      if (fl[i].second.status != r.verdicts[i].second.status) {
        r.verdicts[i].second.tolerance_warning = true;
        r.warnings.push_back("float backend disagrees on " + fl[i].first + " (exact result kept)");
      }
    }
  }
  for (const auto& [name, v] : r.verdicts)
    if (v.tolerance_warning) r.warnings.push_back(name + ": a decisive minor lies near the zero threshold");

  for (const char* name : {"EP", "EN", "ESJS", "ESTP", "ESTJS", "eventually_P"}) r.verdicts.emplace_back(name, guarded(name, a, opt));
  for (const auto& [name, v] : r.verdicts)
    if (v.search && v.search->tolerance_warning) r.warnings.push_back(name + ": a power entry lies near the zero threshold");

  const Verdict& estp = r.at("ESTP");
  const bool estp_yes = estp.status == Status::yes;
  auto implication = [&](std::string name, bool premise, bool conclusion, std::string detail) {
    r.cross_checks.push_back(CrossCheck{std::move(name), premise, !premise || conclusion, std::move(detail)});
  };
  implication("ESTP => EP", estp_yes, r.at("EP").status == Status::yes, std::string("EP is ") + to_string(r.at("EP").status));
  {
    const Verdict& e = r.at("ESTJS");
    bool full = e.status == Status::yes && !e.partitions.empty();
    for (const auto& p : e.partitions) full = full && p.J.size() == p.n;
    implication("ESTP => ESTJS with J = [n] at every order", estp_yes, full,
                std::string("ESTJS is ") + to_string(e.status) + (e.partitions.empty() ? "" : ", " + partitions_text(e.partitions)));
  }
  implication("ESTP => eventually P", estp_yes, r.at("eventually_P").status == Status::yes,
              std::string("eventually P is ") + to_string(r.at("eventually_P").status));
  implication("STP => oscillatory", r.at("STP").status == Status::yes, r.at("oscillatory").status == Status::yes,
              std::string("oscillatory is ") + to_string(r.at("oscillatory").status));
  if (estp_yes) {
    const Verdict cube = classify_estp(mat_pow(a, 3), opt);
    implication("ESTP A and commuting B = A^2 => AB = A^3 ESTP", true, cube.status == Status::yes,
                std::string("ESTP(A^3) is ") + to_string(cube.status));
  } else {
    implication("ESTP A and commuting B = A^2 => AB = A^3 ESTP", false, true, "premise does not hold");
  }
  return r;
}

#define EVTP_INSTANTIATE(T)                                                                   \
  template Verdict classify_ep(const Matrix<T>&, const ClassifyOptions&);                     \
  template Verdict classify_en(const Matrix<T>&, const ClassifyOptions&);                     \
  template Verdict classify_esjs(const Matrix<T>&, const ClassifyOptions&);                   \
  template Verdict classify_estp(const Matrix<T>&, const ClassifyOptions&);                   \
  template Verdict classify_estjs(const Matrix<T>&, const ClassifyOptions&);                  \
  template Verdict classify_eventually_p(const Matrix<T>&, const ClassifyOptions&);           \
  template ShiftCheck shift_check(const Matrix<T>&, double, double);                          \
  template Matrix<T> conjugate(const Matrix<T>&, const Matrix<T>&);                           \
  template ClassificationReport classify(const Matrix<T>&, const ClassifyOptions&);           \
  template Verdict classify_property(const std::string&, const Matrix<T>&, const ClassifyOptions&);

EVTP_INSTANTIATE(double)
EVTP_INSTANTIATE(Rational)

#undef EVTP_INSTANTIATE

}  // namespace evtp
