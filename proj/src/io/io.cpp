#include "evtp/io/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "evtp/classify/generators.hpp"
#include "evtp/core/error.hpp"
#include "evtp/exterior/compound.hpp"
#include "evtp/spectral/eigen.hpp"

namespace evtp::io {

using evtp::to_string;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string at(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
}

template <Scalar T>
T parse_token(std::string_view token, std::size_t row, std::size_t col) {
  token = trim(token);
  if (token.empty()) throw InputError(at(row, col) + ": empty entry");
  try {
    if constexpr (is_exact_v<T>) {
      return parse_rational(token);
    } else {
      if (token.find('/') != std::string_view::npos) return parse_rational(token).get_d();
      std::string_view body = token.front() == '+' ? token.substr(1) : token;
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) throw std::invalid_argument("");
      return v;
    }
  } catch (const std::invalid_argument&) {
    throw InputError(at(row, col) + ": cannot parse '" + std::string(token) + "'");
  }
}

template <Scalar T>
Matrix<T> assemble(std::vector<std::vector<T>>& rows) {
  if (rows.empty()) throw InputError("empty matrix");
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw InputError("ragged rows: row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, row 1 has " + std::to_string(n));
  }
  if (rows.size() != n)
    throw InputError("matrix is not square: " + std::to_string(rows.size()) + " rows, " + std::to_string(n) +
                     " columns");
  return Matrix<T>::from_rows(rows);
}

template <Scalar T>
Matrix<T> parse_csv(std::string_view text) {
  std::vector<std::vector<T>> rows;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (trim(line).empty()) continue;
    std::vector<T> row;
    std::size_t col = 0;
    for (;;) {
      const std::size_t comma = line.find(',');
      row.push_back(parse_token<T>(line.substr(0, comma), rows.size(), col++));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return assemble(rows);
}

template <Scalar T>
Matrix<T> parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw InputError("JSON input must be an object with a \"rows\" array");
  std::vector<std::vector<T>> rows;
  const json& jr = doc["rows"];
  for (std::size_t i = 0; i < jr.size(); ++i) {
    if (!jr[i].is_array()) throw InputError("row " + std::to_string(i + 1) + " is not an array");
    std::vector<T> row;
    for (std::size_t j = 0; j < jr[i].size(); ++j) {
      const json& e = jr[i][j];
      if (e.is_string()) {
        row.push_back(parse_token<T>(e.get<std::string>(), i, j));
      } else if (e.is_number_integer()) {
        if constexpr (is_exact_v<T>) {
          row.push_back(parse_rational(e.dump()));
        } else {
          row.push_back(e.get<double>());
        }
      } else if (e.is_number_float()) {
        if constexpr (is_exact_v<T>) {
          throw InputError(at(i, j) + ": bare JSON float " + e.dump() +
                           " is not accepted by the exact backend; write it as a string");
        } else {
          row.push_back(e.get<double>());
        }
      } else {
        throw InputError(at(i, j) + ": expected a number or a numeric string, got " + e.dump());
      }
    }
    rows.push_back(std::move(row));
  }
  return assemble(rows);
}

json optional_index(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json certificate_to_json(const SpectralCertificate& c) {
  json out = {{"lambda", c.lambda},
              {"x", c.x},
              {"x_star", c.x_star},
              {"residual_x", c.residual_x},
              {"residual_xstar", c.residual_xstar},
              {"iterations", c.iterations}};
  out["dominance_gap"] = c.dominance_gap ? json(*c.dominance_gap) : json(nullptr);
  return out;
}

json search_to_json(const SearchOutcome& s) {
  return {{"kind", to_string(s.kind)},
          {"power_index", optional_index(s.power_index)},
          {"flicker", s.flicker},
          {"anchor", optional_index(s.anchor)},
          {"evaluated", s.evaluated},
          {"periodic", s.periodic},
          {"period_start", optional_index(s.period_start)},
          {"period", optional_index(s.period)},
          {"last_failure", optional_index(s.last_failure)},
          {"witness", s.witness},
          {"tolerance_warning", s.tolerance_warning}};
}

json config_to_json(const RunConfig& c) {
  return {{"backend", to_string(c.backend)}, {"tol", c.tol}, {"sign_tol", c.sign_tol}, {"k_max", c.k_max},
          {"seed", c.seed}};
}

bool any_unknown(const ClassificationReport& r) {
  for (const auto& [name, v] : r.verdicts)
    if (v.status == Status::unknown) return true;
  return false;
}

template <Scalar T>
json spectrum_to_json(const Matrix<T>& a, double tol, bool& undecided) {
  const SpectrumResult r = spectrum_via_compounds(a, tol);
  json out;
  if (r.spectrum) {
    out["status"] = "ok";
    out["eigenvalues"] = r.spectrum->eigenvalues;
    out["method"] = r.spectrum->method;
    out["residuals"] = r.spectrum->residuals;
    return out;
  }
  undecided = true;
  const SpectrumFailure& f = *r.failure;
  out["status"] = "unknown";
  json failure = {{"order", f.order}, {"kind", to_string(f.cause.kind)}, {"detail", f.cause.detail}};
  if (f.complex_pair)
    failure["complex_pair"] = {{"trace", f.complex_pair->trace},
                               {"det", f.complex_pair->det},
                               {"discriminant", f.complex_pair->discriminant}};
  out["failure"] = failure;
  return out;
}

template <Scalar T>
json run_on_matrix(const Command& cmd, const Matrix<T>& a, const RunConfig& config, bool& undecided) {
  json out = {{"command", cmd.text}};
  switch (cmd.kind) {
    case Command::Kind::classify: {
      const ClassificationReport report = classify(a, config.options());
      json body = report_to_json(report);
      body["input"] = {{"n", a.rows()}, {"rows", matrix_to_json(a)}};
      body["config"] = config_to_json(config);
      out.update(body);
      undecided = undecided || any_unknown(report);
      break;
    }
    case Command::Kind::compound:
      out["j"] = cmd.j;
      out["rows"] = matrix_to_json(compound(a, cmd.j));
      break;
    case Command::Kind::spectrum:
      out.update(spectrum_to_json(a, config.tol, undecided));
      break;
    case Command::Kind::power_index: {
      const Verdict v = classify_property(cmd.property, a, config.options());
      out["property"] = cmd.property;
      out["config"] = config_to_json(config);
      out["verdict"] = verdict_to_json(v);
      undecided = undecided || v.status == Status::unknown;
      break;
    }
    case Command::Kind::generate:
      break;
  }
  return out;
}

}  // namespace

const char* to_string(Backend backend) { return backend == Backend::exact ? "exact" : "float"; }

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::exact;
  if (text == "float") return Backend::floating;
  throw InputError("unknown backend '" + std::string(text) + "' (exact or float)");
}

Command parse_command(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw InputError("empty command");
  Command c;
  c.text = std::string(trim(text));
  auto count = [&](std::size_t expected) {
    if (words.size() != expected) throw InputError("wrong number of arguments in command '" + c.text + "'");
  };
  auto number = [&](const std::string& w) -> std::size_t {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size() || v == 0)
      throw InputError("expected a positive integer in command '" + c.text + "', got '" + w + "'");
    return v;
  };
  const std::string& head = words.front();
  if (head == "classify") {
    count(1);
    c.kind = Command::Kind::classify;
  } else if (head == "spectrum") {
    count(1);
    c.kind = Command::Kind::spectrum;
  } else if (head == "compound") {
    count(2);
    c.kind = Command::Kind::compound;
    c.j = number(words[1]);
  } else if (head == "power-index") {
    count(2);
    c.kind = Command::Kind::power_index;
    c.property = words[1];
    static const char* names[] = {"EP", "EN", "ESJS", "ESTP", "ESTJS", "eventually_P"};
    bool known = false;
    for (const char* nm : names) known = known || c.property == nm;
    if (!known)
      throw InputError("unknown property '" + c.property + "' (EP, EN, ESJS, ESTP, ESTJS, eventually_P)");
  } else if (head == "generate") {
    count(3);
    c.kind = Command::Kind::generate;
    c.generator = words[1];
    c.n = number(words[2]);
  } else {
    throw InputError("unknown command '" + head + "' (classify, compound J, spectrum, power-index PROP, generate CLASS N)");
  }
  return c;
}

void validate(const RunConfig& config) {
  if (!(config.tol > 0.0)) throw InputError("--tol must be positive");
  if (!(config.sign_tol >= 0.0)) throw InputError("--sign-tol must be nonnegative");
  if (config.k_max < 2) throw InputError("--kmax must be at least 2");
  if (config.commands.empty()) throw InputError("no command given");
}

template <Scalar T>
Matrix<T> parse_matrix(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) return parse_json<T>(body);
  return parse_csv<T>(text);
}

template <Scalar T>
json matrix_to_json(const Matrix<T>& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if constexpr (is_exact_v<T>) {
        row.push_back(to_string(a(i, j)));
      } else {
        row.push_back(a(i, j));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json verdict_to_json(const Verdict& v) {
  json out = {{"status", to_string(v.status)},
              {"power_index", optional_index(v.power_index)},
              {"theorem_basis", v.basis},
              {"certificate_summary", v.certificate_summary},
              {"witness", v.witness},
              {"reason", v.reason},
              {"finite_evidence", v.finite_evidence},
              {"tolerance_warning", v.tolerance_warning}};
  json routes = json::array();
  for (const RouteResult& r : v.routes)
    routes.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}, {"definite", r.definite}});
  out["routes"] = routes;
  json certs = json::array();
  for (const SpectralCertificate& c : v.certificates) certs.push_back(certificate_to_json(c));
  out["certificates"] = certs;
  json parts = json::array();
  for (const SignPartition& p : v.partitions) parts.push_back(p.J);
  out["partitions"] = parts;
  out["search"] = v.search ? search_to_json(*v.search) : json(nullptr);
  return out;
}

json report_to_json(const ClassificationReport& report) {
  json verdicts = json::object();
  for (const auto& [name, v] : report.verdicts) verdicts[name] = verdict_to_json(v);
  json checks = json::array();
  for (const CrossCheck& c : report.cross_checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
  return {{"backend", report.backend}, {"verdicts", verdicts}, {"cross_checks", checks}, {"warnings", report.warnings}};
}

RunResult execute(const RunConfig& config, std::optional<std::string_view> input) {
  validate(config);
  bool needs_matrix = false;
  for (const Command& c : config.commands) needs_matrix = needs_matrix || c.kind != Command::Kind::generate;
  if (needs_matrix && !input) throw InputError("no input matrix given");

  std::optional<Matrix<Rational>> exact;
  std::optional<Matrix<double>> floating;
  if (needs_matrix) {
    if (config.backend == Backend::exact) {
      exact = parse_matrix<Rational>(*input);
    } else {
      floating = parse_matrix<double>(*input);
    }
  }

  Rng rng(config.seed);
  bool undecided = false;
  std::vector<json> docs;
  try {
    for (const Command& c : config.commands) {
      if (c.kind == Command::Kind::generate) {
        const Matrix<Rational> g = generate(c.generator, c.n, rng);
        docs.push_back({{"command", c.text}, {"generator", c.generator}, {"n", c.n}, {"seed", config.seed},
                        {"rows", matrix_to_json(g)}});
      } else if (exact) {
        docs.push_back(run_on_matrix(c, *exact, config, undecided));
      } else {
        docs.push_back(run_on_matrix(c, *floating, config, undecided));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  RunResult result;
  result.exit_code = undecided ? 3 : 0;
  result.document = docs.size() == 1 ? docs.front() : json{{"results", docs}};
  return result;
}

template Matrix<double> parse_matrix<double>(std::string_view);
template Matrix<Rational> parse_matrix<Rational>(std::string_view);
template json matrix_to_json<double>(const Matrix<double>&);
template json matrix_to_json<Rational>(const Matrix<Rational>&);

}  // namespace evtp::io
