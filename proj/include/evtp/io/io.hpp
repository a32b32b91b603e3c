#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evtp/classify/classify.hpp"
#include "evtp/core/matrix.hpp"
#include "json.hpp"

namespace evtp::io {

using nlohmann::json;

/// Malformed input or configuration. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Backend { exact, floating };

const char* to_string(Backend backend);
Backend parse_backend(std::string_view text);

struct Command {
  enum class Kind { classify, compound, spectrum, power_index, generate };
  Kind kind = Kind::classify;
  std::size_t j = 0;         // compound
  std::string property;      // power-index
  std::string generator;     // generate
  std::size_t n = 0;         // generate
  std::string text;          // as given on the command line
};

/// "classify", "compound 2", "spectrum", "power-index ESTP", "generate stp 4".
Command parse_command(std::string_view text);

struct RunConfig {
  Backend backend = Backend::exact;
  double tol = kDefaultTol;
  double sign_tol = kDefaultSignTolerance;
  std::size_t k_max = 64;
  std::vector<Command> commands;
  std::optional<std::string> output;
  std::uint64_t seed = 0;

  ClassifyOptions options() const { return {tol, sign_tol, k_max}; }
};

/// tol > 0, sign_tol >= 0, k_max >= 2, at least one command.
void validate(const RunConfig& config);

/// CSV rows of numbers, or a JSON object {"rows": [[...], ...]} whose
/// entries are strings ("5.6", "-7/3") or numbers. JSON floats are refused
/// in the exact backend. The result is square; errors name the 1-based row
/// and column.
template <Scalar T>
Matrix<T> parse_matrix(std::string_view text);

/// Rows of strings in exact backend, rows of numbers in float backend.
template <Scalar T>
json matrix_to_json(const Matrix<T>& a);

json report_to_json(const ClassificationReport& report);
json verdict_to_json(const Verdict& v);

struct RunResult {
  json document;
  int exit_code = 0;  // 0 decided, 3 some requested verdict unknown
};

/// Runs every command on the matrix text (ignored by "generate"; may be
/// empty when only generators are requested). A single command emits its
/// own document, several emit {"results": [...]}. Throws InputError.
RunResult execute(const RunConfig& config, std::optional<std::string_view> input);

}  // namespace evtp::io
