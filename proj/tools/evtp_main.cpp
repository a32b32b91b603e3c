#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "evtp/io/io.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify square matrices by their eventual sign and total positivity properties."};
  std::string input;
  std::string backend = "exact";
  std::string out;
  std::vector<std::string> commands;
  evtp::io::RunConfig config;

  app.add_option("input", input, "Matrix file (CSV or JSON); '-' reads standard input");
  app.add_option("--backend", backend, "exact or float")->capture_default_str();
  app.add_option("--tol", config.tol, "eigen-residual tolerance")->capture_default_str();
  app.add_option("--sign-tol", config.sign_tol, "relative zero threshold for float signs")->capture_default_str();
  app.add_option("--kmax", config.k_max, "largest power examined by the search")->capture_default_str();
  app.add_option("--cmd", commands,
                 "classify | compound J | spectrum | power-index PROP | generate CLASS N (repeatable)");
  app.add_option("--seed", config.seed, "seed for generate")->capture_default_str();
  app.add_option("--out", out, "output path (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  evtp::io::RunResult result;
  try {
    config.backend = evtp::io::parse_backend(backend);
    if (commands.empty()) commands.push_back("classify");
    for (const std::string& c : commands) config.commands.push_back(evtp::io::parse_command(c));

    std::optional<std::string> text;
    if (input == "-") {
      text = read_all(std::cin);
    } else if (!input.empty()) {
      std::ifstream f(input);
      if (!f) throw evtp::io::InputError("cannot read '" + input + "'");
      text = read_all(f);
    }
    result = evtp::io::execute(config, text ? std::optional<std::string_view>(*text) : std::nullopt);
  } catch (const evtp::io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string body = result.document.dump(2) + "\n";
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out);
    if (!(f << body) || !f.flush()) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return 2;
    }
  }
  return result.exit_code;
}
