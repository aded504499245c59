#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "abdim/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "abdim: exact homological invariants of modules over finite-dimensional "
      "local algebras"};

  std::string input = "-";
  std::string json_path;
  std::uint64_t seed = 0;
  int bound = 20;
  bool quiet = false;

  app.add_option("session", input,
                 "session file (.abd), or '-' to read from stdin");
  app.add_option("--seed", seed, "seed for randomized operations")
      ->envname("ABDIM_SEED");
  app.add_option("--bound", bound, "default Ext/resolution bound");
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_flag("--quiet", quiet, "suppress the text report on stdout");

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "error: cannot open '" << input << "'\n";
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }

  abdim::ParseResult parsed = abdim::parse_session(text);
  if (!parsed.ok()) {
    std::cerr << "parse error at " << parsed.error.line << ":"
              << parsed.error.col << ": " << parsed.error.message << "\n";
    return 2;
  }

  abdim::ExecFlags flags;
  flags.seed = seed;
  flags.bound = bound;
  flags.quiet = quiet;
  abdim::ExecResult result = abdim::execute(*parsed.ast, flags);

  if (!quiet) std::cout << result.text;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return 1;
    }
    out << result.json.dump(2) << "\n";
  }
  return result.exit_code;
}
