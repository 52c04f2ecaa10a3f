// Command-line driver: parse a script, check it, run its queries, print reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "serre/dsl/interpreter.hpp"
#include "serre/dsl/parser.hpp"

namespace {

bool read_source(const std::string& path, std::string& out) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    buf << in.rdbuf();
  }
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre-class grades and S-Cohen-Macaulay tests over GF(p)"};
  std::string path;
  serre::dsl::RunOptions opts;
  std::string format = "text";
  bool print_only = false;
  bool check_only = false;
  app.add_option("script", path, "Script file, or - for standard input")->required();
  app.add_option("--seed", opts.seed, "Seed for the witness search");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--budget", opts.budget, "Witness search attempts per step")->check(CLI::PositiveNumber);
  app.add_flag("--oracle", opts.oracle, "Cross-check results, exit 3 on disagreement");
  app.add_flag("--print", print_only, "Print the canonical form of the script and exit");
  app.add_flag("--check", check_only, "Parse and check the script without running queries");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return serre::dsl::kExitUsage;
  }

  std::string source;
  if (!read_source(path, source)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return serre::dsl::kExitUsage;
  }
  const std::string origin = path == "-" ? "<stdin>" : path;

  try {
    serre::dsl::Script script = serre::dsl::parse(source);
    if (print_only) {
      std::cout << serre::dsl::print(script);
      return serre::dsl::kExitOk;
    }
    serre::dsl::Program program = serre::dsl::check(script);
    if (check_only) return serre::dsl::kExitOk;
    serre::dsl::RunResult result = serre::dsl::run(program, opts);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& q : result.queries) {
      if (q.engine_error) {
        std::cerr << origin << ":" << q.node.find("span")->value() << ": engine error: "
                  << q.node.find("error")->value() << "\n";
      }
    }
    if (format == "machine") {
      std::cout << result.machine();
    } else {
      serre::dsl::RunResult shown = result;
      shown.warnings.clear();
      std::cout << shown.text(true);
    }
    return result.exit_code;
  } catch (const serre::dsl::DiagnosticError& e) {
    std::cerr << e.diagnostic().format(origin);
    return serre::dsl::kExitUsage;
  }
}
