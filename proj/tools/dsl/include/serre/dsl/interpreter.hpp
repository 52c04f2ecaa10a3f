#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <map>
#include <string>
#include <vector>

#include "serre/dsl/ast.hpp"
#include "serre/dsl/report.hpp"
#include "serre/fpmodule.hpp"
#include "serre/serre_class.hpp"

namespace serre::dsl {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  bool oracle = false;
  bool timing = false;  // only honoured by the text renderer
};

/// Script with every name resolved and every polynomial evaluated.
struct Program {
  RingPtr ring;
  RingDescriptor descriptor;
  std::string ring_name;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FPModule> modules;
  std::map<std::string, SerreClass> classes;

  struct Step {
    Query query;
    std::string source;
    Ideal a, b;
    std::vector<Polynomial> sequence;
  };
  std::vector<Step> queries;
};

/// Evaluates an expression in `ring`; unknown names raise E101 after
/// `on_unknown` (if set) had a chance to raise something more specific.
Polynomial evaluate(const Expr& expr, const RingPtr& ring,
                    const std::function<void(const Expr&)>& on_unknown = nullptr);
/// Convenience: parse_expression followed by evaluate.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Resolves names and checks homogeneity; throws DiagnosticError (E1xx).
Program check(const Script& script);

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitEngine = 2, kExitOracle = 3 };

struct QueryResult {
  ReportNode node;
  std::string summary;
  double millis = 0.0;
  bool engine_error = false;
  bool oracle_disagreement = false;
};

struct RunResult {
  std::vector<QueryResult> queries;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;

  /// Report tree: warnings, then query.1, query.2, ...
  ReportNode tree() const;
  std::string machine() const;
  std::string text(bool timing) const;
};

RunResult run(const Program& program, const RunOptions& options);

}  // namespace serre::dsl
