#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace serre::dsl {

/// 1-based source position range.
struct Span {
  int line = 1;
  int column = 1;
  int end_line = 1;
  int end_column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
  bool operator==(const Span&) const = default;
};

enum class DiagCode {
  Lexical,          // E001
  Syntax,           // E002
  UndeclaredName,   // E101
  Inhomogeneous,    // E102
  NotPrime,         // E103
  RingCount,        // E104
  KindMismatch,     // E105
  Redefinition,     // E106
  BadValue,         // E107
};

std::string code_string(DiagCode code);

struct Diagnostic {
  DiagCode code;
  Span span;
  std::string message;
  std::vector<std::string> notes;

  /// "<origin>:<line>:<col>: error[E002]: message" plus indented notes.
  std::string format(const std::string& origin) const;
};

/// Thrown by the lexer, parser and semantic checker.
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace serre::dsl
