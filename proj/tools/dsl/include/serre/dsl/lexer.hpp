#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "serre/dsl/diagnostics.hpp"

namespace serre::dsl {

enum class TokenKind {
  Identifier,
  Number,
  Equals,
  Semicolon,
  Comma,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Slash,
  Star,
  Plus,
  Minus,
  Caret,
  End,
};

std::string describe(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  std::uint64_t number = 0;
  Span span;
};

/// Splits source text into tokens; `#` starts a comment running to end of line.
/// Throws DiagnosticError (E001) on stray characters or oversized numbers.
std::vector<Token> tokenize(std::string_view source);

}  // namespace serre::dsl
