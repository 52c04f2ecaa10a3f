#include "serre/dsl/lexer.hpp"

#include <cctype>
#include <limits>

namespace serre::dsl {

std::string code_string(DiagCode code) {
  switch (code) {
    case DiagCode::Lexical:
      return "E001";
    case DiagCode::Syntax:
      return "E002";
    case DiagCode::UndeclaredName:
      return "E101";
    case DiagCode::Inhomogeneous:
      return "E102";
    case DiagCode::NotPrime:
      return "E103";
    case DiagCode::RingCount:
      return "E104";
    case DiagCode::KindMismatch:
      return "E105";
    case DiagCode::Redefinition:
      return "E106";
    case DiagCode::BadValue:
      return "E107";
  }
  return "E000";
}

std::string Diagnostic::format(const std::string& origin) const {
  std::string out = origin + ":" + span.to_string() + ": error[" + code_string(code) + "]: " + message + "\n";
  for (const auto& n : notes) out += "  note: " + n + "\n";
  return out;
}

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier:
      return "identifier";
    case TokenKind::Number:
      return "number";
    case TokenKind::Equals:
      return "'='";
    case TokenKind::Semicolon:
      return "';'";
    case TokenKind::Comma:
      return "','";
    case TokenKind::LParen:
      return "'('";
    case TokenKind::RParen:
      return "')'";
    case TokenKind::LBracket:
      return "'['";
    case TokenKind::RBracket:
      return "']'";
    case TokenKind::Slash:
      return "'/'";
    case TokenKind::Star:
      return "'*'";
    case TokenKind::Plus:
      return "'+'";
    case TokenKind::Minus:
      return "'-'";
    case TokenKind::Caret:
      return "'^'";
    case TokenKind::End:
      return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;  // count code points, not bytes
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.span.line = line;
    tok.span.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::uint64_t value = 0;
      bool overflow = false;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        std::uint64_t digit = static_cast<std::uint64_t>(src[j] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) overflow = true;
        value = value * 10 + digit;
        ++j;
      }
      tok.kind = TokenKind::Number;
      tok.text = std::string(src.substr(i, j - i));
      tok.number = value;
      if (overflow) {
        throw DiagnosticError({DiagCode::Lexical, tok.span, "number " + tok.text + " is too large", {}});
      }
      advance(j - i);
    } else {
      switch (c) {
        case '=': tok.kind = TokenKind::Equals; break;
        case ';': tok.kind = TokenKind::Semicolon; break;
        case ',': tok.kind = TokenKind::Comma; break;
        case '(': tok.kind = TokenKind::LParen; break;
        case ')': tok.kind = TokenKind::RParen; break;
        case '[': tok.kind = TokenKind::LBracket; break;
        case ']': tok.kind = TokenKind::RBracket; break;
        case '/': tok.kind = TokenKind::Slash; break;
        case '*': tok.kind = TokenKind::Star; break;
        case '+': tok.kind = TokenKind::Plus; break;
        case '-': tok.kind = TokenKind::Minus; break;
        case '^': tok.kind = TokenKind::Caret; break;
        default: {
          std::size_t len = 1;
          unsigned char u = static_cast<unsigned char>(c);
          if (u >= 0xC0) {
            while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) ++len;
          }
          throw DiagnosticError(
              {DiagCode::Lexical, tok.span, "unexpected character '" + std::string(src.substr(i, len)) + "'", {}});
        }
      }
      tok.text = std::string(1, c);
      advance(1);
    }
    tok.span.end_line = line;
    tok.span.end_column = col;
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::End;
  end.span = {line, col, line, col};
  out.push_back(end);
  return out;
}

}  // namespace serre::dsl
