#pragma once

#include <string>
#include <string_view>

#include "serre/dsl/ast.hpp"

namespace serre::dsl {

/// Parses a script; throws DiagnosticError (E001/E002) with the offending span.
Script parse(std::string_view source);

/// Parses a single polynomial expression filling the whole input.
ExprPtr parse_expression(std::string_view source);

/// Canonical source text; parse(print(s)) prints identically to s.
std::string print(const Script& script);
std::string print(const Statement& statement);
std::string print(const Expr& expr);
std::string print(const IdealRef& ref);

}  // namespace serre::dsl
