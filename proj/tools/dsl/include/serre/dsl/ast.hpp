#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "serre/dsl/diagnostics.hpp"

namespace serre::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Polynomial expression as written; evaluated against the ring later.
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Number;
  std::uint64_t number = 0;  // Number literal or Pow exponent
  std::string name;          // Variable
  ExprPtr lhs, rhs;          // rhs unused for Neg and Pow
  Span span;
};

/// Either a declared ideal name or an inline generator list.
struct IdealRef {
  std::optional<std::string> name;
  std::vector<ExprPtr> generators;
  Span span;
};

struct RingDecl {
  std::string name;
  std::uint64_t prime = 0;
  Span prime_span;
  std::vector<std::string> variables;
  std::vector<Span> variable_spans;
  std::string order = "grevlex";
  std::vector<ExprPtr> quotient;
  Span span;
};

struct IdealDecl {
  std::string name;
  IdealRef value;
  Span span;
};

struct ModuleDecl {
  enum class Form { Free, Quotient, Coker };
  std::string name;
  Form form = Form::Free;
  std::string base;  // ring name for Free/Quotient
  Span base_span;
  IdealRef ideal;    // Quotient
  std::vector<std::vector<ExprPtr>> rows;  // Coker: one row per generator of F0
  std::vector<std::int64_t> shifts;
  Span span;
};

struct ClassDecl {
  enum class Form { Zero, DimLE, SuppIn };
  std::string name;
  Form form = Form::Zero;
  std::uint64_t bound = 0;
  std::vector<ExprPtr> generators;
  Span span;
};

struct Query {
  enum class Kind { Grade, ExtGrade, CGrade, FDepth, GDepth, TjDepth, TbGrade, CheckSeq, Cm, Oracle };
  Kind kind = Kind::Grade;
  IdealRef a;
  IdealRef b;            // TbGrade
  std::uint64_t j = 0;   // TjDepth
  std::vector<ExprPtr> sequence;  // CheckSeq
  std::string module;
  Span module_span;
  std::optional<std::string> serre_class;
  Span class_span;
  Span span;
};

using Statement = std::variant<RingDecl, IdealDecl, ModuleDecl, ClassDecl, Query>;

struct Script {
  std::vector<Statement> statements;
  std::size_t query_count() const;
};

std::string keyword(Query::Kind kind);

}  // namespace serre::dsl
