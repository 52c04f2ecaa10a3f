#include "serre/dsl/parser.hpp"

#include <map>

#include "serre/dsl/lexer.hpp"

namespace serre::dsl {

std::size_t Script::query_count() const {
  std::size_t n = 0;
  for (const auto& s : statements) n += std::holds_alternative<Query>(s) ? 1 : 0;
  return n;
}

std::string keyword(Query::Kind kind) {
  switch (kind) {
    case Query::Kind::Grade: return "grade";
    case Query::Kind::ExtGrade: return "extgrade";
    case Query::Kind::CGrade: return "cgrade";
    case Query::Kind::FDepth: return "fdepth";
    case Query::Kind::GDepth: return "gdepth";
    case Query::Kind::TjDepth: return "tjdepth";
    case Query::Kind::TbGrade: return "tbgrade";
    case Query::Kind::CheckSeq: return "checkseq";
    case Query::Kind::Cm: return "cm";
    case Query::Kind::Oracle: return "oracle";
  }
  return "";
}

namespace {

const std::map<std::string, Query::Kind>& query_keywords() {
  static const std::map<std::string, Query::Kind> table = {
      {"grade", Query::Kind::Grade},     {"extgrade", Query::Kind::ExtGrade}, {"cgrade", Query::Kind::CGrade},
      {"fdepth", Query::Kind::FDepth},   {"gdepth", Query::Kind::GDepth},     {"tjdepth", Query::Kind::TjDepth},
      {"tbgrade", Query::Kind::TbGrade}, {"checkseq", Query::Kind::CheckSeq}, {"cm", Query::Kind::Cm},
      {"oracle", Query::Kind::Oracle},
  };
  return table;
}

Span join(const Span& a, const Span& b) { return {a.line, a.column, b.end_line, b.end_column}; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr whole_expression() {
    ExprPtr e = expr();
    if (peek().kind != TokenKind::End) fail("end of expression");
    return e;
  }

  Script script() {
    Script s;
    while (peek().kind != TokenKind::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& previous() const { return toks_[pos_ - 1]; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected, std::vector<std::string> notes = {}) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw DiagnosticError({DiagCode::Syntax, t.span, "expected " + expected + ", found " + found, std::move(notes)});
  }

  const Token& expect(TokenKind kind, const std::string& context = "") {
    if (peek().kind != kind) fail(describe(kind) + (context.empty() ? "" : " " + context));
    return take();
  }

  // Closing bracket with a pointer back to the opener.
  const Token& expect_close(TokenKind kind, const Token& opener) {
    if (peek().kind != kind) {
      fail(describe(kind), {"to match " + describe(opener.kind) + " at " + opener.span.to_string()});
    }
    return take();
  }

  bool at_keyword(const std::string& word) const {
    return peek().kind == TokenKind::Identifier && peek().text == word;
  }

  void expect_keyword(const std::string& word) {
    if (!at_keyword(word)) fail("'" + word + "'");
    take();
  }

  std::string identifier(const std::string& what) {
    if (peek().kind != TokenKind::Identifier) fail(what);
    return take().text;
  }

  Statement statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::Identifier) fail("a declaration or query");
    if (head.text == "ring") return ring();
    if (head.text == "ideal") return ideal_decl();
    if (head.text == "module") return module_decl();
    if (head.text == "class") return class_decl();
    if (query_keywords().count(head.text)) return query();
    fail("a declaration or query");
  }

  RingDecl ring() {
    RingDecl d;
    Span start = take().span;
    d.name = identifier("a ring name");
    expect(TokenKind::Equals);
    expect_keyword("GF");
    const Token& open = expect(TokenKind::LParen);
    d.prime = expect(TokenKind::Number, "for the field characteristic").number;
    d.prime_span = previous().span;
    expect_close(TokenKind::RParen, open);
    const Token& lb = expect(TokenKind::LBracket);
    do {
      d.variables.push_back(identifier("a variable name"));
      d.variable_spans.push_back(previous().span);
    } while (peek().kind == TokenKind::Comma && (take(), true));
    expect_close(TokenKind::RBracket, lb);
    if (at_keyword("grevlex") || at_keyword("lex")) d.order = take().text;
    if (peek().kind == TokenKind::Slash) {
      take();
      const Token& qo = expect(TokenKind::LParen);
      d.quotient = expr_list(TokenKind::RParen);
      expect_close(TokenKind::RParen, qo);
    }
    d.span = join(start, expect(TokenKind::Semicolon).span);
    return d;
  }

  IdealDecl ideal_decl() {
    IdealDecl d;
    Span start = take().span;
    d.name = identifier("an ideal name");
    expect(TokenKind::Equals);
    d.value = ideal_ref();
    d.span = join(start, expect(TokenKind::Semicolon).span);
    return d;
  }

  ModuleDecl module_decl() {
    ModuleDecl d;
    Span start = take().span;
    d.name = identifier("a module name");
    expect(TokenKind::Equals);
    if (at_keyword("coker")) {
      take();
      d.form = ModuleDecl::Form::Coker;
      const Token& outer = expect(TokenKind::LBracket);
      do {
        const Token& inner = expect(TokenKind::LBracket);
        d.rows.push_back(expr_list(TokenKind::RBracket));
        expect_close(TokenKind::RBracket, inner);
      } while (peek().kind == TokenKind::Comma && (take(), true));
      expect_close(TokenKind::RBracket, outer);
      if (at_keyword("shifts")) {
        take();
        const Token& sb = expect(TokenKind::LBracket);
        if (peek().kind != TokenKind::RBracket) {
          do {
            bool negative = false;
            if (peek().kind == TokenKind::Minus) {
              take();
              negative = true;
            }
            auto v = static_cast<std::int64_t>(expect(TokenKind::Number, "for a degree shift").number);
            d.shifts.push_back(negative ? -v : v);
          } while (peek().kind == TokenKind::Comma && (take(), true));
        }
        expect_close(TokenKind::RBracket, sb);
      }
    } else {
      d.base = identifier("a ring name or 'coker'");
      d.base_span = previous().span;
      if (peek().kind == TokenKind::Slash) {
        take();
        d.form = ModuleDecl::Form::Quotient;
        d.ideal = ideal_ref();
      }
    }
    d.span = join(start, expect(TokenKind::Semicolon).span);
    return d;
  }

  ClassDecl class_decl() {
    ClassDecl d;
    Span start = take().span;
    d.name = identifier("a class name");
    expect(TokenKind::Equals);
    if (at_keyword("zero")) {
      take();
      d.form = ClassDecl::Form::Zero;
    } else if (at_keyword("dim_le")) {
      take();
      d.form = ClassDecl::Form::DimLE;
      const Token& open = expect(TokenKind::LParen);
      d.bound = expect(TokenKind::Number, "for the dimension bound").number;
      expect_close(TokenKind::RParen, open);
    } else if (at_keyword("supp_in")) {
      take();
      d.form = ClassDecl::Form::SuppIn;
      const Token& open = expect(TokenKind::LParen);
      d.generators = expr_list(TokenKind::RParen);
      expect_close(TokenKind::RParen, open);
    } else {
      fail("'zero', 'dim_le' or 'supp_in'");
    }
    d.span = join(start, expect(TokenKind::Semicolon).span);
    return d;
  }

  IdealRef named_ideal_arg(const std::string& key) {
    expect_keyword(key);
    expect(TokenKind::Equals);
    return ideal_ref();
  }

  void module_arg(Query& q) {
    q.module = identifier("a module name");
    q.module_span = previous().span;
  }

  void class_arg(Query& q) {
    q.serre_class = identifier("a class name");
    q.class_span = previous().span;
  }

  Query query() {
    Query q;
    const Token& head = take();
    Span start = head.span;
    q.kind = query_keywords().at(head.text);
    switch (q.kind) {
      case Query::Kind::Grade:
      case Query::Kind::ExtGrade:
      case Query::Kind::CGrade:
        q.a = named_ideal_arg("a");
        module_arg(q);
        class_arg(q);
        break;
      case Query::Kind::FDepth:
      case Query::Kind::GDepth:
        q.a = named_ideal_arg("a");
        module_arg(q);
        break;
      case Query::Kind::TjDepth: {
        const Token& open = expect(TokenKind::LParen);
        q.j = expect(TokenKind::Number, "for j").number;
        expect_close(TokenKind::RParen, open);
        q.a = named_ideal_arg("a");
        module_arg(q);
        break;
      }
      case Query::Kind::TbGrade:
        q.b = named_ideal_arg("b");
        q.a = named_ideal_arg("a");
        module_arg(q);
        break;
      case Query::Kind::CheckSeq: {
        const Token& open = expect(TokenKind::LBracket);
        q.sequence = expr_list(TokenKind::RBracket);
        expect_close(TokenKind::RBracket, open);
        module_arg(q);
        class_arg(q);
        break;
      }
      case Query::Kind::Cm:
        module_arg(q);
        class_arg(q);
        break;
      case Query::Kind::Oracle:
        module_arg(q);
        if (peek().kind == TokenKind::Identifier) class_arg(q);
        break;
    }
    q.span = join(start, expect(TokenKind::Semicolon).span);
    return q;
  }

  IdealRef ideal_ref() {
    IdealRef r;
    if (peek().kind == TokenKind::Identifier) {
      r.name = take().text;
      r.span = previous().span;
      return r;
    }
    if (peek().kind != TokenKind::LParen) fail("an ideal name or '('");
    const Token& open = take();
    r.generators = expr_list(TokenKind::RParen);
    r.span = join(open.span, expect_close(TokenKind::RParen, open).span);
    return r;
  }

  // Possibly empty comma-separated list terminated (not consumed) by `close`.
  std::vector<ExprPtr> expr_list(TokenKind close) {
    std::vector<ExprPtr> out;
    if (peek().kind == close) return out;
    out.push_back(expr());
    while (peek().kind == TokenKind::Comma) {
      take();
      out.push_back(expr());
    }
    return out;
  }

  static ExprPtr binary(Expr::Kind kind, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->span = join(l->span, r->span);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      Expr::Kind kind = take().kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = binary(kind, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == TokenKind::Star) {
      take();
      lhs = binary(Expr::Kind::Mul, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == TokenKind::Minus) {
      Span start = take().span;
      ExprPtr inner = unary();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Neg;
      e->span = join(start, inner->span);
      e->lhs = std::move(inner);
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind == TokenKind::Caret) {
      take();
      const Token& n = expect(TokenKind::Number, "as exponent");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->number = n.number;
      e->span = join(base->span, n.span);
      e->lhs = std::move(base);
      return e;
    }
    return base;
  }

  ExprPtr atom() {
    auto e = std::make_shared<Expr>();
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      take();
      e->kind = Expr::Kind::Number;
      e->number = t.number;
      e->span = t.span;
      return e;
    }
    if (t.kind == TokenKind::Identifier) {
      take();
      e->kind = Expr::Kind::Variable;
      e->name = t.text;
      e->span = t.span;
      return e;
    }
    if (t.kind == TokenKind::LParen) {
      const Token& open = take();
      ExprPtr inner = expr();
      expect_close(TokenKind::RParen, open);
      return inner;
    }
    fail("a polynomial");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string join_exprs(const std::vector<ExprPtr>& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ", " : "") + print(*list[i]);
  return out;
}

}  // namespace

Script parse(std::string_view source) { return Parser(tokenize(source)).script(); }

ExprPtr parse_expression(std::string_view source) { return Parser(tokenize(source)).whole_expression(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return std::to_string(e.number);
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::Add:
      return wrap(*e.lhs, 1) + " + " + wrap(*e.rhs, 2);
    case Expr::Kind::Sub:
      return wrap(*e.lhs, 1) + " - " + wrap(*e.rhs, 2);
    case Expr::Kind::Mul:
      return wrap(*e.lhs, 2) + "*" + wrap(*e.rhs, 3);
    case Expr::Kind::Neg:
      return "-" + wrap(*e.lhs, 3);
    case Expr::Kind::Pow:
      return wrap(*e.lhs, 5) + "^" + std::to_string(e.number);
  }
  return "";
}

std::string print(const IdealRef& ref) {
  if (ref.name) return *ref.name;
  return "(" + join_exprs(ref.generators) + ")";
}

std::string print(const Statement& st) {
  struct Visitor {
    std::string operator()(const RingDecl& d) const {
      std::string out = "ring " + d.name + " = GF(" + std::to_string(d.prime) + ")[";
      for (std::size_t i = 0; i < d.variables.size(); ++i) out += (i ? ", " : "") + d.variables[i];
      out += "] " + d.order;
      if (!d.quotient.empty()) out += " / (" + join_exprs(d.quotient) + ")";
      return out + ";";
    }
    std::string operator()(const IdealDecl& d) const { return "ideal " + d.name + " = " + print(d.value) + ";"; }
    std::string operator()(const ModuleDecl& d) const {
      std::string out = "module " + d.name + " = ";
      switch (d.form) {
        case ModuleDecl::Form::Free:
          out += d.base;
          break;
        case ModuleDecl::Form::Quotient:
          out += d.base + "/" + print(d.ideal);
          break;
        case ModuleDecl::Form::Coker: {
          out += "coker[";
          for (std::size_t r = 0; r < d.rows.size(); ++r) out += (r ? ", [" : "[") + join_exprs(d.rows[r]) + "]";
          out += "]";
          if (!d.shifts.empty()) {
            out += " shifts [";
            for (std::size_t i = 0; i < d.shifts.size(); ++i) out += (i ? ", " : "") + std::to_string(d.shifts[i]);
            out += "]";
          }
          break;
        }
      }
      return out + ";";
    }
    std::string operator()(const ClassDecl& d) const {
      std::string out = "class " + d.name + " = ";
      switch (d.form) {
        case ClassDecl::Form::Zero:
          out += "zero";
          break;
        case ClassDecl::Form::DimLE:
          out += "dim_le(" + std::to_string(d.bound) + ")";
          break;
        case ClassDecl::Form::SuppIn:
          out += "supp_in(" + join_exprs(d.generators) + ")";
          break;
      }
      return out + ";";
    }
    std::string operator()(const Query& q) const {
      std::string out = keyword(q.kind);
      switch (q.kind) {
        case Query::Kind::Grade:
        case Query::Kind::ExtGrade:
        case Query::Kind::CGrade:
        case Query::Kind::FDepth:
        case Query::Kind::GDepth:
          out += " a=" + print(q.a);
          break;
        case Query::Kind::TjDepth:
          out += "(" + std::to_string(q.j) + ") a=" + print(q.a);
          break;
        case Query::Kind::TbGrade:
          out += " b=" + print(q.b) + " a=" + print(q.a);
          break;
        case Query::Kind::CheckSeq:
          out += " [" + join_exprs(q.sequence) + "]";
          break;
        default:
          break;
      }
      out += " " + q.module;
      if (q.serre_class) out += " " + *q.serre_class;
      return out + ";";
    }
  };
  return std::visit(Visitor{}, st);
}

std::string print(const Script& script) {
  std::string out;
  for (const auto& st : script.statements) out += print(st) + "\n";
  return out;
}

}  // namespace serre::dsl
