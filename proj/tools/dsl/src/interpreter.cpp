#include "serre/dsl/interpreter.hpp"

#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>

#include "serre/cm.hpp"
#include "serre/dsl/parser.hpp"
#include "serre/errors.hpp"
#include "serre/field.hpp"
#include "serre/grade.hpp"
#include "serre/oracle/simplicial.hpp"
#include "serre/oracle/sweep.hpp"

namespace serre::dsl {

namespace {

[[noreturn]] void error(DiagCode code, const Span& span, std::string message) {
  throw DiagnosticError({code, span, std::move(message), {}});
}

}  // namespace

Polynomial evaluate(const Expr& e, const RingPtr& S, const std::function<void(const Expr&)>& on_unknown) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Polynomial::constant(S, static_cast<std::int64_t>(e.number % S->field().characteristic()));
    case Expr::Kind::Variable: {
      int idx = S->index_of(e.name);
      if (idx >= 0) return Polynomial::variable(S, static_cast<std::size_t>(idx));
      if (on_unknown) on_unknown(e);
      error(DiagCode::UndeclaredName, e.span, "undeclared name '" + e.name + "'");
    }
    case Expr::Kind::Add:
      return evaluate(*e.lhs, S, on_unknown) + evaluate(*e.rhs, S, on_unknown);
    case Expr::Kind::Sub:
      return evaluate(*e.lhs, S, on_unknown) - evaluate(*e.rhs, S, on_unknown);
    case Expr::Kind::Mul: {
      Polynomial l = evaluate(*e.lhs, S, on_unknown);
      Polynomial r = evaluate(*e.rhs, S, on_unknown);
      try {
        return l * r;
      } catch (const std::overflow_error&) {
        error(DiagCode::BadValue, e.span, "exponent overflow");
      }
    }
    case Expr::Kind::Neg:
      return -evaluate(*e.lhs, S, on_unknown);
    case Expr::Kind::Pow: {
      if (e.number > 1000) error(DiagCode::BadValue, e.span, "exponent " + std::to_string(e.number) + " is too large");
      Polynomial base = evaluate(*e.lhs, S, on_unknown);
      try {
        return base.pow(static_cast<unsigned>(e.number));
      } catch (const std::overflow_error&) {
        error(DiagCode::BadValue, e.span, "exponent overflow");
      }
    }
  }
  return Polynomial(S);
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return evaluate(*parse_expression(text), ring);
}

namespace {

std::string article(const std::string& noun) {
  return (noun.empty() || std::string("aeiou").find(noun[0]) == std::string::npos ? "a " : "an ") + noun;
}

class Checker {
 public:
  Program run(const Script& script) {
    for (const auto& st : script.statements) std::visit([this](const auto& s) { handle(s); }, st);
    return std::move(prog_);
  }

 private:
  void declare(const std::string& name, const std::string& kind, const Span& span) {
    auto it = kinds_.find(name);
    if (it != kinds_.end()) error(DiagCode::Redefinition, span, "'" + name + "' is already declared as " + article(it->second));
    kinds_[name] = kind;
  }

  void require_ring(const Span& span) const {
    if (!prog_.ring) error(DiagCode::RingCount, span, "no ring declared before this statement");
  }

  // Looks up `name` expecting `kind`; E101 if unknown, E105 if another kind.
  void expect_kind(const std::string& name, const std::string& kind, const Span& span) const {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) error(DiagCode::UndeclaredName, span, "undeclared name '" + name + "'");
    if (it->second != kind) {
      error(DiagCode::KindMismatch, span, "'" + name + "' is " + article(it->second) + ", expected " + article(kind));
    }
  }

  Polynomial eval(const Expr& e) const {
    return evaluate(e, prog_.ring, [this](const Expr& var) {
      auto it = kinds_.find(var.name);
      if (it != kinds_.end()) {
        error(DiagCode::KindMismatch, var.span, "'" + var.name + "' is " + article(it->second) + ", expected a ring variable");
      }
    });
  }

  Polynomial homogeneous(const Expr& e) const {
    Polynomial p = eval(e);
    if (!p.is_homogeneous()) error(DiagCode::Inhomogeneous, e.span, "polynomial '" + print(e) + "' is not homogeneous");
    return p;
  }

  std::vector<Polynomial> homogeneous_list(const std::vector<ExprPtr>& list) const {
    std::vector<Polynomial> out;
    for (const auto& e : list) out.push_back(homogeneous(*e));
    return out;
  }

  Ideal resolve(const IdealRef& ref) const {
    if (ref.name) {
      expect_kind(*ref.name, "ideal", ref.span);
      return prog_.ideals.at(*ref.name);
    }
    return Ideal(prog_.ring, homogeneous_list(ref.generators));
  }

  void handle(const RingDecl& d) {
    if (prog_.ring) error(DiagCode::RingCount, d.span, "a script declares exactly one ring");
    if (d.prime > INT32_MAX || !is_prime(d.prime)) {
      error(DiagCode::NotPrime, d.prime_span, "characteristic " + std::to_string(d.prime) + " is not a prime below 2^31");
    }
    if (d.variables.size() > kMaxUserVars) {
      error(DiagCode::BadValue, d.variable_spans[kMaxUserVars],
            "at most " + std::to_string(kMaxUserVars) + " variables are supported");
    }
    declare(d.name, "ring", d.span);
    for (std::size_t i = 0; i < d.variables.size(); ++i) declare(d.variables[i], "ring variable", d.variable_spans[i]);
    MonomialOrder order = d.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    prog_.ring = PolynomialRing::make(static_cast<std::uint32_t>(d.prime), d.variables, order);
    prog_.ring_name = d.name;
    std::vector<Polynomial> quotient;
    for (auto& p : homogeneous_list(d.quotient)) {
      if (!p.is_zero()) quotient.push_back(p);
    }
    prog_.descriptor = RingDescriptor(prog_.ring, quotient);
  }

  void handle(const IdealDecl& d) {
    require_ring(d.span);
    Ideal value = resolve(d.value);
    declare(d.name, "ideal", d.span);
    prog_.ideals.emplace(d.name, value);
  }

  void handle(const ModuleDecl& d) {
    require_ring(d.span);
    FPModule m;
    if (d.form == ModuleDecl::Form::Coker) {
      std::vector<std::vector<Polynomial>> rows;
      for (const auto& r : d.rows) rows.push_back(homogeneous_list(r));
      const std::size_t width = rows.front().size();
      for (const auto& r : rows) {
        if (r.size() != width) error(DiagCode::BadValue, d.span, "presentation rows have different lengths");
      }
      std::vector<int> shifts(rows.size(), 0);
      if (!d.shifts.empty()) {
        if (d.shifts.size() != rows.size()) {
          error(DiagCode::BadValue, d.span,
                "expected " + std::to_string(rows.size()) + " shifts, got " + std::to_string(d.shifts.size()));
        }
        for (std::size_t i = 0; i < shifts.size(); ++i) shifts[i] = static_cast<int>(d.shifts[i]);
      }
      std::vector<Column> cols(width, Column(rows.size(), Polynomial(prog_.ring)));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < width; ++j) cols[j][i] = rows[i][j];
      }
      m = FPModule(prog_.descriptor, shifts, cols);
      if (!m.is_homogeneous()) {
        error(DiagCode::Inhomogeneous, d.span, "presentation of '" + d.name + "' is not homogeneous for its shifts");
      }
    } else {
      expect_kind(d.base, "ring", d.base_span);
      if (d.form == ModuleDecl::Form::Free) {
        m = FPModule::free(prog_.descriptor, 1);
      } else {
        m = cyclic_module(prog_.descriptor, resolve(d.ideal));
      }
    }
    declare(d.name, "module", d.span);
    prog_.modules.emplace(d.name, m);
  }

  void handle(const ClassDecl& d) {
    require_ring(d.span);
    std::optional<SerreClass> cls;
    switch (d.form) {
      case ClassDecl::Form::Zero:
        cls = SerreClass::zero_only();
        break;
      case ClassDecl::Form::DimLE:
        if (d.bound > INT_MAX) error(DiagCode::BadValue, d.span, "dimension bound is too large");
        cls = SerreClass::dim_le(static_cast<int>(d.bound));
        break;
      case ClassDecl::Form::SuppIn: {
        Ideal b(prog_.ring, homogeneous_list(d.generators));
        if (b.is_zero() || b.is_unit()) error(DiagCode::BadValue, d.span, "supp_in needs a proper nonzero ideal");
        cls = SerreClass::supp_in(b);
        break;
      }
    }
    declare(d.name, "class", d.span);
    prog_.classes.emplace(d.name, *cls);
  }

  void handle(const Query& q) {
    require_ring(q.span);
    Program::Step step;
    step.query = q;
    std::string src = print(Statement(q));
    step.source = src.substr(0, src.size() - 1);
    expect_kind(q.module, "module", q.module_span);
    if (q.serre_class) expect_kind(*q.serre_class, "class", q.class_span);
    switch (q.kind) {
      case Query::Kind::Cm:
      case Query::Kind::Oracle:
        break;
      case Query::Kind::CheckSeq:
        step.sequence = homogeneous_list(q.sequence);
        break;
      case Query::Kind::TbGrade: {
        step.b = resolve(q.b);
        step.a = resolve(q.a);
        if (step.b.is_zero() || step.b.is_unit()) error(DiagCode::BadValue, q.b.span, "b must be a proper nonzero ideal");
        break;
      }
      default:
        step.a = resolve(q.a);
        break;
    }
    prog_.queries.push_back(std::move(step));
  }

  Program prog_;
  std::map<std::string, std::string> kinds_;
};

// ---------------------------------------------------------------- execution

void fill_grade(ReportNode& node, const GradeReport& g) {
  node.set("name", g.name);
  node.set("value", g.value.to_string());
  node.set("route", to_string(g.route));
  node.set("class", g.serre_class.to_string());
  node.set("empty_inf", g.empty_inf);
  if (!g.layers.empty()) {
    auto& layers = node.child("layers");
    for (const auto& w : g.layers) {
      auto& l = layers.append_child();
      l.set("index", w.index);
      l.set("dimension", w.dimension);
      l.set("in_class", w.in_class);
    }
  }
  if (!g.sequence.empty()) {
    auto& seq = node.child("sequence");
    for (const auto& f : g.sequence) seq.append(f.to_string());
  }
  if (!g.notes.empty()) {
    auto& notes = node.child("notes");
    for (const auto& n : g.notes) notes.append(n);
  }
}

std::string grade_summary(const GradeReport& g) {
  return g.value.to_string() + " (" + g.name + ", route " + to_string(g.route) + ", class " +
         g.serre_class.to_string() + ")";
}

void agreement(QueryResult& r, bool agree) {
  r.node.child("oracle").set("status", std::string(agree ? "agree" : "disagree"));
  if (!agree) r.oracle_disagreement = true;
}

void skipped(QueryResult& r, const std::string& why) {
  auto& o = r.node.child("oracle");
  o.set("status", "skipped");
  o.set("reason", why);
}

std::optional<oracle::MonomialIdeal> sweepable(const FPModule& m) {
  if (!m.ring().is_polynomial_ring()) return std::nullopt;
  auto mono = oracle::MonomialIdeal::from_cyclic_module(m);
  if (!mono || mono->num_vars() > oracle::kMaxSweepVars) return std::nullopt;
  return mono;
}

void grade_crosscheck(QueryResult& r, const GradeReport& g, const Ideal& a, const FPModule& m, const SerreClass& cls) {
  if (!m.ring().is_polynomial_ring()) {
    skipped(r, "quotient ring");
    return;
  }
  GradeReport other = g.route == GradeRoute::Ext ? koszul_grade(a, m, cls) : ext_grade(a, m, cls);
  r.node.child("oracle").set(g.route == GradeRoute::Ext ? "koszul" : "ext", other.value.to_string());
  bool agree = other.value == g.value;
  auto mono = sweepable(m);
  if (mono && cls.kind() == SerreClass::Kind::ZeroOnly && a.same_ideal(Ideal::maximal(m.ambient()))) {
    int depth = oracle::monomial_depth(*mono, m.ambient()->field().characteristic());
    GradeValue expected = depth < 0 ? GradeValue::plus_infinity() : GradeValue::finite(depth);
    r.node.child("oracle").set("reisner_depth", expected.to_string());
    agree = agree && expected == g.value;
  }
  agreement(r, agree);
}

class Executor {
 public:
  Executor(const Program& prog, const RunOptions& opts) : prog_(prog), opts_(opts) {}

  QueryResult execute(const Program::Step& step) {
    QueryResult r;
    const Query& q = step.query;
    r.node.set("source", step.source);
    r.node.set("span", q.span.to_string());
    r.node.set("kind", keyword(q.kind));
    const ReportNode header = r.node;
    auto start = std::chrono::steady_clock::now();
    try {
      r.node.set("status", "ok");
      dispatch(step, r);
    } catch (const std::exception& e) {
      // drop whatever the failed query managed to record
      r.node = header;
      r.node.set("status", "error");
      r.node.set("error", std::string(e.what()));
      r.summary = "error: " + std::string(e.what());
      r.engine_error = true;
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  const FPModule& module(const Query& q) const { return prog_.modules.at(q.module); }
  const SerreClass& cls(const Query& q) const { return prog_.classes.at(*q.serre_class); }

  void dispatch(const Program::Step& step, QueryResult& r) {
    const Query& q = step.query;
    switch (q.kind) {
      case Query::Kind::Grade:
      case Query::Kind::ExtGrade: {
        GradeReport g = q.kind == Query::Kind::Grade ? koszul_grade(step.a, module(q), cls(q))
                                                     : ext_grade(step.a, module(q), cls(q));
        if (q.kind == Query::Kind::Grade) g.name = "koszul grade";
        else g.name = "ext grade";
        finish_grade(r, g, step.a, module(q), cls(q));
        break;
      }
      case Query::Kind::FDepth:
        finish_grade(r, f_depth(step.a, module(q)), step.a, module(q), SerreClass::dim_le(0));
        break;
      case Query::Kind::GDepth:
        finish_grade(r, g_depth(step.a, module(q)), step.a, module(q), SerreClass::dim_le(1));
        break;
      case Query::Kind::TjDepth: {
        if (q.j > INT_MAX) throw PreconditionError("j is too large");
        int j = static_cast<int>(q.j);
        finish_grade(r, named_depth(NamedDepth::TjDepth, step.a, module(q), j), step.a, module(q),
                     SerreClass::dim_le(j));
        break;
      }
      case Query::Kind::TbGrade:
        finish_grade(r, named_depth(NamedDepth::TbGrade, step.a, module(q), 0, step.b), step.a, module(q),
                     SerreClass::supp_in(step.b));
        break;
      case Query::Kind::CGrade: {
        GradeReport g = classical_grade(step.a, module(q), cls(q), opts_.seed, opts_.budget);
        fill_grade(r.node, g);
        r.summary = grade_summary(g);
        if (opts_.oracle) {
          if (g.route == GradeRoute::Sequence) {
            auto check = check_weak_sequence(g.sequence, module(q), cls(q));
            r.node.child("oracle").set("sequence_weak", check.weak);
            agreement(r, check.weak);
          } else {
            skipped(r, "no witness sequence");
          }
        }
        break;
      }
      case Query::Kind::CheckSeq:
        checkseq(step, r);
        break;
      case Query::Kind::Cm:
        cm(q, r);
        break;
      case Query::Kind::Oracle:
        oracle_query(q, r);
        break;
    }
  }

  void finish_grade(QueryResult& r, const GradeReport& g, const Ideal& a, const FPModule& m, const SerreClass& c) {
    fill_grade(r.node, g);
    r.summary = grade_summary(g);
    if (opts_.oracle) grade_crosscheck(r, g, a, m, c);
  }

  void checkseq(const Program::Step& step, QueryResult& r) {
    const Query& q = step.query;
    auto rep = check_weak_sequence(step.sequence, module(q), cls(q));
    auto& steps = r.node.child("steps");
    for (const auto& s : rep.steps) {
      auto& n = steps.append_child();
      n.set("element", s.element.to_string());
      n.set("in_class", s.in_class);
      n.set("colon_dimension", s.colon_dimension);
    }
    r.node.set("class", cls(q).to_string());
    r.node.set("weak", rep.weak);
    r.node.set("quotient_outside_class", rep.quotient_outside_class);
    r.node.set("is_sequence", rep.is_sequence());
    r.summary = std::string("weak ") + (rep.weak ? "true" : "false") + ", sequence " +
                (rep.is_sequence() ? "true" : "false");
    if (opts_.oracle) {
      std::vector<Polynomial> cubes;
      for (const auto& f : step.sequence) cubes.push_back(f.pow(3));
      auto cubed = check_weak_sequence(cubes, module(q), cls(q));
      r.node.child("oracle").set("cubed_weak", cubed.weak);
      agreement(r, cubed.weak == rep.weak);
    }
  }

  void cm(const Query& q, QueryResult& r) {
    const FPModule& m = module(q);
    const SerreClass& c = cls(q);
    CMReport rep = s_cm_test(m, c);
    r.node.set("verdict", rep.verdict);
    r.node.set("route", to_string(rep.route));
    r.node.set("class", c.to_string());
    r.node.set("dim", rep.dimension);
    r.node.set("a", rep.a.to_string());
    if (!rep.parts.empty()) {
      auto& parts = r.node.child("parts");
      for (const auto& p : rep.parts) {
        auto& n = parts.append_child();
        n.set("index", p.local_index);
        n.set("ext_index", p.ext_index);
        n.set("annihilator", p.annihilator.to_string());
      }
    }
    r.node.set("quotient_dim", rep.quotient_dimension);
    auto& notes = r.node.child("notes");
    for (const auto& n : rep.notes) notes.append(n);

    std::string detail;
    if (rep.a.is_unit()) {
      detail = "S/a(M) = 0";
    } else switch (c.kind()) {
      case SerreClass::Kind::DimLE:
        detail = "dim S/a(M)=" + std::to_string(rep.quotient_dimension) + (rep.verdict ? " <= " : " > ") +
                 std::to_string(c.bound());
        break;
      case SerreClass::Kind::ZeroOnly:
        detail = rep.verdict ? "S/a(M) = 0" : "S/a(M) != 0";
        break;
      case SerreClass::Kind::SuppInV:
        detail = std::string("Supp S/a(M) ") + (rep.verdict ? "inside " : "not inside ") + "V" +
                 c.support_ideal().to_string();
        break;
    }
    r.summary = std::string(rep.verdict ? "true" : "false") + " (route " + to_string(rep.route) +
                ", a(M)=" + rep.a.to_string() + ", " + detail + ")";

    if (opts_.oracle) {
      auto mono = sweepable(m);
      if (!mono) {
        skipped(r, "module is not a monomial quotient in at most " + std::to_string(oracle::kMaxSweepVars) +
                       " variables");
        return;
      }
      const std::uint32_t p = m.ambient()->field().characteristic();
      bool local = oracle::local_criterion_check(*mono, c, p);
      bool locus = oracle::ncm_verdict(*mono, c, p);
      auto& o = r.node.child("oracle");
      o.set("local_criterion", local);
      o.set("ncm_locus", locus);
      agreement(r, local == rep.verdict && locus == rep.verdict);
    }
  }

  void oracle_query(const Query& q, QueryResult& r) {
    const FPModule& m = module(q);
    if (!m.ring().is_polynomial_ring()) throw UnsupportedRoute("oracle needs the ambient polynomial ring");
    auto mono = oracle::MonomialIdeal::from_cyclic_module(m);
    if (!mono) throw UnsupportedRoute("oracle needs a cyclic monomial module S/I");
    const auto& names = m.ambient()->variables();
    const std::uint32_t p = m.ambient()->field().characteristic();
    r.node.set("ideal", mono->to_string(names));
    auto& ass = r.node.child("associated_primes");
    for (auto pr : oracle::associated_primes(*mono)) ass.append(oracle::prime_to_string(pr, names));
    auto& mins = r.node.child("minimal_primes");
    for (auto pr : oracle::minimal_primes(*mono)) mins.append(oracle::prime_to_string(pr, names));
    const int dim = oracle::dimension(*mono);
    const int depth = oracle::monomial_depth(*mono, p);
    r.node.set("dim", dim);
    r.node.set("depth", depth);
    r.node.set("cohen_macaulay", oracle::is_cohen_macaulay(*mono, p));
    r.summary = "dim " + std::to_string(dim) + ", depth " + std::to_string(depth);
    if (mono->num_vars() <= oracle::kMaxSweepVars) {
      std::string locus = oracle::ncm_locus_monomial(*mono, p).to_string(names);
      r.node.set("ncm_locus", locus);
      r.summary += ", ncm locus V" + locus;
      if (q.serre_class) {
        bool local = oracle::local_criterion_check(*mono, cls(q), p);
        bool ncm = oracle::ncm_verdict(*mono, cls(q), p);
        r.node.set("class", cls(q).to_string());
        r.node.set("local_criterion", local);
        r.node.set("ncm_verdict", ncm);
        r.summary += std::string(", verdict ") + (local ? "true" : "false");
        if (local != ncm) r.oracle_disagreement = true;
      }
    }
  }

  const Program& prog_;
  const RunOptions& opts_;
};

std::string format_millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

Program check(const Script& script) { return Checker().run(script); }

RunResult run(const Program& program, const RunOptions& options) {
  RunResult out;
  if (program.queries.empty()) out.warnings.push_back("no queries");
  Executor exec(program, options);
  for (const auto& step : program.queries) {
    QueryResult r = exec.execute(step);
    if (r.engine_error) out.exit_code = std::max<int>(out.exit_code, kExitEngine);
    if (r.oracle_disagreement) out.exit_code = kExitOracle;
    out.queries.push_back(std::move(r));
  }
  return out;
}

ReportNode RunResult::tree() const {
  ReportNode root;
  root.set("queries", queries.size());
  if (!warnings.empty()) {
    auto& w = root.child("warnings");
    for (const auto& s : warnings) w.append(s);
  }
  if (!queries.empty()) {
    auto& q = root.child("query");
    for (const auto& r : queries) q.child(std::to_string(q.entries().size() + 1)) = r.node;
  }
  root.set("exit", exit_code);
  return root;
}

std::string RunResult::machine() const { return to_machine(tree()); }

std::string RunResult::text(bool timing) const {
  std::string out;
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  for (const auto& r : queries) {
    out += r.node.find("source")->value() + ": " + r.summary + "\n";
    ReportNode details;
    for (const auto& [k, v] : r.node.entries()) {
      if (k == "source" || k == "kind") continue;
      if (v.is_leaf()) details.set(k, v.value());
      else details.child(k) = v;
    }
    out += to_text(details, 2);
    if (timing) out += "  time: " + format_millis(r.millis) + " ms\n";
  }
  return out;
}

}  // namespace serre::dsl
