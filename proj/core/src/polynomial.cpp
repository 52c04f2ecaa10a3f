#include "serre/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "serre/errors.hpp"

namespace serre {

PolynomialRing::PolynomialRing(PrimeField field, std::vector<std::string> variables,
                               MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  if (vars_.empty()) throw PreconditionError("a ring needs at least one variable");
  if (vars_.size() > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxUserVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
  if (order_.kind() == OrderKind::Block && order_.block_size() > vars_.size()) {
    throw PreconditionError("block order splits beyond the number of variables");
  }
}

RingPtr PolynomialRing::make(std::uint32_t p, std::vector<std::string> variables,
                             MonomialOrder order) {
  return std::make_shared<const PolynomialRing>(PrimeField(p), std::move(variables), order);
}

int PolynomialRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr PolynomialRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolynomialRing>(field_, vars_, order);
}

RingPtr PolynomialRing::with_elimination_vars(std::size_t count) const {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < count; ++i) vars.push_back("_t" + std::to_string(i));
  vars.insert(vars.end(), vars_.begin(), vars_.end());
  return std::make_shared<const PolynomialRing>(field_, std::move(vars), MonomialOrder::block(count));
}

bool PolynomialRing::operator==(const PolynomialRing& other) const {
  return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
}

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) {
    throw DescriptorMismatch("polynomials belong to different rings");
  }
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(std::move(ring));
  Coeff v = p.ring_->field().from_int(c);
  if (v != 0) p.terms_.push_back({Monomial(), v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int power) {
  if (index >= ring->num_vars()) throw PreconditionError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index, power), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->field().characteristic();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring_->order();
  const auto& field = p.ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    t.coeff %= field.characteristic();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = order.compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Coeff s = field.add(terms_[i].coeff, other.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), other.terms_.begin() + static_cast<std::ptrdiff_t>(j),
                  other.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const auto& field = ring_->field();
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) products.push_back({a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  }
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coeff));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->field() != ring_->field() || target->variables() != ring_->variables()) {
    throw DescriptorMismatch("in_ring: target ring has different variables or field");
  }
  return from_terms(target, terms_);
}

Polynomial Polynomial::embedded(const RingPtr& target, int offset) const {
  if (target->field() != ring_->field()) throw DescriptorMismatch("embedded: field mismatch");
  std::vector<Term> moved;
  moved.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono.shifted(offset);
    if (m.support() >> target->num_vars()) {
      throw PreconditionError("embedded: monomial does not fit the target ring");
    }
    moved.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(moved));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  const auto& field = ring_->field();
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field.to_signed(t.coeff);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) out << "*";
      out << ring_->variables()[i];
      if (e > 1) out << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  DivisionResult result;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (!same_ring(g.ring(), ring)) throw DescriptorMismatch("divisor over a different ring");
    result.quotients.emplace_back(ring);
  }
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& glt = divisors[i].lead();
      if (!glt.mono.divides(lt.mono)) continue;
      Monomial m = lt.mono / glt.mono;
      Coeff c = field.div(lt.coeff, glt.coeff);
      quotient_terms[i].push_back({m, c});
      p = p - divisors[i].times(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back(lt);
      p = p - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    result.quotients[i] = Polynomial::from_terms(ring, std::move(quotient_terms[i]));
  }
  result.remainder = Polynomial::from_terms(ring, std::move(remainder_terms));
  return result;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  auto d = divide(f, {g});
  if (!d.remainder.is_zero()) {
    throw PreconditionError(g.to_string() + " does not divide " + f.to_string());
  }
  return d.quotients.front();
}

}  // namespace serre
