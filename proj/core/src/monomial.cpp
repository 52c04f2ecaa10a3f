#include "serre/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "serre/errors.hpp"

namespace serre {

namespace {

constexpr int kMaxExponent = 65535;

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  int da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw PreconditionError("too many exponents for a monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > kMaxExponent) throw std::overflow_error("exponent out of range");
  degree_ = degree_ - exp_[i] + static_cast<std::uint32_t>(e);
  exp_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int e = exp_[i] + other.exp_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow in monomial product");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0) s |= 1u << i;
  }
  return s;
}

Monomial Monomial::shifted(int offset) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] == 0) continue;
    int j = static_cast<int>(i) + offset;
    if (j < 0 || j >= static_cast<int>(kMaxVars)) {
      throw PreconditionError("monomial shift moves a nonzero exponent out of range");
    }
    r.exp_[static_cast<std::size_t>(j)] = exp_[i];
  }
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::GRevLex:
      return grevlex_range(a, b, 0, kMaxVars);
    case OrderKind::Block: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, kMaxVars);
    }
  }
  return 0;
}

}  // namespace serre
