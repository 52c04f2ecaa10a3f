#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace serre {

/// Maximum number of variables a user ring may declare.
inline constexpr std::size_t kMaxUserVars = 16;
/// Internal capacity; leaves room for the auxiliary variables used by elimination.
inline constexpr std::size_t kMaxVars = 18;

/// Dense exponent vector. Unused trailing slots are zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Overflow-checked product; throws std::overflow_error past 65535 per variable.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  /// Moves every exponent `offset` slots up (positive) or down (negative).
  Monomial shifted(int offset) const;

  bool operator==(const Monomial&) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

enum class OrderKind { Lex, GRevLex, Block };

/// Monomial order on a polynomial ring. `Block(k)` compares the first k variables
/// by grevlex, then the remaining ones by grevlex; it eliminates the first block.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static constexpr MonomialOrder grevlex() { return MonomialOrder(OrderKind::GRevLex, 0); }
  static constexpr MonomialOrder block(std::size_t k) { return MonomialOrder(OrderKind::Block, k); }

  OrderKind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  bool degree_compatible() const { return kind_ == OrderKind::GRevLex; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  constexpr MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}

  OrderKind kind_ = OrderKind::GRevLex;
  std::size_t block_ = 0;
};

}  // namespace serre

template <>
struct std::hash<serre::Monomial> {
  std::size_t operator()(const serre::Monomial& m) const { return m.hash(); }
};
