#pragma once

#include <cstdint>
#include <string>

namespace serre {

using Coeff = std::uint32_t;

/// Deterministic primality test for 32-bit integers.
bool is_prime(std::uint64_t n);

/// The prime field GF(p), 2 <= p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  /// Throws PreconditionError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 101);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse; `a` must be nonzero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Maps an arbitrary signed integer to its residue.
  Coeff from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2], used for display.
  std::int64_t to_signed(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace serre
