#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "serre/field.hpp"
#include "serre/monomial.hpp"

namespace serre {

/// Ambient polynomial ring GF(p)[x_1..x_n] with its active monomial order.
class PolynomialRing {
 public:
  PolynomialRing(PrimeField field, std::vector<std::string> variables,
                 MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const PolynomialRing> make(std::uint32_t p,
                                                    std::vector<std::string> variables,
                                                    MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return field_; }
  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  /// Same variables and field under another order.
  std::shared_ptr<const PolynomialRing> with_order(MonomialOrder order) const;
  /// Prepends `count` fresh variables and uses block(count) to eliminate them.
  std::shared_ptr<const PolynomialRing> with_elimination_vars(std::size_t count) const;

  bool operator==(const PolynomialRing& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

struct Term {
  Monomial mono;
  Coeff coeff = 0;
};

/// Sparse polynomial; terms are kept strictly decreasing in the ring's order with
/// no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index, int power = 1);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Builds from arbitrary terms: sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }

  /// Leading term; polynomial must be nonzero.
  const Term& lead() const { return terms_.front(); }
  /// Total degree of the highest-degree term, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// Re-expresses the same polynomial in a ring with identical variables and field.
  Polynomial in_ring(const RingPtr& target) const;
  /// Moves variable indices by `offset` into `target` (used for elimination rings).
  Polynomial embedded(const RingPtr& target, int offset) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Result of multivariate division: f = sum q_i g_i + r.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division by an ordered list of nonzero divisors in the ring's order.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Exact quotient f / g; throws PreconditionError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace serre
