#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "serre/groebner.hpp"
#include "serre/polynomial.hpp"

namespace serre {

/// Ideal of the ambient polynomial ring S. Ideals of a quotient R = S/J are
/// represented by their preimages (generators include J).
/// The Groebner basis in the ring's order is computed once, on first use, and
/// shared by all copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal generated by all variables.
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& groebner() const;
  /// Reduced basis in the given order (not cached).
  GroebnerBasis groebner(MonomialOrder order) const;

  Polynomial normal_form(const Polynomial& f) const { return groebner().normal_form(f); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  bool is_homogeneous() const;
  /// True iff every generator is a single term.
  bool is_monomial() const;

  /// Equality of ideals via comparison of reduced bases.
  bool same_ideal(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  /// Reduced basis listed by decreasing leading term, e.g. "(y,z)".
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// I ∩ J, by eliminating t from t·I + (1 − t)·J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Outcome of a colon computation; `by_zero` flags the (I : 0) = (1) convention.
struct ColonResult {
  Ideal ideal;
  bool by_zero = false;
};

/// (I : J) = ∩ over generators g of J of (I ∩ (g)) / g.
ColonResult ideal_colon(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& a, const Polynomial& g);

/// I : J^∞ by iterated colons.
Ideal saturation(const Ideal& a, const Ideal& b);

/// f ∈ √I via the Rabinowitsch trick: 1 ∈ I + (1 − t·f).
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// dim S/I from the largest set of variables independent modulo in(I) (grevlex);
/// −1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

}  // namespace serre
