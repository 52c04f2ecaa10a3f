#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serre/fpmodule.hpp"
#include "serre/ideal.hpp"

namespace serre::oracle {

using Exponents = std::vector<int>;
/// A monomial prime (x_i : i ∈ mask).
using PrimeMask = std::uint32_t;

/// Monomial ideal by exponent vectors; the generating set is kept minimal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Exponents> generators);

  static MonomialIdeal prime(std::size_t nvars, PrimeMask mask);
  /// Throws UnsupportedRoute unless the reduced basis consists of monomials.
  static MonomialIdeal from_ideal(const Ideal& ideal);
  /// S/I for a cyclic module whose relations are monomials, else nullopt.
  static std::optional<MonomialIdeal> from_cyclic_module(const FPModule& module);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Exponents>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  bool contains(const Exponents& m) const;
  bool contains(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& other) const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  /// Largest exponent of each variable over the generators.
  Exponents max_exponents() const;

  Ideal to_ideal(const RingPtr& ring) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Exponents> gens_;
};

/// Irreducible components (x_i^{a_i} : a_i > 0) of an irredundant decomposition,
/// each as an exponent vector with 0 meaning "variable absent".
std::vector<Exponents> irreducible_components(const MonomialIdeal& ideal);

/// Ass(S/I) as radicals of the irreducible components; sorted by mask.
std::vector<PrimeMask> associated_primes(const MonomialIdeal& ideal);
/// Minimal elements of Ass(S/I).
std::vector<PrimeMask> minimal_primes(const MonomialIdeal& ideal);
/// dim S/I; −1 for the unit ideal.
int dimension(const MonomialIdeal& ideal);

/// I·S_P contracted to k[x_i : i ∈ P]: variables outside P are set to 1.
/// The result lives in |P| variables ordered as in P.
MonomialIdeal localize(const MonomialIdeal& ideal, PrimeMask prime);

/// Squarefree polarization; `extra` receives the number of added variables.
MonomialIdeal polarize(const MonomialIdeal& ideal, std::size_t* extra = nullptr);

Ideal prime_ideal(const RingPtr& ring, PrimeMask mask);
std::string prime_to_string(PrimeMask mask, const std::vector<std::string>& names);

}  // namespace serre::oracle
