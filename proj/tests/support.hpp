#pragma once

// Small helpers shared by the unit and acceptance tests.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "serre/cm.hpp"
#include "serre/dsl/interpreter.hpp"
#include "serre/fpmodule.hpp"
#include "serre/grade.hpp"
#include "serre/ideal.hpp"
#include "serre/serre_class.hpp"

namespace serre::testing {

inline RingPtr make_ring(std::vector<std::string> vars, std::uint32_t p = 101,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return PolynomialRing::make(p, std::move(vars), order);
}

inline RingPtr xy(std::uint32_t p = 101) { return make_ring({"x", "y"}, p); }
inline RingPtr xyz(std::uint32_t p = 101) { return make_ring({"x", "y", "z"}, p); }
inline RingPtr xyzw(std::uint32_t p = 101) { return make_ring({"x", "y", "z", "w"}, p); }

inline Polynomial poly(const RingPtr& ring, std::string_view text) {
  return dsl::parse_polynomial(text, ring);
}

inline std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(poly(ring, t));
  return out;
}

inline Ideal ideal(const RingPtr& ring, std::initializer_list<std::string_view> texts) {
  return Ideal(ring, polys(ring, texts));
}

inline FPModule quotient(const RingPtr& ring, std::initializer_list<std::string_view> texts) {
  return cyclic_module(RingDescriptor(ring), ideal(ring, texts));
}

inline FPModule free_module(const RingPtr& ring, std::size_t rank = 1) {
  return FPModule::free(RingDescriptor(ring), rank);
}

// Random homogeneous polynomial of degree d with about `terms` terms.
inline Polynomial random_form(const RingPtr& ring, int d, std::size_t terms, std::mt19937_64& rng) {
  const std::size_t n = ring->num_vars();
  const std::uint32_t p = ring->field().characteristic();
  Polynomial f(ring);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < d; ++k) e[rng() % n]++;
    Coeff c = static_cast<Coeff>(rng() % p);
    if (c == 0) c = 1;
    f = f + Polynomial::monomial(ring, Monomial(std::span<const int>(e)), c);
  }
  return f;
}

// Random, not necessarily homogeneous, polynomial with degree ≤ d.
inline Polynomial random_poly(const RingPtr& ring, int d, std::size_t terms, std::mt19937_64& rng) {
  Polynomial f(ring);
  for (std::size_t t = 0; t < terms; ++t) {
    f = f + random_form(ring, static_cast<int>(rng() % (d + 1)), 1, rng);
  }
  return f;
}

inline std::vector<SerreClass> standard_classes(const RingPtr& ring, const Ideal& b) {
  (void)ring;
  return {SerreClass::zero_only(), SerreClass::dim_le(0), SerreClass::dim_le(1), SerreClass::supp_in(b)};
}

}  // namespace serre::testing
