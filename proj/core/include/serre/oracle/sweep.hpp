#pragma once

#include <string>
#include <vector>

#include "serre/grade.hpp"
#include "serre/oracle/monomial_ideal.hpp"
#include "serre/serre_class.hpp"

namespace serre::oracle {

/// Sweep over monomial primes is capped at this many variables.
inline constexpr std::size_t kMaxSweepVars = 6;

/// R/P ∈ S for a monomial prime, decided from the mask alone.
bool prime_in_class(const SerreClass& cls, PrimeMask prime, std::size_t nvars);

/// Data gathered at one monomial prime P ⊇ I.
struct PrimeRecord {
  PrimeMask prime = 0;
  int height = 0;          // dim M_P
  int coheight = 0;        // dim R/P
  bool cohen_macaulay = true;
  bool in_class = false;   // R/P ∈ S
};

/// Every monomial prime containing I, with localization data.
std::vector<PrimeRecord> sweep_support(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p);

/// M_P Cohen-Macaulay and ht_M(P) + dim R/P = dim M at every swept P with R/P ∉ S.
bool local_criterion_check(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p);

/// Radical monomial ideal cutting out the non-CM locus; (1) when empty.
MonomialIdeal ncm_locus_monomial(const MonomialIdeal& ideal, std::uint32_t p);
/// Minimal primes of the non-CM locus.
std::vector<PrimeMask> ncm_minimal_primes(const MonomialIdeal& ideal, std::uint32_t p);

/// R/a_M ∈ S and dim R/P = dim M for every minimal prime of S-Supp M.
bool ncm_verdict(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p);

/// inf of ht_M(q) over monomial q ⊇ a + I with R/q ∉ S.
GradeValue oracle_s_height(const MonomialIdeal& a, const MonomialIdeal& ideal, const SerreClass& cls,
                           std::uint32_t p);
/// sup of dim R/q over monomial q ⊇ I with R/q ∉ S; −inf when none qualify.
GradeValue oracle_s_dimension(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p);

}  // namespace serre::oracle
