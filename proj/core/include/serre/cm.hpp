#pragma once

#include <string>
#include <vector>

#include "serre/grade.hpp"

namespace serre {

/// a_i(M) = Ann Ext^{ext_index}(M, S) with ext_index = n − i.
struct AInvariantPart {
  std::size_t local_index = 0;
  std::size_t ext_index = 0;
  Ideal annihilator;
};

struct AInvariant {
  Ideal ideal;
  std::vector<AInvariantPart> parts;
  int dimension = -1;
};

/// a(M) = a_0(M)···a_{d−1}(M) through graded local duality; (1) when d ≤ 0.
/// Throws GradedInputError for an inhomogeneous presentation and
/// UnsupportedRoute over a quotient ring.
AInvariant a_invariant(const FPModule& module);

enum class CMRoute { Duality, OracleLocal, OracleLocus };
std::string to_string(CMRoute route);

struct CMReport {
  int dimension = -1;
  Ideal a;
  std::vector<AInvariantPart> parts;
  int quotient_dimension = -1;  // dim S/a(M)
  bool verdict = false;
  SerreClass serre_class = SerreClass::zero_only();
  CMRoute route = CMRoute::Duality;
  std::vector<std::string> notes;
};

/// M is S-Cohen-Macaulay iff S/a(M) ∈ S.
CMReport s_cm_test(const FPModule& module, const SerreClass& cls);

/// Height of a on M relative to the class; monomial Ann M and a only.
GradeValue s_height(const Ideal& a, const FPModule& module, const SerreClass& cls);
/// sup dim R/q over q ∈ Supp M with R/q ∉ S; monomial Ann M only.
GradeValue s_dimension(const FPModule& module, const SerreClass& cls);

struct QuotientStabilityReport {
  bool module_cm = false;
  bool weak_element = false;
  bool top_prime_outside_class = false;  // some p ∈ Supp(M/xM) of maximal dimension with R/p ∉ S
  bool assh_from_oracle = false;
  bool quotient_cm = false;
  bool hypotheses() const { return module_cm && weak_element && top_prime_outside_class; }
  bool implication_holds() const { return !hypotheses() || quotient_cm; }
};

QuotientStabilityReport quotient_stability_check(const FPModule& module, const Polynomial& x, const SerreClass& cls);

}  // namespace serre
