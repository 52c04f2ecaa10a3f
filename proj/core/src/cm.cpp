#include "serre/cm.hpp"

#include "serre/errors.hpp"
#include "serre/oracle/monomial_ideal.hpp"
#include "serre/oracle/sweep.hpp"

namespace serre {

std::string to_string(CMRoute route) {
  switch (route) {
    case CMRoute::Duality:
      return "duality";
    case CMRoute::OracleLocal:
      return "oracle-local";
    case CMRoute::OracleLocus:
      return "oracle-locus";
  }
  return "";
}

AInvariant a_invariant(const FPModule& module) {
  const RingDescriptor& ring = module.ring();
  if (!ring.is_polynomial_ring()) throw UnsupportedRoute("a(M) is computed over the ambient polynomial ring only");
  if (!module.is_homogeneous()) throw GradedInputError("a(M) needs a graded presentation");
  const RingPtr& S = ring.ambient();
  AInvariant out;
  out.ideal = Ideal::unit(S);
  out.dimension = module_dimension(module);
  const int d = out.dimension;
  if (d <= 0) return out;
  const std::size_t n = ring.num_vars();
  auto exts = ext_modules(module, FPModule::free(ring, 1), n);
  for (int i = 0; i < d; ++i) {
    AInvariantPart part;
    part.local_index = static_cast<std::size_t>(i);
    part.ext_index = n - static_cast<std::size_t>(i);
    part.annihilator = annihilator(exts[part.ext_index]);
    out.ideal = out.ideal * part.annihilator;
    out.parts.push_back(std::move(part));
  }
  return out;
}

CMReport s_cm_test(const FPModule& module, const SerreClass& cls) {
  AInvariant inv = a_invariant(module);
  CMReport report;
  report.dimension = inv.dimension;
  report.a = inv.ideal;
  report.parts = inv.parts;
  report.quotient_dimension = krull_dimension(inv.ideal);
  report.serre_class = cls;
  report.route = CMRoute::Duality;
  report.verdict = cls.contains(cyclic_module(module.ring(), inv.ideal));
  report.notes.push_back("a_i(M) = Ann Ext^{n-i}(M,S) by graded local duality");
  return report;
}

namespace {

oracle::MonomialIdeal monomial_annihilator(const FPModule& module) {
  if (auto cyclic = oracle::MonomialIdeal::from_cyclic_module(module)) return *cyclic;
  return oracle::MonomialIdeal::from_ideal(annihilator(module));
}

}  // namespace

GradeValue s_height(const Ideal& a, const FPModule& module, const SerreClass& cls) {
  auto ann = monomial_annihilator(module);
  auto ma = oracle::MonomialIdeal::from_ideal(a);
  return oracle::oracle_s_height(ma, ann, cls, module.ambient()->field().characteristic());
}

GradeValue s_dimension(const FPModule& module, const SerreClass& cls) {
  return oracle::oracle_s_dimension(monomial_annihilator(module), cls,
                                    module.ambient()->field().characteristic());
}

QuotientStabilityReport quotient_stability_check(const FPModule& module, const Polynomial& x, const SerreClass& cls) {
  QuotientStabilityReport report;
  report.module_cm = s_cm_test(module, cls).verdict;
  report.weak_element = check_weak_sequence({x}, module, cls).weak;
  FPModule quotient = module.quotient_by({x});
  const int qdim = module_dimension(quotient);
  auto mono = oracle::MonomialIdeal::from_cyclic_module(quotient);
  if (mono && mono->num_vars() <= oracle::kMaxSweepVars) {
    report.assh_from_oracle = true;
    for (const auto& rec : oracle::sweep_support(*mono, cls, module.ambient()->field().characteristic())) {
      if (!rec.in_class && rec.coheight == qdim) report.top_prime_outside_class = true;
    }
  } else if (!quotient.is_zero()) {
    switch (cls.kind()) {
      case SerreClass::Kind::ZeroOnly:
        report.top_prime_outside_class = true;
        break;
      case SerreClass::Kind::DimLE:
        report.top_prime_outside_class = qdim > cls.bound();
        break;
      case SerreClass::Kind::SuppInV: {
        // top-dimensional components not containing b survive saturation by b
        Ideal sat = saturation(annihilator(quotient), cls.support_ideal());
        report.top_prime_outside_class = krull_dimension(sat) == qdim;
        break;
      }
    }
  }
  report.quotient_cm = s_cm_test(quotient, cls).verdict;
  return report;
}

}  // namespace serre
