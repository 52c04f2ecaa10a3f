#include "serre/grade.hpp"

#include <algorithm>
#include <random>

#include "serre/koszul.hpp"

namespace serre {

int GradeValue::value() const {
  if (kind_ != Kind::Finite) throw PreconditionError("grade value is infinite");
  return value_;
}

std::string GradeValue::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(value_);
    case Kind::PlusInfinity:
      return "+inf";
    case Kind::MinusInfinity:
      return "-inf";
  }
  return "";
}

bool GradeValue::operator<=(const GradeValue& other) const {
  if (kind_ == Kind::MinusInfinity || other.kind_ == Kind::PlusInfinity) return true;
  if (kind_ == Kind::PlusInfinity || other.kind_ == Kind::MinusInfinity) return false;
  return value_ <= other.value_;
}

std::string to_string(GradeRoute route) {
  switch (route) {
    case GradeRoute::Koszul:
      return "koszul";
    case GradeRoute::Ext:
      return "ext";
    case GradeRoute::Sequence:
      return "sequence";
  }
  return "";
}

namespace {

LayerWitness inspect_layer(std::size_t index, const FPModule& layer, const SerreClass& cls) {
  LayerWitness w;
  w.index = index;
  if (layer.is_zero()) {
    w.dimension = -1;
    w.in_class = true;
    return w;
  }
  w.dimension = module_dimension(layer);
  w.in_class = cls.kind() == SerreClass::Kind::DimLE ? w.dimension <= cls.bound() : cls.contains(layer);
  return w;
}

void check_ring(const RingDescriptor& ring, const RingPtr& other, const char* what) {
  if (!(*ring.ambient() == *other)) throw DescriptorMismatch(std::string(what) + ": ideal and module rings differ");
}

// All monomials of total degree d in n variables.
void monomials_of_degree(std::size_t n, int d, std::size_t var, std::vector<int>& exps,
                         std::vector<Monomial>& out) {
  if (var + 1 == n) {
    exps[var] = d;
    out.emplace_back(std::span<const int>(exps.data(), n));
    exps[var] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    exps[var] = e;
    monomials_of_degree(n, d - e, var + 1, exps, out);
  }
  exps[var] = 0;
}

Polynomial random_element(const std::vector<Polynomial>& gens, const RingPtr& ring, int degree,
                          std::mt19937_64& rng) {
  const PrimeField& F = ring->field();
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.characteristic() - 1);
  Polynomial out(ring);
  const std::size_t n = ring->num_vars();
  for (const auto& g : gens) {
    int gap = degree - g.degree();
    if (gap < 0) continue;
    std::vector<Monomial> monos;
    if (n == 0) {
      if (gap == 0) monos.emplace_back();
    } else {
      std::vector<int> exps(n, 0);
      monomials_of_degree(n, gap, 0, exps, monos);
    }
    for (const auto& m : monos) {
      Coeff c = coeff(rng);
      if (c != 0) out = out + g.times(m, c);
    }
  }
  return out;
}

}  // namespace

GradeReport koszul_grade(const std::vector<Polynomial>& elements, const FPModule& module,
                         const SerreClass& cls) {
  for (const auto& x : elements) check_ring(module.ring(), x.ring(), "koszul_grade");
  GradeReport report;
  report.route = GradeRoute::Koszul;
  report.serre_class = cls;
  KoszulComplex complex(elements, module.pruned());
  for (std::size_t i = 0; i <= complex.length(); ++i) {
    LayerWitness w = inspect_layer(i, complex.cohomology(i), cls);
    report.layers.push_back(w);
    if (!w.in_class) {
      report.value = GradeValue::finite(static_cast<int>(i));
      return report;
    }
  }
  report.value = GradeValue::plus_infinity();
  report.empty_inf = true;
  report.notes.push_back("every Koszul cohomology layer lies in the class");
  return report;
}

GradeReport koszul_grade(const Ideal& a, const FPModule& module, const SerreClass& cls) {
  return koszul_grade(a.generators(), module, cls);
}

GradeReport ext_grade(const Ideal& a, const FPModule& module, const SerreClass& cls) {
  check_ring(module.ring(), a.ring(), "ext_grade");
  if (!module.ring().is_polynomial_ring()) {
    throw UnsupportedRoute("ext_grade needs the ambient polynomial ring; use koszul_grade over a quotient ring");
  }
  GradeReport report;
  report.route = GradeRoute::Ext;
  report.serre_class = cls;
  const std::size_t n = module.ring().num_vars();
  FPModule target = module.pruned();
  if (target.rank0() > 0) {
    auto exts = ext_modules(cyclic_module(module.ring(), a), target, n);
    for (std::size_t i = 0; i <= n; ++i) {
      LayerWitness w = inspect_layer(i, exts[i], cls);
      report.layers.push_back(w);
      if (!w.in_class) {
        report.value = GradeValue::finite(static_cast<int>(i));
        report.notes.push_back("local cohomology grade equals this value (class closed under direct sums)");
        return report;
      }
    }
  }
  report.value = GradeValue::plus_infinity();
  report.empty_inf = true;
  report.notes.push_back("every Ext layer lies in the class");
  return report;
}

WeakSequenceReport check_weak_sequence(const std::vector<Polynomial>& elements, const FPModule& module,
                                       const SerreClass& cls) {
  for (const auto& x : elements) check_ring(module.ring(), x.ring(), "check_weak_sequence");
  WeakSequenceReport report;
  std::vector<Polynomial> prefix;
  for (const auto& x : elements) {
    WeakSequenceStep step;
    step.element = x;
    LayerWitness w = inspect_layer(prefix.size(), colon_step_module(module, prefix, x), cls);
    step.in_class = w.in_class;
    step.colon_dimension = w.dimension;
    report.weak = report.weak && w.in_class;
    report.steps.push_back(std::move(step));
    prefix.push_back(x);
  }
  report.quotient_outside_class = !cls.contains(module.quotient_by(elements));
  return report;
}

GradeReport find_max_weak_sequence(const Ideal& a, const FPModule& module, const SerreClass& cls,
                                   std::uint64_t seed, std::size_t budget) {
  GradeReport reference = koszul_grade(a, module, cls);
  if (!reference.value.is_finite()) {
    throw PreconditionError("witness search needs a finite Koszul grade, got " + reference.value.to_string());
  }
  const int target = reference.value.value();
  const RingPtr& S = module.ambient();
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  int min_degree = 0;
  if (!gens.empty()) {
    min_degree = gens.front().degree();
    for (const auto& g : gens) min_degree = std::min(min_degree, g.degree());
  }

  std::mt19937_64 rng(seed);
  const std::size_t per_degree = std::max<std::size_t>(1, budget / 4);
  std::vector<Polynomial> chosen;
  while (static_cast<int>(chosen.size()) < target) {
    bool found = false;
    for (std::size_t attempt = 0; attempt < budget && !found; ++attempt) {
      int degree = min_degree + static_cast<int>(attempt / per_degree);
      Polynomial cand = random_element(gens, S, degree, rng);
      if (cand.is_zero()) continue;
      if (cls.contains(colon_step_module(module, chosen, cand))) {
        chosen.push_back(cand);
        found = true;
      }
    }
    if (!found) {
      throw WitnessSearchFailure("witness search exhausted its budget after " + std::to_string(chosen.size()) +
                                     " of " + std::to_string(target) + " elements",
                                 chosen, reference.value);
    }
  }

  GradeReport report;
  report.route = GradeRoute::Sequence;
  report.serre_class = cls;
  report.value = GradeValue::finite(target);
  report.sequence = chosen;
  report.notes.push_back("sequence length matches the Koszul grade");
  return report;
}

GradeReport classical_grade(const Ideal& a, const FPModule& module, const SerreClass& cls,
                            std::uint64_t seed, std::size_t budget) {
  GradeReport reference = koszul_grade(a, module, cls);
  if (!reference.value.is_finite()) {
    reference.notes.push_back(
        "all Koszul layers lie in the class: reporting the Koszul value, a sup-based convention could differ");
    reference.name = "classical grade";
    return reference;
  }
  try {
    GradeReport report = find_max_weak_sequence(a, module, cls, seed, budget);
    report.name = "classical grade";
    return report;
  } catch (const WitnessSearchFailure& e) {
    reference.name = "classical grade";
    reference.notes.push_back(std::string("witness search failed: ") + e.what());
    return reference;
  }
}

GradeReport named_depth(NamedDepth kind, const Ideal& a, const FPModule& module, int j,
                        const std::optional<Ideal>& b) {
  GradeReport report;
  switch (kind) {
    case NamedDepth::FDepth:
      report = koszul_grade(a, module, SerreClass::dim_le(0));
      report.name = "f-depth";
      break;
    case NamedDepth::GDepth:
      report = koszul_grade(a, module, SerreClass::dim_le(1));
      report.name = "g-depth";
      break;
    case NamedDepth::TjDepth:
      report = koszul_grade(a, module, SerreClass::dim_le(j));
      report.name = "T" + std::to_string(j) + "-depth";
      break;
    case NamedDepth::TbGrade:
      if (!b) throw PreconditionError("b-filter grade needs an ideal b");
      report = koszul_grade(a, module, SerreClass::supp_in(*b));
      report.name = "b-filter grade";
      break;
  }
  return report;
}

GradeReport f_depth(const Ideal& a, const FPModule& module) { return named_depth(NamedDepth::FDepth, a, module); }
GradeReport g_depth(const Ideal& a, const FPModule& module) { return named_depth(NamedDepth::GDepth, a, module); }

}  // namespace serre
