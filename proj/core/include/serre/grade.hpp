#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serre/errors.hpp"
#include "serre/fpmodule.hpp"
#include "serre/serre_class.hpp"

namespace serre {

/// Integer with explicit ±∞ sentinels.
class GradeValue {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity };

  static GradeValue finite(int v) { return GradeValue(Kind::Finite, v); }
  static GradeValue plus_infinity() { return GradeValue(Kind::PlusInfinity, 0); }
  static GradeValue minus_infinity() { return GradeValue(Kind::MinusInfinity, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Throws PreconditionError on a sentinel.
  int value() const;

  std::string to_string() const;  // "3", "+inf", "-inf"
  bool operator==(const GradeValue&) const = default;
  bool operator<=(const GradeValue& other) const;

 private:
  GradeValue(Kind kind, int v) : kind_(kind), value_(v) {}
  Kind kind_;
  int value_;
};

enum class GradeRoute { Koszul, Ext, Sequence };
std::string to_string(GradeRoute route);

/// Per-index witness of a cohomology scan: dimension of the layer (−1 when zero).
struct LayerWitness {
  std::size_t index = 0;
  int dimension = -1;
  bool in_class = true;
};

struct GradeReport {
  GradeValue value = GradeValue::plus_infinity();
  GradeRoute route = GradeRoute::Koszul;
  SerreClass serre_class = SerreClass::zero_only();
  std::string name = "grade";
  std::vector<LayerWitness> layers;    // Koszul/Ext routes
  std::vector<Polynomial> sequence;    // sequence route
  bool empty_inf = false;              // value came from inf ∅
  std::vector<std::string> notes;
};

/// inf{i : H^i(K^•(gens a; M)) ∉ S}.
GradeReport koszul_grade(const Ideal& a, const FPModule& module, const SerreClass& cls);
/// Same grade from an explicit element list.
GradeReport koszul_grade(const std::vector<Polynomial>& elements, const FPModule& module,
                         const SerreClass& cls);

/// inf{i : Ext^i_S(S/a, M) ∉ S}; the ring must have no quotient ideal.
GradeReport ext_grade(const Ideal& a, const FPModule& module, const SerreClass& cls);

struct WeakSequenceStep {
  Polynomial element;
  bool in_class = false;
  int colon_dimension = -1;
};

struct WeakSequenceReport {
  std::vector<WeakSequenceStep> steps;
  bool weak = true;                    // every step passes
  bool quotient_outside_class = false;  // M/(x)M ∉ S
  bool is_sequence() const { return weak && quotient_outside_class; }
};

WeakSequenceReport check_weak_sequence(const std::vector<Polynomial>& elements, const FPModule& module,
                                       const SerreClass& cls);

/// Raised when the random search cannot reach the target length within budget.
class WitnessSearchFailure : public AlgebraError {
 public:
  WitnessSearchFailure(const std::string& what, std::vector<Polynomial> partial, GradeValue target)
      : AlgebraError(what), partial_(std::move(partial)), target_(target) {}
  const std::vector<Polynomial>& partial() const { return partial_; }
  GradeValue target() const { return target_; }

 private:
  std::vector<Polynomial> partial_;
  GradeValue target_;
};

/// A weak M-sequence in a of length koszul_grade(a, M, S), drawn from seeded
/// random combinations of the generators. `budget` is the attempts per step.
GradeReport find_max_weak_sequence(const Ideal& a, const FPModule& module, const SerreClass& cls,
                                   std::uint64_t seed, std::size_t budget = 64);

/// Classical grade (sup of sequence lengths) from the witness search, falling
/// back to the Koszul value with a note when the search fails.
GradeReport classical_grade(const Ideal& a, const FPModule& module, const SerreClass& cls,
                            std::uint64_t seed, std::size_t budget = 64);

enum class NamedDepth { FDepth, GDepth, TjDepth, TbGrade };

/// f-depth, g-depth, T_j-depth and b-filter grade as Koszul grades.
GradeReport named_depth(NamedDepth kind, const Ideal& a, const FPModule& module, int j = 0,
                        const std::optional<Ideal>& b = std::nullopt);
GradeReport f_depth(const Ideal& a, const FPModule& module);
GradeReport g_depth(const Ideal& a, const FPModule& module);

}  // namespace serre
