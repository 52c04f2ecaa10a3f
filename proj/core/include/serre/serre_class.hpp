#pragma once

#include <optional>
#include <string>

#include "serre/fpmodule.hpp"
#include "serre/ideal.hpp"

namespace serre {

/// A Serre class with decidable membership on finitely presented modules:
/// the zero class, modules of dimension at most j, or modules supported in V(b).
class SerreClass {
 public:
  enum class Kind { ZeroOnly, DimLE, SuppInV };

  static SerreClass zero_only() { return SerreClass(Kind::ZeroOnly, 0, std::nullopt); }
  /// Throws PreconditionError for negative j.
  static SerreClass dim_le(int j);
  /// Throws PreconditionError unless b is proper and nonzero.
  static SerreClass supp_in(Ideal b);

  Kind kind() const { return kind_; }
  int bound() const { return bound_; }
  /// Support ideal of a SuppInV class.
  const Ideal& support_ideal() const { return *ideal_; }

  /// M ∈ S: zero test, dimension bound, or b ⊆ √Ann M.
  bool contains(const FPModule& module) const;
  /// R/p ∈ S for a prime p, without building the module.
  bool contains_prime(const Ideal& prime) const;

  /// Short description, e.g. "dim_le(1)" or "supp_in(x,y)".
  std::string to_string() const;

 private:
  SerreClass(Kind kind, int bound, std::optional<Ideal> ideal)
      : kind_(kind), bound_(bound), ideal_(std::move(ideal)) {}

  Kind kind_;
  int bound_;
  std::optional<Ideal> ideal_;
};

}  // namespace serre
