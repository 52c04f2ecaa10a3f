#pragma once

#include <string>
#include <vector>

#include "serre/fpmodule.hpp"

namespace serre {

/// Cochain complex K^•(x; M) = Hom(K_•(x), M). Layer i is M^{C(r,i)}, indexed by
/// the i-subsets of {0..r-1} in lexicographic order, each block of width rank0(M).
class KoszulComplex {
 public:
  KoszulComplex(std::vector<Polynomial> elements, FPModule module);

  std::size_t length() const { return elements_.size(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const FPModule& module() const { return module_; }

  /// Rank of the free cover of layer i.
  std::size_t layer_rank(std::size_t i) const;
  std::vector<int> layer_shifts(std::size_t i) const;
  /// Images of the basis of layer i in layer i+1 (0 <= i < r).
  std::vector<Column> differential(std::size_t i) const;

  /// H^i as a finitely presented module; zero outside 0..r.
  FPModule cohomology(std::size_t i) const;

  /// d^{i+1} ∘ d^i = 0 over S for every i.
  bool verify_differentials() const;

 private:
  std::vector<Column> layer_relations(std::size_t i) const;

  std::vector<Polynomial> elements_;
  FPModule module_;
  std::vector<std::vector<std::vector<std::size_t>>> subsets_;  // subsets_[i] = i-subsets
};

/// H^i(K^•(x; M)); an index above r yields the zero module and a warning.
FPModule koszul_cohomology(std::size_t i, const std::vector<Polynomial>& elements,
                           const FPModule& module, std::vector<std::string>* warnings = nullptr);

}  // namespace serre
