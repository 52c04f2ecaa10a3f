#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "serre/groebner.hpp"
#include "serre/ideal.hpp"
#include "serre/ring.hpp"

namespace serre {

/// Matrix over S stored by columns; every column has `rows` entries.
struct Matrix {
  std::size_t rows = 0;
  std::vector<Column> cols;

  std::size_t num_cols() const { return cols.size(); }
};

/// Finitely presented graded module M = coker(F1 -> F0) over the ambient ring
/// S. The relation columns always contain J·F0, so M is an R-module for R = S/J.
/// The zero module has rank0 = 0.
class FPModule {
 public:
  FPModule() = default;
  /// Presentation with generator degrees `shifts`; J·e_i columns are appended.
  FPModule(RingDescriptor ring, std::vector<int> shifts, std::vector<Column> relations);

  static FPModule zero(RingDescriptor ring);
  static FPModule free(RingDescriptor ring, std::size_t rank, std::vector<int> shifts = {});
  /// Presentation taken verbatim; the caller guarantees J·F0 lies in the span.
  static FPModule from_parts(RingDescriptor ring, std::vector<int> shifts, std::vector<Column> relations);

  const RingDescriptor& ring() const { return ring_; }
  const RingPtr& ambient() const { return ring_.ambient(); }
  std::size_t rank0() const { return shifts_.size(); }
  const std::vector<int>& shifts() const { return shifts_; }
  const std::vector<Column>& relations() const { return relations_; }
  Matrix presentation() const { return {rank0(), relations_}; }

  /// Groebner basis of the relation submodule (computed once, shared by copies).
  const GroebnerBasis& relation_basis() const;
  /// Membership of an F0 element in the relation submodule.
  bool kills(const Column& v) const;

  bool is_zero() const;
  /// Every relation column is homogeneous with respect to the generator degrees.
  bool is_homogeneous() const;

  /// Same module with unit entries pruned away; zero modules get rank0 = 0.
  FPModule pruned() const;
  /// M / (elements)·M.
  FPModule quotient_by(const std::vector<Polynomial>& elements) const;
  /// Direct sum M ⊕ N.
  FPModule direct_sum(const FPModule& other) const;

  std::string describe() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis basis;
  };

  RingDescriptor ring_;
  std::vector<int> shifts_;
  std::vector<Column> relations_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Minimal free resolution over S: maps[k-1] is F_k -> F_{k-1}.
struct FreeResolution {
  RingDescriptor ring;
  std::vector<std::vector<int>> degrees;  // generator degrees of F_0 .. F_L
  std::vector<Matrix> maps;

  std::size_t length() const { return maps.size(); }
  std::vector<std::size_t> betti_numbers() const;
};

/// Column with a single entry `f` at position `index`.
Column unit_column(const RingPtr& ring, std::size_t rank, std::size_t index,
                   const Polynomial& f);

/// S/I (with J absorbed).
FPModule cyclic_module(const RingDescriptor& ring, const Ideal& ideal);

/// (gens)/(rels) inside a free module of rank `rank`; throws PreconditionError
/// naming the first relation outside the span of `gens`.
FPModule subquotient(const RingDescriptor& ring, std::size_t rank, const std::vector<int>& row_shifts,
                     const std::vector<Column>& gens, const std::vector<Column>& rels);

/// ((x_prev)M :_M x)/(x_prev)M.
FPModule colon_step_module(const FPModule& module, const std::vector<Polynomial>& previous,
                           const Polynomial& element);

/// Homology {v ∈ G : out(v) ∈ rels_H} / (im(in) + rels_G) of a three-term
/// sequence of free modules with module coefficients; `outgoing` lists the images
/// of the basis of G in H.
FPModule homology(const RingDescriptor& ring, const std::vector<int>& g_shifts,
                  const std::vector<Column>& incoming, const std::vector<Column>& outgoing,
                  std::size_t h_rank, const std::vector<int>& h_shifts,
                  const std::vector<Column>& g_relations, const std::vector<Column>& h_relations);

Ideal annihilator(const FPModule& module);
int module_dimension(const FPModule& module);

/// Iterated syzygies with pruning of unit entries; stops early on a zero kernel.
FreeResolution free_resolution(const FPModule& module, std::size_t length);
/// d∘d = 0 and kernel ⊆ image at every interior spot.
bool verify_resolution(const FreeResolution& res);

/// Ext^i_S(N, M) as the cohomology of Hom(F_•, M) for a resolution F_• of N.
FPModule ext_module(std::size_t i, const FPModule& n, const FPModule& m);
/// Ext^0 .. Ext^max_index from a single resolution of N.
std::vector<FPModule> ext_modules(const FPModule& n, const FPModule& m, std::size_t max_index);

}  // namespace serre
