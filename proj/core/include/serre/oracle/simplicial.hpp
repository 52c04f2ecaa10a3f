#pragma once

#include <cstdint>
#include <vector>

#include "serre/oracle/monomial_ideal.hpp"

namespace serre::oracle {

using Face = std::uint64_t;

/// Simplicial complex on vertices 0..n-1 given by its facets (no facet contains another).
/// The complex {∅} has a single empty facet; the void complex has none.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t vertices, std::vector<Face> facets);

  /// Δ with I_Δ = I; I must be squarefree and proper.
  static SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

  std::size_t num_vertices() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(Face f) const;
  /// Every face, sorted by size then value.
  std::vector<Face> faces() const;
  /// Largest face size minus one; −2 for the void complex.
  int dimension() const;

  SimplicialComplex link(Face f) const;

  /// dim_k H̃_j(Δ; GF(p)) for j ≥ −1.
  std::size_t reduced_homology_rank(int j, std::uint32_t p) const;

 private:
  std::size_t n_;
  std::vector<Face> facets_;
};

/// depth GF(p)[Δ] by Reisner's criterion; throws UnsupportedRoute unless I is squarefree.
int reisner_depth(const MonomialIdeal& ideal, std::uint32_t p);
/// depth S/I for any monomial I, polarizing first; −1 for the unit ideal.
int monomial_depth(const MonomialIdeal& ideal, std::uint32_t p);
/// S/I is Cohen-Macaulay (the zero module counts as such).
bool is_cohen_macaulay(const MonomialIdeal& ideal, std::uint32_t p);

}  // namespace serre::oracle
