#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "serre/polynomial.hpp"

namespace serre {

/// Element of a free module S^r given by its r coordinates.
using Column = std::vector<Polynomial>;

/// Term of a free-module element: monomial times basis vector e_comp.
struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Coeff coeff = 0;
};

/// Free-module element as a term list sorted strictly decreasing in a ModuleOrder.
using TermVector = std::vector<ModuleTerm>;

enum class ModuleStrategy { TermOverPosition, PositionOverTerm };

/// Monomial order on a free module. Components below `split` form a block that
/// dominates the remaining components; inside a block the strategy decides.
/// Degree shifts are honoured by term-over-position when the base order is graded.
class ModuleOrder {
 public:
  explicit ModuleOrder(MonomialOrder base = MonomialOrder::grevlex(),
                       ModuleStrategy strategy = ModuleStrategy::TermOverPosition,
                       std::vector<int> shifts = {}, std::size_t split = 0);

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }
  int shift(std::uint32_t comp) const { return comp < shifts_.size() ? shifts_[comp] : 0; }
  const MonomialOrder& base() const { return base_; }

 private:
  MonomialOrder base_;
  ModuleStrategy strategy_;
  std::vector<int> shifts_;
  std::size_t split_;
};

/// Reduced Groebner basis of a submodule of S^rank (rank 1 for ideals).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::size_t rank, ModuleOrder order, std::vector<TermVector> elements);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<TermVector>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool reduced() const { return true; }

  /// Basis elements as polynomials (rank 1) or columns.
  std::vector<Polynomial> polynomials() const;
  std::vector<Column> columns() const;

  /// Unique normal form; zero iff the argument lies in the submodule.
  TermVector normal_form(TermVector v) const;
  Polynomial normal_form(const Polynomial& f) const;
  Column normal_form(const Column& c) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Column& c) const;

  /// True iff the basis generates the whole free module.
  bool is_everything() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 1;
  ModuleOrder order_;
  std::vector<TermVector> elements_;
};

/// Conversions between coordinate columns and sorted term vectors.
TermVector to_terms(const Column& column, const ModuleOrder& order);
TermVector to_terms(const Polynomial& f, const ModuleOrder& order);
Column to_column(const TermVector& v, const RingPtr& ring, std::size_t rank);

/// Buchberger's algorithm with the product and chain criteria and the normal
/// selection strategy (smallest lcm degree, then pair index). Returns the
/// reduced basis sorted increasingly by leading term.
GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, const std::vector<TermVector>& gens,
                         const ModuleOrder& order);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring);
GroebnerBasis buchberger(const std::vector<Column>& gens, const RingPtr& ring, std::size_t rank,
                         const std::vector<int>& shifts = {});

/// Test helper: every S-vector of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Column degrees (max of entry degree plus row shift), 0 for zero columns.
int column_degree(const Column& c, const std::vector<int>& row_shifts);

/// Generators of the kernel of S^k -> S^rank sending e_j to columns[j].
std::vector<Column> syzygy_module(const std::vector<Column>& columns, const RingPtr& ring,
                                  std::size_t rank, const std::vector<int>& row_shifts = {});
std::vector<Column> syzygy_module(const std::vector<Polynomial>& elements, const RingPtr& ring);

}  // namespace serre
