#include "serre/fpmodule.hpp"

#include <algorithm>
#include <sstream>

#include "serre/errors.hpp"

namespace serre {

namespace {

bool is_zero_column(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool column_homogeneous(const Column& c, const std::vector<int>& shifts) {
  bool seen = false;
  long degree = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& t : c[i].terms()) {
      long d = static_cast<long>(t.mono.degree()) + shifts[i];
      if (!seen) {
        degree = d;
        seen = true;
      } else if (d != degree) {
        return false;
      }
    }
  }
  return true;
}

Column zero_column(const RingPtr& ring, std::size_t rank) { return Column(rank, Polynomial(ring)); }

std::vector<int> column_degrees(const std::vector<Column>& cols, const std::vector<int>& row_shifts) {
  std::vector<int> out;
  out.reserve(cols.size());
  for (const auto& c : cols) out.push_back(column_degree(c, row_shifts));
  return out;
}

FPModule subquotient_unchecked(const RingDescriptor& ring, std::size_t rank,
                               const std::vector<int>& row_shifts, std::vector<Column> gens,
                               const std::vector<Column>& rels) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), is_zero_column), gens.end());
  if (gens.empty()) return FPModule::zero(ring);
  const std::size_t s = gens.size();
  std::vector<Column> all = gens;
  for (const auto& r : rels) {
    if (!is_zero_column(r)) all.push_back(r);
  }
  std::vector<Column> syz = syzygy_module(all, ring.ambient(), rank, row_shifts);
  std::vector<Column> relations;
  for (auto& z : syz) {
    z.resize(s);
    if (!is_zero_column(z)) relations.push_back(std::move(z));
  }
  return FPModule::from_parts(ring, column_degrees(gens, row_shifts), std::move(relations)).pruned();
}

}  // namespace

Column unit_column(const RingPtr& ring, std::size_t rank, std::size_t index, const Polynomial& f) {
  Column c = zero_column(ring, rank);
  c.at(index) = f;
  return c;
}

FPModule::FPModule(RingDescriptor ring, std::vector<int> shifts, std::vector<Column> relations)
    : ring_(std::move(ring)), shifts_(std::move(shifts)) {
  for (auto& r : relations) {
    if (r.size() != shifts_.size()) throw PreconditionError("relation column has the wrong length");
    for (const auto& p : r) {
      if (!(*p.ring() == *ring_.ambient())) throw DescriptorMismatch("relation entry over another ring");
    }
    if (!is_zero_column(r)) relations_.push_back(std::move(r));
  }
  for (const auto& j : ring_.quotient()) {
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
      relations_.push_back(unit_column(ring_.ambient(), shifts_.size(), i, j));
    }
  }
}

FPModule FPModule::zero(RingDescriptor ring) { return from_parts(std::move(ring), {}, {}); }

FPModule FPModule::free(RingDescriptor ring, std::size_t rank, std::vector<int> shifts) {
  if (shifts.empty()) shifts.assign(rank, 0);
  if (shifts.size() != rank) throw PreconditionError("free module: shift count differs from rank");
  return FPModule(std::move(ring), std::move(shifts), {});
}

FPModule FPModule::from_parts(RingDescriptor ring, std::vector<int> shifts, std::vector<Column> relations) {
  FPModule m;
  m.ring_ = std::move(ring);
  m.shifts_ = std::move(shifts);
  for (auto& r : relations) {
    if (!is_zero_column(r)) m.relations_.push_back(std::move(r));
  }
  return m;
}

const GroebnerBasis& FPModule::relation_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger(relations_, ring_.ambient(), rank0(), shifts_);
  });
  return cache_->basis;
}

bool FPModule::kills(const Column& v) const { return relation_basis().contains(v); }

bool FPModule::is_zero() const { return rank0() == 0 || relation_basis().is_everything(); }

bool FPModule::is_homogeneous() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [&](const Column& c) { return column_homogeneous(c, shifts_); });
}

FPModule FPModule::pruned() const {
  const RingPtr& ring = ring_.ambient();
  const PrimeField& field = ring->field();
  std::vector<int> shifts = shifts_;
  std::vector<Column> rels = relations_;
  while (true) {
    std::size_t pivot_col = rels.size(), pivot_row = 0;
    for (std::size_t j = 0; j < rels.size() && pivot_col == rels.size(); ++j) {
      for (std::size_t i = 0; i < rels[j].size(); ++i) {
        const Polynomial& e = rels[j][i];
        if (!e.is_zero() && e.is_constant()) {
          pivot_col = j;
          pivot_row = i;
          break;
        }
      }
    }
    if (pivot_col == rels.size()) break;
    Column pivot = rels[pivot_col];
    Coeff inv = field.inv(pivot[pivot_row].lead().coeff);
    std::vector<Column> next;
    next.reserve(rels.size() - 1);
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (j == pivot_col) continue;
      Column v = rels[j];
      if (!v[pivot_row].is_zero()) {
        Polynomial factor = v[pivot_row].scaled(inv);
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!pivot[i].is_zero()) v[i] = v[i] - factor * pivot[i];
        }
      }
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(pivot_row));
      if (!is_zero_column(v)) next.push_back(std::move(v));
    }
    shifts.erase(shifts.begin() + static_cast<std::ptrdiff_t>(pivot_row));
    rels = std::move(next);
  }
  // Drop repeated columns.
  std::vector<Column> unique;
  for (auto& c : rels) {
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(std::move(c));
  }
  FPModule out = from_parts(ring_, std::move(shifts), std::move(unique));
  if (out.rank0() > 0 && out.is_zero()) return zero(ring_);
  return out;
}

FPModule FPModule::quotient_by(const std::vector<Polynomial>& elements) const {
  std::vector<Column> rels = relations_;
  for (const auto& x : elements) {
    for (std::size_t i = 0; i < rank0(); ++i) rels.push_back(unit_column(ambient(), rank0(), i, x));
  }
  return from_parts(ring_, shifts_, std::move(rels));
}

FPModule FPModule::direct_sum(const FPModule& other) const {
  if (!(ring_ == other.ring_)) throw DescriptorMismatch("direct sum over different rings");
  const std::size_t a = rank0(), b = other.rank0();
  std::vector<int> shifts = shifts_;
  shifts.insert(shifts.end(), other.shifts_.begin(), other.shifts_.end());
  std::vector<Column> rels;
  for (const auto& r : relations_) {
    Column c = r;
    c.resize(a + b, Polynomial(ambient()));
    rels.push_back(std::move(c));
  }
  for (const auto& r : other.relations_) {
    Column c = zero_column(ambient(), a);
    c.insert(c.end(), r.begin(), r.end());
    rels.push_back(std::move(c));
  }
  return from_parts(ring_, std::move(shifts), std::move(rels));
}

std::string FPModule::describe() const {
  if (rank0() == 0) return "0";
  std::ostringstream out;
  out << "coker[";
  for (std::size_t i = 0; i < rank0(); ++i) {
    if (i > 0) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < relations_.size(); ++j) {
      if (j > 0) out << ", ";
      out << relations_[j][i].to_string();
    }
    out << "]";
  }
  out << "]";
  bool shifted = std::any_of(shifts_.begin(), shifts_.end(), [](int s) { return s != 0; });
  if (shifted) {
    out << " shifts [";
    for (std::size_t i = 0; i < shifts_.size(); ++i) out << (i ? ", " : "") << shifts_[i];
    out << "]";
  }
  return out.str();
}

std::vector<std::size_t> FreeResolution::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.size());
  return out;
}

FPModule cyclic_module(const RingDescriptor& ring, const Ideal& ideal) {
  std::vector<Column> rels;
  for (const auto& g : ideal.generators()) rels.push_back(Column{g});
  int shift = 0;
  return FPModule(ring, {shift}, std::move(rels)).pruned();
}

FPModule subquotient(const RingDescriptor& ring, std::size_t rank, const std::vector<int>& row_shifts,
                     const std::vector<Column>& gens, const std::vector<Column>& rels) {
  std::vector<int> shifts = row_shifts;
  if (shifts.empty()) shifts.assign(rank, 0);
  std::vector<Column> nonzero;
  for (const auto& g : gens) {
    if (g.size() != rank) throw PreconditionError("subquotient generator has the wrong length");
    if (!is_zero_column(g)) nonzero.push_back(g);
  }
  GroebnerBasis span = buchberger(nonzero, ring.ambient(), rank, shifts);
  for (std::size_t j = 0; j < rels.size(); ++j) {
    if (rels[j].size() != rank) throw PreconditionError("subquotient relation has the wrong length");
    if (!span.contains(rels[j])) {
      throw PreconditionError("subquotient: relation column " + std::to_string(j) +
                              " is not in the span of the generators");
    }
  }
  return subquotient_unchecked(ring, rank, shifts, gens, rels);
}

FPModule homology(const RingDescriptor& ring, const std::vector<int>& g_shifts,
                  const std::vector<Column>& incoming, const std::vector<Column>& outgoing,
                  std::size_t h_rank, const std::vector<int>& h_shifts,
                  const std::vector<Column>& g_relations, const std::vector<Column>& h_relations) {
  const std::size_t g_rank = g_shifts.size();
  if (g_rank == 0) return FPModule::zero(ring);
  const RingPtr& S = ring.ambient();
  std::vector<Column> kernel;
  if (h_rank == 0) {
    for (std::size_t i = 0; i < g_rank; ++i) kernel.push_back(unit_column(S, g_rank, i, ring.one()));
  } else {
    if (outgoing.size() != g_rank) throw PreconditionError("homology: outgoing map has wrong width");
    std::vector<Column> cols = outgoing;
    for (const auto& r : h_relations) {
      if (!is_zero_column(r)) cols.push_back(r);
    }
    for (auto& z : syzygy_module(cols, S, h_rank, h_shifts)) {
      z.resize(g_rank);
      if (!is_zero_column(z)) kernel.push_back(std::move(z));
    }
  }
  std::vector<Column> boundaries = incoming;
  boundaries.insert(boundaries.end(), g_relations.begin(), g_relations.end());
  return subquotient_unchecked(ring, g_rank, g_shifts, std::move(kernel), boundaries);
}

FPModule colon_step_module(const FPModule& module, const std::vector<Polynomial>& previous,
                           const Polynomial& element) {
  const std::size_t m = module.rank0();
  if (m == 0) return module;
  const RingPtr& S = module.ambient();
  std::vector<Column> base = module.quotient_by(previous).relations();
  std::vector<Column> cols;
  for (std::size_t i = 0; i < m; ++i) cols.push_back(unit_column(S, m, i, element));
  cols.insert(cols.end(), base.begin(), base.end());
  std::vector<Column> colon;
  for (auto& z : syzygy_module(cols, S, m, module.shifts())) {
    z.resize(m);
    if (!is_zero_column(z)) colon.push_back(std::move(z));
  }
  return subquotient_unchecked(module.ring(), m, module.shifts(), std::move(colon), base);
}

Ideal annihilator(const FPModule& module) {
  const RingPtr& S = module.ambient();
  const std::size_t m = module.rank0();
  if (m == 0) return Ideal::unit(S);
  if (m == 1) {
    std::vector<Polynomial> gens;
    for (const auto& r : module.relations()) gens.push_back(r[0]);
    return Ideal(S, std::move(gens));
  }
  Ideal result;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Column> cols = module.relations();
    cols.push_back(unit_column(S, m, i, module.ring().one()));
    std::vector<Polynomial> gens;
    for (const auto& z : syzygy_module(cols, S, m, module.shifts())) {
      if (!z.back().is_zero()) gens.push_back(z.back());
    }
    Ideal colon(S, std::move(gens));
    result = i == 0 ? colon : ideal_intersection(result, colon);
  }
  return result;
}

int module_dimension(const FPModule& module) {
  if (module.is_zero()) return -1;
  return krull_dimension(annihilator(module));
}

FreeResolution free_resolution(const FPModule& module, std::size_t length) {
  if (length < 1) throw PreconditionError("free_resolution: length must be at least 1");
  FPModule m = module.pruned();
  const RingPtr& S = m.ambient();
  const PrimeField& field = S->field();
  FreeResolution res;
  res.ring = m.ring();
  res.degrees.push_back(m.shifts());
  if (m.rank0() == 0 || m.relations().empty()) return res;

  res.maps.push_back({m.rank0(), m.relations()});
  res.degrees.push_back(column_degrees(m.relations(), m.shifts()));

  while (res.maps.size() < length) {
    Matrix& phi = res.maps.back();
    std::vector<int>& phi_degrees = res.degrees.back();
    std::vector<Column> syz = syzygy_module(phi.cols, S, phi.rows, res.degrees[res.degrees.size() - 2]);

    // Cancel unit entries: a constant at (i, j) makes column i of phi redundant.
    while (true) {
      std::size_t pj = syz.size(), pi = 0;
      for (std::size_t j = 0; j < syz.size() && pj == syz.size(); ++j) {
        for (std::size_t i = 0; i < syz[j].size(); ++i) {
          if (!syz[j][i].is_zero() && syz[j][i].is_constant()) {
            pj = j;
            pi = i;
            break;
          }
        }
      }
      if (pj == syz.size()) break;
      Column pivot = syz[pj];
      Coeff inv = field.inv(pivot[pi].lead().coeff);
      std::vector<Column> next;
      for (std::size_t j = 0; j < syz.size(); ++j) {
        if (j == pj) continue;
        Column v = syz[j];
        if (!v[pi].is_zero()) {
          Polynomial factor = v[pi].scaled(inv);
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (!pivot[i].is_zero()) v[i] = v[i] - factor * pivot[i];
          }
        }
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(pi));
        if (!is_zero_column(v)) next.push_back(std::move(v));
      }
      syz = std::move(next);
      phi.cols.erase(phi.cols.begin() + static_cast<std::ptrdiff_t>(pi));
      phi_degrees.erase(phi_degrees.begin() + static_cast<std::ptrdiff_t>(pi));
    }
    if (syz.empty()) break;
    std::vector<int> deg = column_degrees(syz, phi_degrees);
    res.maps.push_back({phi.cols.size(), std::move(syz)});
    res.degrees.push_back(std::move(deg));
  }
  return res;
}

bool verify_resolution(const FreeResolution& res) {
  const RingPtr& S = res.ring.ambient();
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    const Matrix& phi = res.maps[k];
    // Composition with the next map vanishes.
    if (k + 1 < res.maps.size()) {
      for (const auto& c : res.maps[k + 1].cols) {
        Column sum = zero_column(S, phi.rows);
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (c[j].is_zero()) continue;
          for (std::size_t i = 0; i < phi.rows; ++i) sum[i] = sum[i] + c[j] * phi.cols[j][i];
        }
        if (!is_zero_column(sum)) return false;
      }
    }
    // Every syzygy of phi lies in the image of the next map.
    std::vector<Column> syz = syzygy_module(phi.cols, S, phi.rows, res.degrees[k]);
    if (k + 1 == res.maps.size()) {
      if (!syz.empty()) return false;
      continue;
    }
    GroebnerBasis image = buchberger(res.maps[k + 1].cols, S, phi.cols.size(), res.degrees[k + 1]);
    for (const auto& z : syz) {
      if (!image.contains(z)) return false;
    }
  }
  return true;
}

namespace {

FPModule ext_from_resolution(std::size_t i, const FreeResolution& res, const FPModule& target) {
  const RingDescriptor& ring = target.ring();
  const RingPtr& S = ring.ambient();
  const std::size_t mr = target.rank0();
  if (mr == 0) return FPModule::zero(ring);
  if (i >= res.degrees.size() || res.degrees[i].empty()) return FPModule::zero(ring);

  auto hom_shifts = [&](std::size_t k) {
    std::vector<int> out;
    for (int d : res.degrees[k]) {
      for (int s : target.shifts()) out.push_back(s - d);
    }
    return out;
  };
  auto hom_relations = [&](std::size_t k) {
    const std::size_t r = res.degrees[k].size();
    std::vector<Column> out;
    for (std::size_t j = 0; j < r; ++j) {
      for (const auto& rel : target.relations()) {
        Column c = zero_column(S, r * mr);
        for (std::size_t l = 0; l < mr; ++l) c[j * mr + l] = rel[l];
        out.push_back(std::move(c));
      }
    }
    return out;
  };
  // Image of the basis of Hom(F_{k-1}, M) under precomposition with phi_k.
  auto hom_map = [&](std::size_t k) {
    const Matrix& phi = res.maps[k - 1];
    const std::size_t src = phi.rows, dst = phi.cols.size();
    std::vector<Column> out;
    for (std::size_t j = 0; j < src; ++j) {
      for (std::size_t l = 0; l < mr; ++l) {
        Column c = zero_column(S, dst * mr);
        for (std::size_t jp = 0; jp < dst; ++jp) c[jp * mr + l] = phi.cols[jp][j];
        out.push_back(std::move(c));
      }
    }
    return out;
  };

  std::vector<Column> incoming;
  if (i > 0) incoming = hom_map(i);
  std::vector<Column> outgoing;
  std::size_t h_rank = 0;
  std::vector<int> h_shifts;
  std::vector<Column> h_relations;
  if (i + 1 < res.degrees.size()) {
    outgoing = hom_map(i + 1);
    h_rank = res.degrees[i + 1].size() * mr;
    h_shifts = hom_shifts(i + 1);
    h_relations = hom_relations(i + 1);
  }
  return homology(ring, hom_shifts(i), incoming, outgoing, h_rank, h_shifts, hom_relations(i),
                  h_relations);
}

}  // namespace

FPModule ext_module(std::size_t i, const FPModule& n, const FPModule& m) {
  if (!(n.ring() == m.ring())) throw DescriptorMismatch("ext_module: modules over different rings");
  FPModule target = m.pruned();
  if (target.rank0() == 0) return FPModule::zero(m.ring());
  return ext_from_resolution(i, free_resolution(n, i + 1), target);
}

std::vector<FPModule> ext_modules(const FPModule& n, const FPModule& m, std::size_t max_index) {
  if (!(n.ring() == m.ring())) throw DescriptorMismatch("ext_modules: modules over different rings");
  FPModule target = m.pruned();
  std::vector<FPModule> out;
  if (target.rank0() == 0) {
    out.assign(max_index + 1, FPModule::zero(m.ring()));
    return out;
  }
  FreeResolution res = free_resolution(n, max_index + 1);
  for (std::size_t i = 0; i <= max_index; ++i) out.push_back(ext_from_resolution(i, res, target));
  return out;
}

}  // namespace serre
