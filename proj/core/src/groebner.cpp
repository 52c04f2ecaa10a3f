#include "serre/groebner.hpp"

#include <algorithm>
#include <limits>

#include "serre/errors.hpp"

namespace serre {

ModuleOrder::ModuleOrder(MonomialOrder base, ModuleStrategy strategy, std::vector<int> shifts,
                         std::size_t split)
    : base_(base), strategy_(strategy), shifts_(std::move(shifts)), split_(split) {}

int ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                         std::uint32_t cb) const {
  if (split_ > 0) {
    bool block_a = ca < split_;
    bool block_b = cb < split_;
    if (block_a != block_b) return block_a ? 1 : -1;
  }
  if (strategy_ == ModuleStrategy::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return base_.compare(a, b);
  }
  if (base_.degree_compatible()) {
    long da = static_cast<long>(a.degree()) + shift(ca);
    long db = static_cast<long>(b.degree()) + shift(cb);
    if (da != db) return da < db ? -1 : 1;
  }
  int c = base_.compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

namespace {

struct Context {
  const PrimeField& field;
  const ModuleOrder& order;
};

/// Returns f[from..] - coeff * mono * g, where the leading term of the product
/// cancels f[from]; the product's other terms are all smaller than f[from].
TermVector sub_multiple(const TermVector& f, std::size_t from, const TermVector& g,
                        const Monomial& mono, Coeff coeff, const Context& ctx) {
  TermVector out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * mono;
    int c = ctx.order.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (c > 0) {
      out.push_back(f[i++]);
    } else if (c < 0) {
      out.push_back({gm, g[j].comp, ctx.field.neg(ctx.field.mul(coeff, g[j].coeff))});
      ++j;
    } else {
      Coeff v = ctx.field.sub(f[i].coeff, ctx.field.mul(coeff, g[j].coeff));
      if (v != 0) out.push_back({f[i].mono, f[i].comp, v});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) {
    out.push_back({g[j].mono * mono, g[j].comp, ctx.field.neg(ctx.field.mul(coeff, g[j].coeff))});
  }
  return out;
}

const TermVector* find_reducer(const ModuleTerm& t, const std::vector<TermVector>& basis,
                               std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip) continue;
    const ModuleTerm& lt = basis[k].front();
    if (lt.comp == t.comp && lt.mono.divides(t.mono)) return &basis[k];
  }
  return nullptr;
}

TermVector reduce_full(TermVector f, const std::vector<TermVector>& basis, const Context& ctx,
                       std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  TermVector result;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const ModuleTerm t = f[pos];
    const TermVector* g = find_reducer(t, basis, skip);
    if (g == nullptr) {
      result.push_back(t);
      ++pos;
      continue;
    }
    const ModuleTerm& lt = g->front();
    f = sub_multiple(f, pos, *g, t.mono / lt.mono, ctx.field.div(t.coeff, lt.coeff), ctx);
    pos = 0;
  }
  return result;
}

void make_monic(TermVector& v, const PrimeField& field) {
  if (v.empty() || v.front().coeff == 1) return;
  Coeff inv = field.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
}

TermVector s_vector(const TermVector& f, const TermVector& g, const Context& ctx) {
  const ModuleTerm& a = f.front();
  const ModuleTerm& b = g.front();
  Monomial l = a.mono.lcm(b.mono);
  // f and g are monic, so the S-vector is (l/a) f - (l/b) g.
  TermVector scaled_f;
  scaled_f.reserve(f.size());
  Monomial fa = l / a.mono;
  for (const auto& t : f) scaled_f.push_back({t.mono * fa, t.comp, t.coeff});
  TermVector s = sub_multiple(scaled_f, 0, g, l / b.mono, 1, ctx);
  return s;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  long degree;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, ModuleOrder order,
                             std::vector<TermVector> elements)
    : ring_(std::move(ring)), rank_(rank), order_(std::move(order)), elements_(std::move(elements)) {}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& v : elements_) out.push_back(to_column(v, ring_, 1).front());
  return out;
}

std::vector<Column> GroebnerBasis::columns() const {
  std::vector<Column> out;
  for (const auto& v : elements_) out.push_back(to_column(v, ring_, rank_));
  return out;
}

TermVector GroebnerBasis::normal_form(TermVector v) const {
  Context ctx{ring_->field(), order_};
  return reduce_full(std::move(v), elements_, ctx);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (rank_ != 1) throw PreconditionError("polynomial normal form needs a rank-1 basis");
  return to_column(normal_form(to_terms(f, order_)), ring_, 1).front();
}

Column GroebnerBasis::normal_form(const Column& c) const {
  if (c.size() != rank_) throw PreconditionError("column rank does not match the basis");
  return to_column(normal_form(to_terms(c, order_)), ring_, rank_);
}

bool GroebnerBasis::contains(const Column& c) const {
  if (c.size() != rank_) throw PreconditionError("column rank does not match the basis");
  return normal_form(to_terms(c, order_)).empty();
}

bool GroebnerBasis::is_everything() const {
  std::vector<bool> hit(rank_, false);
  for (const auto& v : elements_) {
    if (v.front().mono.is_one()) hit[v.front().comp] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

TermVector to_terms(const Column& column, const ModuleOrder& order) {
  TermVector v;
  for (std::size_t c = 0; c < column.size(); ++c) {
    for (const auto& t : column[c].terms()) v.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
  }
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.compare(a, b) > 0; });
  return v;
}

TermVector to_terms(const Polynomial& f, const ModuleOrder& order) {
  return to_terms(Column{f}, order);
}

Column to_column(const TermVector& v, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw PreconditionError("term component exceeds module rank");
    parts[t.comp].push_back({t.mono, t.coeff});
  }
  Column out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, const std::vector<TermVector>& gens,
                         const ModuleOrder& order) {
  Context ctx{ring->field(), order};
  std::vector<TermVector> basis;
  std::vector<Pair> pairs;
  std::vector<std::vector<char>> pending;

  auto add_element = [&](TermVector v) {
    make_monic(v, ctx.field);
    std::size_t k = basis.size();
    basis.push_back(std::move(v));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(basis.size(), 0);
    const ModuleTerm& lk = basis[k].front();
    for (std::size_t i = 0; i < k; ++i) {
      const ModuleTerm& li = basis[i].front();
      if (li.comp != lk.comp) continue;
      if (rank == 1 && li.mono.coprime(lk.mono)) continue;  // product criterion
      Monomial l = li.mono.lcm(lk.mono);
      pairs.push_back({i, k, l, static_cast<long>(l.degree()) + order.shift(lk.comp)});
      pending[i][k] = pending[k][i] = 1;
    }
  };

  for (const auto& g : gens) {
    TermVector r = reduce_full(g, basis, ctx);
    if (!r.empty()) add_element(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const Pair& a = pairs[p];
      const Pair& b = pairs[best];
      if (a.degree != b.degree ? a.degree < b.degree : (a.i != b.i ? a.i < b.i : a.j < b.j)) best = p;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending[pr.i][pr.j] = pending[pr.j][pr.i] = 0;

    // Chain criterion: some other leading term divides the lcm and both
    // connecting pairs have already been treated.
    bool skip = false;
    std::uint32_t comp = basis[pr.i].front().comp;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      const ModuleTerm& lk = basis[k].front();
      if (lk.comp != comp || !lk.mono.divides(pr.lcm)) continue;
      if (!pending[pr.i][k] && !pending[pr.j][k]) skip = true;
    }
    if (skip) continue;

    TermVector s = s_vector(basis[pr.i], basis[pr.j], ctx);
    TermVector r = reduce_full(std::move(s), basis, ctx);
    if (!r.empty()) add_element(std::move(r));
  }

  // Minimalize, then interreduce.
  std::vector<TermVector> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const ModuleTerm& lk = basis[k].front();
    bool redundant = false;
    for (std::size_t i = 0; i < basis.size() && !redundant; ++i) {
      if (i == k) continue;
      const ModuleTerm& li = basis[i].front();
      if (li.comp != lk.comp || !li.mono.divides(lk.mono)) continue;
      // Equal leading terms: keep the earliest.
      if (li.mono == lk.mono && i > k) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  std::vector<TermVector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    TermVector head{minimal[k].front()};
    TermVector tail(minimal[k].begin() + 1, minimal[k].end());
    TermVector rt = reduce_full(std::move(tail), minimal, ctx, k);
    head.insert(head.end(), rt.begin(), rt.end());
    make_monic(head, ctx.field);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermVector& a, const TermVector& b) {
    return order.compare(a.front(), b.front()) < 0;
  });
  return GroebnerBasis(ring, rank, order, std::move(reduced));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  ModuleOrder order(ring->order());
  std::vector<TermVector> vs;
  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw DescriptorMismatch("generator over a different ring");
    if (!g.is_zero()) vs.push_back(to_terms(g, order));
  }
  return buchberger(ring, 1, vs, order);
}

GroebnerBasis buchberger(const std::vector<Column>& gens, const RingPtr& ring, std::size_t rank,
                         const std::vector<int>& shifts) {
  ModuleOrder order(ring->order(), ModuleStrategy::TermOverPosition, shifts);
  std::vector<TermVector> vs;
  for (const auto& g : gens) {
    if (g.size() != rank) throw PreconditionError("generator rank mismatch");
    TermVector v = to_terms(g, order);
    if (!v.empty()) vs.push_back(std::move(v));
  }
  return buchberger(ring, rank, vs, order);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  Context ctx{gb.ring()->field(), gb.order()};
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].front().comp != el[j].front().comp) continue;
      TermVector s = s_vector(el[i], el[j], ctx);
      if (!reduce_full(std::move(s), el, ctx).empty()) return false;
    }
  }
  return true;
}

int column_degree(const Column& c, const std::vector<int>& row_shifts) {
  int d = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    int s = i < row_shifts.size() ? row_shifts[i] : 0;
    d = std::max(d, c[i].degree() + s);
  }
  return d == std::numeric_limits<int>::min() ? 0 : d;
}

std::vector<Column> syzygy_module(const std::vector<Column>& columns, const RingPtr& ring,
                                  std::size_t rank, const std::vector<int>& row_shifts) {
  const std::size_t k = columns.size();
  if (k == 0) return {};
  std::vector<int> shifts(rank + k, 0);
  for (std::size_t i = 0; i < rank && i < row_shifts.size(); ++i) shifts[i] = row_shifts[i];
  for (std::size_t j = 0; j < k; ++j) shifts[rank + j] = column_degree(columns[j], row_shifts);
  ModuleOrder order(ring->order(), ModuleStrategy::TermOverPosition, shifts, rank);

  std::vector<TermVector> augmented;
  augmented.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != rank) throw PreconditionError("syzygy input column has wrong rank");
    Column aug = columns[j];
    aug.resize(rank + k, Polynomial(ring));
    aug[rank + j] = Polynomial::constant(ring, 1);
    augmented.push_back(to_terms(aug, order));
  }
  GroebnerBasis gb = buchberger(ring, rank + k, augmented, order);

  std::vector<Column> syz;
  for (const auto& v : gb.elements()) {
    if (v.front().comp < rank) continue;
    TermVector shifted;
    shifted.reserve(v.size());
    for (const auto& t : v) shifted.push_back({t.mono, t.comp - static_cast<std::uint32_t>(rank), t.coeff});
    syz.push_back(to_column(shifted, ring, k));
  }
  return syz;
}

std::vector<Column> syzygy_module(const std::vector<Polynomial>& elements, const RingPtr& ring) {
  std::vector<Column> cols;
  for (const auto& f : elements) cols.push_back(Column{f});
  return syzygy_module(cols, ring, 1);
}

}  // namespace serre
