#include "serre/ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "serre/errors.hpp"

namespace serre {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw PreconditionError("ideal without a ring");
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_)) throw DescriptorMismatch("ideal generator over a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(gens_, ring_); });
  return cache_->basis;
}

GroebnerBasis Ideal::groebner(MonomialOrder order) const {
  if (order == ring_->order()) return groebner();
  RingPtr other = ring_->with_order(order);
  std::vector<Polynomial> moved;
  for (const auto& g : gens_) moved.push_back(g.in_ring(other));
  return buchberger(moved, other);
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const { return groebner().is_everything(); }

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::same_ideal(const Ideal& other) const { return contains(other) && other.contains(*this); }

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  std::vector<Polynomial> g;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) g.push_back(a * b);
  }
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  auto polys = groebner().polynomials();
  std::ostringstream out;
  out << "(";
  for (std::size_t i = polys.size(); i-- > 0;) {
    out << polys[i].to_string();
    if (i > 0) out << ",";
  }
  out << ")";
  return out.str();
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) throw DescriptorMismatch("intersection of ideals over different rings");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  RingPtr ext = ring->with_elimination_vars(1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.embedded(ext, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embedded(ext, 1));
  GroebnerBasis gb = buchberger(gens, ext);
  std::vector<Polynomial> kept;
  for (const auto& p : gb.polynomials()) {
    if (p.lead().mono[0] == 0) kept.push_back(p.embedded(ring, -1));
  }
  return Ideal(ring, std::move(kept));
}

Ideal ideal_colon(const Ideal& a, const Polynomial& g) {
  const RingPtr& ring = a.ring();
  if (g.is_zero()) return Ideal::unit(ring);
  Ideal inter = ideal_intersection(a, Ideal(ring, {g}));
  std::vector<Polynomial> quotients;
  for (const auto& h : inter.generators()) quotients.push_back(divide_exact(h, g));
  return Ideal(ring, std::move(quotients));
}

ColonResult ideal_colon(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) throw DescriptorMismatch("colon of ideals over different rings");
  if (b.is_zero()) return {Ideal::unit(a.ring()), true};
  Ideal result = ideal_colon(a, b.generators().front());
  for (std::size_t i = 1; i < b.generators().size(); ++i) {
    result = ideal_intersection(result, ideal_colon(a, b.generators()[i]));
  }
  return {result, false};
}

Ideal saturation(const Ideal& a, const Ideal& b) {
  Ideal current = a;
  while (true) {
    Ideal next = ideal_colon(current, b).ideal;
    if (current.contains(next)) return current;
    current = next;
  }
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (!(*f.ring() == *ring)) throw DescriptorMismatch("radical membership across rings");
  RingPtr ext = ring->with_elimination_vars(1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embedded(ext, 1));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, 0) * f.embedded(ext, 1));
  return buchberger(gens, ext).is_everything();
}

int krull_dimension(const Ideal& ideal) {
  GroebnerBasis gb = ideal.groebner(MonomialOrder::grevlex());
  if (gb.is_everything()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& v : gb.elements()) supports.push_back(v.front().mono.support());
  const std::size_t n = ideal.ring()->num_vars();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace serre
