#include "serre/oracle/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "serre/errors.hpp"

namespace serre::oracle {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

Exponents exponents_of(const Monomial& m, std::size_t n) {
  Exponents e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
  return e;
}

void split(std::vector<Exponents> gens, std::size_t n, std::vector<Exponents>& out) {
  gens = minimalize(std::move(gens));
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) return;  // unit ideal
  }
  for (const auto& g : gens) {
    std::size_t first = n;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0) {
        if (first == n) first = i;
        ++support;
      }
    }
    if (support < 2) continue;
    Exponents power(n, 0);
    power[first] = g[first];
    Exponents rest = g;
    rest[first] = 0;
    auto left = gens;
    left.push_back(power);
    auto right = gens;
    right.push_back(rest);
    split(std::move(left), n, out);
    split(std::move(right), n, out);
    return;
  }
  Exponents comp(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0) comp[i] = comp[i] == 0 ? g[i] : std::min(comp[i], g[i]);
    }
  }
  out.push_back(comp);
}

// Q_a ⊆ Q_b for irreducible components given as pure-power exponent vectors.
bool component_contained(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (b[i] == 0 || b[i] > a[i]) return false;
  }
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponents> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw PreconditionError("monomial generator has the wrong number of exponents");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::prime(std::size_t nvars, PrimeMask mask) {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (mask & (PrimeMask{1} << i)) {
      Exponents e(nvars, 0);
      e[i] = 1;
      gens.push_back(e);
    }
  }
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->num_vars();
  std::vector<Exponents> gens;
  for (const auto& g : ideal.groebner().polynomials()) {
    if (!g.is_monomial()) throw UnsupportedRoute("ideal " + ideal.to_string() + " is not monomial");
    gens.push_back(exponents_of(g.lead().mono, n));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::optional<MonomialIdeal> MonomialIdeal::from_cyclic_module(const FPModule& module) {
  const std::size_t n = module.ambient()->num_vars();
  FPModule m = module.pruned();
  if (m.rank0() == 0) return MonomialIdeal(n, {Exponents(n, 0)});
  if (m.rank0() != 1) return std::nullopt;
  std::vector<Polynomial> entries;
  for (const auto& rel : m.relations()) {
    if (!rel[0].is_zero()) entries.push_back(rel[0]);
  }
  try {
    return from_ideal(Ideal(module.ambient(), entries));
  } catch (const UnsupportedRoute&) {
    return std::nullopt;
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const Exponents& g) { return std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Exponents& g) { return std::all_of(g.begin(), g.end(), [](int e) { return e <= 1; }); });
}

bool MonomialIdeal::contains(const Exponents& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Exponents& g) { return contains(g); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return nvars_ == other.nvars_ && gens_ == other.gens_;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Exponents> gens;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) gens.push_back(lcm(a, b));
  }
  return MonomialIdeal(nvars_, std::move(gens));
}

Exponents MonomialIdeal::max_exponents() const {
  Exponents out(nvars_, 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < nvars_; ++i) out[i] = std::max(out[i], g[i]);
  }
  return out;
}

Ideal MonomialIdeal::to_ideal(const RingPtr& ring) const {
  if (ring->num_vars() != nvars_) throw DescriptorMismatch("monomial ideal and ring differ in variable count");
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(Polynomial::monomial(ring, Monomial(std::span<const int>(g))));
  return Ideal(ring, std::move(gens));
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ",";
    std::string term;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (gens_[k][i] == 0) continue;
      if (!term.empty()) term += "*";
      term += names[i];
      if (gens_[k][i] > 1) term += "^" + std::to_string(gens_[k][i]);
    }
    out += term.empty() ? "1" : term;
  }
  return out + ")";
}

std::vector<Exponents> irreducible_components(const MonomialIdeal& ideal) {
  std::vector<Exponents> raw;
  split(ideal.generators(), ideal.num_vars(), raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
      if (i != j && component_contained(raw[j], raw[i])) redundant = true;
    }
    if (!redundant) out.push_back(raw[i]);
  }
  return out;
}

std::vector<PrimeMask> associated_primes(const MonomialIdeal& ideal) {
  std::vector<PrimeMask> out;
  for (const auto& c : irreducible_components(ideal)) {
    PrimeMask mask = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] > 0) mask |= PrimeMask{1} << i;
    }
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeMask> minimal_primes(const MonomialIdeal& ideal) {
  auto ass = associated_primes(ideal);
  std::vector<PrimeMask> out;
  for (PrimeMask p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(),
                                [&](PrimeMask q) { return q != p && (q & p) == q; });
    if (minimal) out.push_back(p);
  }
  return out;
}

int dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return -1;
  int best = -1;
  for (PrimeMask p : minimal_primes(ideal)) {
    best = std::max(best, static_cast<int>(ideal.num_vars()) - std::popcount(p));
  }
  return best;
}

MonomialIdeal localize(const MonomialIdeal& ideal, PrimeMask prime) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ideal.num_vars(); ++i) {
    if (prime & (PrimeMask{1} << i)) keep.push_back(i);
  }
  std::vector<Exponents> gens;
  for (const auto& g : ideal.generators()) {
    Exponents e(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) e[k] = g[keep[k]];
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(keep.size(), std::move(gens));
}

MonomialIdeal polarize(const MonomialIdeal& ideal, std::size_t* extra) {
  const std::size_t n = ideal.num_vars();
  Exponents widths = ideal.max_exponents();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    widths[i] = std::max(1, widths[i]);
    offset[i + 1] = offset[i] + static_cast<std::size_t>(widths[i]);
  }
  std::vector<Exponents> gens;
  for (const auto& g : ideal.generators()) {
    Exponents e(offset[n], 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < g[i]; ++k) e[offset[i] + static_cast<std::size_t>(k)] = 1;
    }
    gens.push_back(std::move(e));
  }
  if (extra) *extra = offset[n] - n;
  return MonomialIdeal(offset[n], std::move(gens));
}

Ideal prime_ideal(const RingPtr& ring, PrimeMask mask) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    if (mask & (PrimeMask{1} << i)) gens.push_back(Polynomial::variable(ring, i));
  }
  return Ideal(ring, std::move(gens));
}

std::string prime_to_string(PrimeMask mask, const std::vector<std::string>& names) {
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!(mask & (PrimeMask{1} << i))) continue;
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return (first ? "(0" : out) + ")";
}

}  // namespace serre::oracle
