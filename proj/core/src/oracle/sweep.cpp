#include "serre/oracle/sweep.hpp"

#include <algorithm>
#include <bit>

#include "serre/errors.hpp"
#include "serre/oracle/simplicial.hpp"

namespace serre::oracle {

namespace {

bool monomial_in_prime(const Monomial& m, PrimeMask prime, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] > 0 && (prime & (PrimeMask{1} << i))) return true;
  }
  return false;
}

bool ideal_in_prime(const MonomialIdeal& ideal, PrimeMask prime) {
  for (const auto& g : ideal.generators()) {
    bool hit = false;
    for (std::size_t i = 0; i < g.size() && !hit; ++i) hit = g[i] > 0 && (prime & (PrimeMask{1} << i));
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool prime_in_class(const SerreClass& cls, PrimeMask prime, std::size_t nvars) {
  switch (cls.kind()) {
    case SerreClass::Kind::ZeroOnly:
      return false;
    case SerreClass::Kind::DimLE:
      return static_cast<int>(nvars) - std::popcount(prime) <= cls.bound();
    case SerreClass::Kind::SuppInV:
      for (const auto& g : cls.support_ideal().generators()) {
        for (const auto& t : g.terms()) {
          if (!monomial_in_prime(t.mono, prime, nvars)) return false;
        }
      }
      return true;
  }
  return false;
}

std::vector<PrimeRecord> sweep_support(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p) {
  const std::size_t n = ideal.num_vars();
  if (n > kMaxSweepVars) {
    throw UnsupportedRoute("monomial prime sweep is limited to " + std::to_string(kMaxSweepVars) + " variables");
  }
  std::vector<PrimeRecord> out;
  for (PrimeMask mask = 0; mask < (PrimeMask{1} << n); ++mask) {
    if (!ideal_in_prime(ideal, mask)) continue;
    MonomialIdeal local = localize(ideal, mask);
    PrimeRecord rec;
    rec.prime = mask;
    rec.height = dimension(local);
    rec.coheight = static_cast<int>(n) - std::popcount(mask);
    rec.cohen_macaulay = is_cohen_macaulay(local, p);
    rec.in_class = prime_in_class(cls, mask, n);
    out.push_back(rec);
  }
  return out;
}

bool local_criterion_check(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p) {
  const int dim = dimension(ideal);
  for (const auto& rec : sweep_support(ideal, cls, p)) {
    if (rec.in_class) continue;
    if (!rec.cohen_macaulay || rec.height + rec.coheight != dim) return false;
  }
  return true;
}

std::vector<PrimeMask> ncm_minimal_primes(const MonomialIdeal& ideal, std::uint32_t p) {
  std::vector<PrimeMask> bad;
  for (const auto& rec : sweep_support(ideal, SerreClass::zero_only(), p)) {
    if (!rec.cohen_macaulay) bad.push_back(rec.prime);
  }
  std::vector<PrimeMask> out;
  for (PrimeMask q : bad) {
    bool minimal = std::none_of(bad.begin(), bad.end(), [&](PrimeMask r) { return r != q && (r & q) == r; });
    if (minimal) out.push_back(q);
  }
  return out;
}

MonomialIdeal ncm_locus_monomial(const MonomialIdeal& ideal, std::uint32_t p) {
  const std::size_t n = ideal.num_vars();
  auto primes = ncm_minimal_primes(ideal, p);
  if (primes.empty()) return MonomialIdeal(n, {Exponents(n, 0)});
  MonomialIdeal out = MonomialIdeal::prime(n, primes.front());
  for (std::size_t k = 1; k < primes.size(); ++k) out = out.intersect(MonomialIdeal::prime(n, primes[k]));
  return out;
}

bool ncm_verdict(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p) {
  const std::size_t n = ideal.num_vars();
  for (PrimeMask q : ncm_minimal_primes(ideal, p)) {
    if (!prime_in_class(cls, q, n)) return false;
  }
  const int dim = dimension(ideal);
  auto records = sweep_support(ideal, cls, p);
  for (const auto& rec : records) {
    if (rec.in_class) continue;
    bool minimal = std::none_of(records.begin(), records.end(), [&](const PrimeRecord& other) {
      return !other.in_class && other.prime != rec.prime && (other.prime & rec.prime) == other.prime;
    });
    if (minimal && rec.coheight != dim) return false;
  }
  return true;
}

GradeValue oracle_s_height(const MonomialIdeal& a, const MonomialIdeal& ideal, const SerreClass& cls,
                           std::uint32_t p) {
  bool found = false;
  int best = 0;
  for (const auto& rec : sweep_support(ideal, cls, p)) {
    if (rec.in_class || !ideal_in_prime(a, rec.prime)) continue;
    best = found ? std::min(best, rec.height) : rec.height;
    found = true;
  }
  return found ? GradeValue::finite(best) : GradeValue::plus_infinity();
}

GradeValue oracle_s_dimension(const MonomialIdeal& ideal, const SerreClass& cls, std::uint32_t p) {
  bool found = false;
  int best = 0;
  for (const auto& rec : sweep_support(ideal, cls, p)) {
    if (rec.in_class) continue;
    best = found ? std::max(best, rec.coheight) : rec.coheight;
    found = true;
  }
  return found ? GradeValue::finite(best) : GradeValue::minus_infinity();
}

}  // namespace serre::oracle
