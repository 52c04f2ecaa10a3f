#include "serre/koszul.hpp"

#include <algorithm>

#include "serre/errors.hpp"

namespace serre {

namespace {

void enumerate_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = start; v < n; ++v) {
    cur.push_back(v);
    enumerate_subsets(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

KoszulComplex::KoszulComplex(std::vector<Polynomial> elements, FPModule module)
    : elements_(std::move(elements)), module_(std::move(module)) {
  for (const auto& x : elements_) {
    if (!(*x.ring() == *module_.ambient())) throw DescriptorMismatch("Koszul element over another ring");
  }
  const std::size_t r = elements_.size();
  subsets_.resize(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<std::size_t> cur;
    enumerate_subsets(r, k, 0, cur, subsets_[k]);
  }
}

std::size_t KoszulComplex::layer_rank(std::size_t i) const {
  if (i > length()) return 0;
  return subsets_[i].size() * module_.rank0();
}

std::vector<int> KoszulComplex::layer_shifts(std::size_t i) const {
  std::vector<int> out;
  if (i > length()) return out;
  for (const auto& subset : subsets_[i]) {
    int d = 0;
    for (std::size_t t : subset) d += std::max(0, elements_[t].degree());
    for (int s : module_.shifts()) out.push_back(s + d);
  }
  return out;
}

std::vector<Column> KoszulComplex::differential(std::size_t i) const {
  if (i >= length()) throw PreconditionError("Koszul differential index out of range");
  const RingPtr& S = module_.ambient();
  const std::size_t m = module_.rank0();
  const auto& src = subsets_[i];
  const auto& dst = subsets_[i + 1];
  std::vector<Column> out;
  out.reserve(src.size() * m);
  for (const auto& s : src) {
    for (std::size_t l = 0; l < m; ++l) {
      Column c(dst.size() * m, Polynomial(S));
      for (std::size_t t = 0; t < length(); ++t) {
        if (std::find(s.begin(), s.end(), t) != s.end()) continue;
        std::vector<std::size_t> target = s;
        target.insert(std::upper_bound(target.begin(), target.end(), t), t);
        std::size_t pos = static_cast<std::size_t>(
            std::find(target.begin(), target.end(), t) - target.begin());
        std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(dst.begin(), dst.end(), target) - dst.begin());
        Polynomial entry = pos % 2 == 0 ? elements_[t] : -elements_[t];
        c[idx * m + l] = entry;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Column> KoszulComplex::layer_relations(std::size_t i) const {
  const RingPtr& S = module_.ambient();
  const std::size_t m = module_.rank0();
  const std::size_t blocks = subsets_[i].size();
  std::vector<Column> out;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const auto& rel : module_.relations()) {
      Column c(blocks * m, Polynomial(S));
      for (std::size_t l = 0; l < m; ++l) c[b * m + l] = rel[l];
      out.push_back(std::move(c));
    }
  }
  return out;
}

FPModule KoszulComplex::cohomology(std::size_t i) const {
  if (i > length() || module_.rank0() == 0) return FPModule::zero(module_.ring());
  std::vector<Column> incoming;
  if (i > 0) incoming = differential(i - 1);
  std::vector<Column> outgoing;
  std::size_t h_rank = 0;
  std::vector<int> h_shifts;
  std::vector<Column> h_relations;
  if (i < length()) {
    outgoing = differential(i);
    h_rank = layer_rank(i + 1);
    h_shifts = layer_shifts(i + 1);
    h_relations = layer_relations(i + 1);
  }
  return homology(module_.ring(), layer_shifts(i), incoming, outgoing, h_rank, h_shifts,
                  layer_relations(i), h_relations);
}

bool KoszulComplex::verify_differentials() const {
  for (std::size_t i = 0; i + 1 < length(); ++i) {
    auto d0 = differential(i);
    auto d1 = differential(i + 1);
    for (const auto& c : d0) {
      Column sum(layer_rank(i + 2), Polynomial(module_.ambient()));
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        for (std::size_t k = 0; k < sum.size(); ++k) {
          if (!d1[j][k].is_zero()) sum[k] = sum[k] + c[j] * d1[j][k];
        }
      }
      for (const auto& p : sum) {
        if (!p.is_zero()) return false;
      }
    }
  }
  return true;
}

FPModule koszul_cohomology(std::size_t i, const std::vector<Polynomial>& elements, const FPModule& module,
                           std::vector<std::string>* warnings) {
  if (i > elements.size()) {
    if (warnings) {
      warnings->push_back("Koszul cohomology index " + std::to_string(i) + " exceeds length " +
                          std::to_string(elements.size()) + "; returning the zero module");
    }
    return FPModule::zero(module.ring());
  }
  return KoszulComplex(elements, module).cohomology(i);
}

}  // namespace serre
