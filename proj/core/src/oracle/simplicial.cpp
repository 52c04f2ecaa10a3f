#include "serre/oracle/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>

#include "serre/errors.hpp"
#include "serre/field.hpp"

namespace serre::oracle {

namespace {

bool subset(Face a, Face b) { return (a & b) == a; }

std::vector<Face> maximal_only(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (Face f : faces) {
    bool covered = std::any_of(faces.begin(), faces.end(), [&](Face g) { return g != f && subset(f, g); });
    if (!covered) out.push_back(f);
  }
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, const PrimeField& F) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Coeff inv = F.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Coeff factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Faces grouped by size.
std::map<int, std::vector<Face>> faces_by_size(const SimplicialComplex& cx) {
  std::map<int, std::vector<Face>> out;
  for (Face f : cx.faces()) out[std::popcount(f)].push_back(f);
  return out;
}

// Rank of the boundary map from (k)-element faces to (k-1)-element faces.
std::size_t boundary_rank(const std::map<int, std::vector<Face>>& groups, int k, const PrimeField& F) {
  if (k <= 0) return 0;
  auto hi = groups.find(k);
  auto lo = groups.find(k - 1);
  if (hi == groups.end() || lo == groups.end()) return 0;
  const auto& src = hi->second;
  const auto& dst = lo->second;
  std::vector<std::vector<Coeff>> rows(src.size(), std::vector<Coeff>(dst.size(), 0));
  for (std::size_t r = 0; r < src.size(); ++r) {
    Face f = src[r];
    int position = 0;
    for (Face rest = f; rest; rest &= rest - 1) {
      Face v = rest & (~rest + 1);
      Face g = f & ~v;
      std::size_t col = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), g) - dst.begin());
      rows[r][col] = position % 2 == 0 ? 1 : F.neg(1);
      ++position;
    }
  }
  return rank_mod_p(std::move(rows), F);
}

std::size_t homology_rank(const std::map<int, std::vector<Face>>& groups, int j, const PrimeField& F) {
  auto it = groups.find(j + 1);
  if (it == groups.end()) return 0;
  return it->second.size() - boundary_rank(groups, j + 1, F) - boundary_rank(groups, j + 2, F);
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<Face> facets) : n_(vertices) {
  if (vertices > 64) throw PreconditionError("simplicial complex limited to 64 vertices");
  facets_ = maximal_only(std::move(facets));
}

SimplicialComplex SimplicialComplex::stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw UnsupportedRoute("Stanley-Reisner complex needs a squarefree ideal");
  if (ideal.is_unit()) throw PreconditionError("Stanley-Reisner complex of the unit ideal is void");
  const std::size_t n = ideal.num_vars();
  std::vector<Face> nonfaces;
  for (const auto& g : ideal.generators()) {
    Face m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0) m |= Face{1} << i;
    }
    nonfaces.push_back(m);
  }
  auto is_face = [&](Face f) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [&](Face m) { return subset(m, f); });
  };
  std::vector<Face> facets;
  std::vector<std::pair<Face, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [f, next] = stack.back();
    stack.pop_back();
    bool maximal = true;
    for (std::size_t v = 0; v < n; ++v) {
      Face bit = Face{1} << v;
      if (f & bit) continue;
      if (is_face(f | bit)) {
        maximal = false;
        if (v >= next) stack.push_back({f | bit, v + 1});
      }
    }
    if (maximal) facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return subset(f, g); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (Face facet : facets_) {
    // all subsets of the facet
    Face s = facet;
    while (true) {
      out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & facet;
    }
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int SimplicialComplex::dimension() const {
  int best = -2;
  for (Face f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
  std::vector<Face> out;
  for (Face g : facets_) {
    if (subset(f, g)) out.push_back(g & ~f);
  }
  return SimplicialComplex(n_, std::move(out));
}

std::size_t SimplicialComplex::reduced_homology_rank(int j, std::uint32_t p) const {
  if (j < -1 || is_void()) return 0;
  auto groups = faces_by_size(*this);
  for (auto& [k, v] : groups) std::sort(v.begin(), v.end());
  return homology_rank(groups, j, PrimeField(p));
}

int reisner_depth(const MonomialIdeal& ideal, std::uint32_t p) {
  if (!ideal.is_squarefree()) throw UnsupportedRoute("Reisner depth needs a squarefree ideal");
  if (ideal.is_unit()) return -1;
  const PrimeField F(p);
  SimplicialComplex cx = SimplicialComplex::stanley_reisner(ideal);
  int best = INT_MAX;
  for (Face face : cx.faces()) {
    const int size = std::popcount(face);
    if (size >= best) continue;
    auto groups = faces_by_size(cx.link(face));
    for (auto& [k, v] : groups) std::sort(v.begin(), v.end());
    const int top = groups.empty() ? -1 : groups.rbegin()->first - 1;
    for (int j = -1; j <= top && size + j + 1 < best; ++j) {
      if (homology_rank(groups, j, F) != 0) {
        best = size + j + 1;
        break;
      }
    }
  }
  return best;
}

int monomial_depth(const MonomialIdeal& ideal, std::uint32_t p) {
  if (ideal.is_unit()) return -1;
  if (ideal.is_squarefree()) return reisner_depth(ideal, p);
  std::size_t extra = 0;
  MonomialIdeal pol = polarize(ideal, &extra);
  return reisner_depth(pol, p) - static_cast<int>(extra);
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, std::uint32_t p) {
  if (ideal.is_unit()) return true;
  return monomial_depth(ideal, p) == dimension(ideal);
}

}  // namespace serre::oracle
