#include <gtest/gtest.h>

#include <random>

#include "serre/errors.hpp"
#include "serre/oracle/monomial_ideal.hpp"
#include "serre/oracle/simplicial.hpp"
#include "serre/oracle/sweep.hpp"
#include "support.hpp"

namespace serre::oracle {
namespace {

using serre::testing::ideal;

// Prime masks over x=bit0, y=bit1, z=bit2.
constexpr PrimeMask X = 1, Y = 2, Z = 4;

MonomialIdeal mono(const RingPtr& S, std::initializer_list<std::string_view> gens) {
  return MonomialIdeal::from_ideal(ideal(S, gens));
}

TEST(MonomialIdealTest, MinimalGenerators) {
  MonomialIdeal I(2, {{2, 0}, {1, 1}, {3, 0}, {2, 1}});
  EXPECT_EQ(I.generators().size(), 2u);
  EXPECT_TRUE(I.contains(Exponents{3, 2}));
  EXPECT_FALSE(I.contains(Exponents{0, 5}));
  EXPECT_FALSE(I.is_squarefree());
  EXPECT_TRUE(MonomialIdeal(2, {{0, 0}}).is_unit());
}

TEST(MonomialIdealTest, FromIdeal) {
  auto S = serre::testing::xyz();
  auto I = mono(S, {"x*y", "x*z"});
  EXPECT_EQ(I.to_string(S->variables()), "(x*y,x*z)");
  EXPECT_THROW(mono(S, {"x*y - z^2"}), UnsupportedRoute);
  EXPECT_TRUE(I.to_ideal(S).same_ideal(ideal(S, {"x*y", "x*z"})));
}

TEST(AssociatedPrimesTest, SmallIdeals) {
  auto S = serre::testing::xyz();
  EXPECT_EQ(associated_primes(mono(S, {"x*y", "x*z"})), (std::vector<PrimeMask>{X, Y | Z}));
  MonomialIdeal B(2, {{2, 0}, {1, 1}});
  EXPECT_EQ(associated_primes(B), (std::vector<PrimeMask>{X, X | Y}));
  EXPECT_EQ(minimal_primes(B), (std::vector<PrimeMask>{X}));
  EXPECT_EQ(associated_primes(MonomialIdeal(3, {})), (std::vector<PrimeMask>{0}));
}

TEST(AssociatedPrimesTest, IrreducibleComponentsIntersectBack) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    std::vector<Exponents> gens;
    for (int g = 0; g < 3; ++g) {
      Exponents e(3);
      for (auto& v : e) v = static_cast<int>(rng() % 3);
      gens.push_back(e);
    }
    MonomialIdeal I(3, gens);
    if (I.is_unit()) continue;
    auto comps = irreducible_components(I);
    ASSERT_FALSE(comps.empty());
    std::optional<MonomialIdeal> meet;
    for (const auto& c : comps) {
      std::vector<Exponents> pure;
      for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] == 0) continue;
        Exponents e(3, 0);
        e[i] = c[i];
        pure.push_back(e);
      }
      MonomialIdeal q(3, pure);
      meet = meet ? meet->intersect(q) : q;
    }
    EXPECT_TRUE(*meet == I);
  }
}

TEST(DimensionTest, AgreesWithEngine) {
  auto S = serre::testing::xyzw();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    std::vector<Exponents> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < k; ++g) {
      Exponents e(4);
      for (auto& v : e) v = static_cast<int>(rng() % 3);
      gens.push_back(e);
    }
    MonomialIdeal I(4, gens);
    EXPECT_EQ(dimension(I), krull_dimension(I.to_ideal(S)));
  }
}

TEST(ReisnerTest, Depths) {
  auto S = serre::testing::xyz();
  EXPECT_EQ(reisner_depth(mono(S, {"x*y", "x*z"}), 101), 1);
  EXPECT_EQ(reisner_depth(MonomialIdeal(3, {}), 101), 3);
  EXPECT_EQ(reisner_depth(MonomialIdeal(2, {{1, 1}}), 101), 1);
  EXPECT_THROW(reisner_depth(MonomialIdeal(2, {{2, 0}}), 101), UnsupportedRoute);
  // polarization: S/(x^2, xy) in two variables has depth 0
  EXPECT_EQ(monomial_depth(MonomialIdeal(2, {{2, 0}, {1, 1}}), 101), 0);
  EXPECT_TRUE(is_cohen_macaulay(MonomialIdeal(2, {{2, 0}}), 101));
}

TEST(ReisnerTest, TorsionInHomologyDependsOnCharacteristic) {
  // six-vertex triangulation of the real projective plane
  std::vector<Face> facets;
  const int tri[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  for (const auto& t : tri) facets.push_back((Face{1} << t[0]) | (Face{1} << t[1]) | (Face{1} << t[2]));
  SimplicialComplex rp2(6, facets);
  EXPECT_EQ(rp2.reduced_homology_rank(1, 2), 1u);
  EXPECT_EQ(rp2.reduced_homology_rank(1, 3), 0u);
  EXPECT_EQ(rp2.reduced_homology_rank(2, 3), 0u);
  EXPECT_EQ(rp2.reduced_homology_rank(0, 3), 0u);
}

TEST(SimplicialTest, Links) {
  // path y - z plus isolated x
  SimplicialComplex d(3, {X, Y | Z});
  EXPECT_EQ(d.reduced_homology_rank(0, 101), 1u);
  auto l = d.link(Y);
  EXPECT_TRUE(l.contains(Z));
  EXPECT_FALSE(l.contains(X));
  EXPECT_EQ(d.dimension(), 1);
}

TEST(SweepTest, LocalCriterion) {
  auto S = serre::testing::xyz();
  auto A = mono(S, {"x*y", "x*z"});
  EXPECT_TRUE(local_criterion_check(A, SerreClass::dim_le(1), 101));
  EXPECT_FALSE(local_criterion_check(A, SerreClass::dim_le(0), 101));
  EXPECT_TRUE(local_criterion_check(MonomialIdeal(3, {}), SerreClass::zero_only(), 101));
}

TEST(SweepTest, NonCMLocus) {
  auto S = serre::testing::xyz();
  auto A = mono(S, {"x*y", "x*z"});
  EXPECT_EQ(ncm_locus_monomial(A, 101), MonomialIdeal::prime(3, X | Y | Z));
  EXPECT_TRUE(ncm_locus_monomial(MonomialIdeal(2, {{1, 0}}), 101).is_unit());
  EXPECT_EQ(ncm_locus_monomial(MonomialIdeal(2, {{2, 0}, {1, 1}}), 101), MonomialIdeal::prime(2, X | Y));
  EXPECT_TRUE(ncm_verdict(A, SerreClass::dim_le(1), 101));
  EXPECT_FALSE(ncm_verdict(A, SerreClass::dim_le(0), 101));
}

TEST(SweepTest, PrimeClassMembership) {
  EXPECT_TRUE(prime_in_class(SerreClass::dim_le(1), Y | Z, 3));
  EXPECT_FALSE(prime_in_class(SerreClass::dim_le(1), X, 3));
  EXPECT_FALSE(prime_in_class(SerreClass::zero_only(), X | Y | Z, 3));
  auto S = serre::testing::xyz();
  EXPECT_TRUE(prime_in_class(SerreClass::supp_in(ideal(S, {"x"})), X | Y, 3));
  EXPECT_FALSE(prime_in_class(SerreClass::supp_in(ideal(S, {"x", "y"})), X | Z, 3));
}

TEST(SweepTest, HeightAndDimension) {
  auto S = serre::testing::xyz();
  auto A = mono(S, {"x*y", "x*z"});
  EXPECT_EQ(oracle_s_height(MonomialIdeal(3, {{1, 0, 0}}), A, SerreClass::zero_only(), 101), GradeValue::finite(0));
  EXPECT_EQ(oracle_s_height(MonomialIdeal(3, {{0, 1, 0}}), A, SerreClass::dim_le(1), 101), GradeValue::plus_infinity());
  EXPECT_EQ(oracle_s_dimension(A, SerreClass::zero_only(), 101), GradeValue::finite(2));
}

}  // namespace
}  // namespace serre::oracle
