#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "serre/errors.hpp"
#include "support.hpp"

namespace serre {
namespace {

using testing::ideal;
using testing::poly;

bool same_polys(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a) {
    if (std::find(b.begin(), b.end(), f) == b.end()) return false;
  }
  return true;
}

TEST(GroebnerTest, SmallBases) {
  auto S = testing::xy();
  auto g1 = buchberger({poly(S, "x"), poly(S, "y")}, S);
  EXPECT_TRUE(same_polys(g1.polynomials(), {poly(S, "x"), poly(S, "y")}));

  auto L = testing::make_ring({"x", "y"}, 101, MonomialOrder::lex());
  auto g2 = buchberger({poly(L, "x^2 - 1"), poly(L, "x*y - 1")}, L);
  EXPECT_TRUE(same_polys(g2.polynomials(), {poly(L, "y^2 - 1"), poly(L, "x - y")}));

  auto g3 = buchberger(std::vector<Polynomial>{}, S);
  EXPECT_TRUE(g3.empty());
}

TEST(GroebnerTest, NormalForms) {
  auto S = testing::xy();
  EXPECT_TRUE(ideal(S, {"x"}).normal_form(poly(S, "x*y")).is_zero());
  EXPECT_EQ(ideal(S, {"x"}).normal_form(poly(S, "y")), poly(S, "y"));
  auto L = testing::make_ring({"x", "y"}, 101, MonomialOrder::lex());
  EXPECT_EQ(ideal(L, {"x^2 - y"}).normal_form(poly(L, "x^2")), poly(L, "y"));
}

TEST(GroebnerTest, RandomBasesSatisfyCriterionAndAreCanonical) {
  std::mt19937_64 rng(11);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto S = testing::make_ring({"x", "y", "z"}, 101, order);
    for (int i = 0; i < 25; ++i) {
      std::vector<Polynomial> gens;
      const std::size_t k = 2 + rng() % 2;
      for (std::size_t j = 0; j < k; ++j) gens.push_back(testing::random_form(S, 2, 3, rng));
      auto gb = buchberger(gens, S);
      EXPECT_TRUE(satisfies_buchberger_criterion(gb));
      for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
      // reduced bases do not depend on the generating set
      std::vector<Polynomial> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(gens[0] * poly(S, "x") + gens[1]);
      auto gb2 = buchberger(shuffled, S);
      EXPECT_TRUE(same_polys(gb.polynomials(), gb2.polynomials()));
    }
  }
}

TEST(SyzygyTest, KnownModules) {
  auto S = testing::xyz();
  auto syz = syzygy_module(std::vector<Polynomial>{poly(S, "x*y"), poly(S, "x*z")}, S);
  ASSERT_EQ(syz.size(), 1u);
  // (z, -y) up to a unit
  const auto& c = syz[0];
  EXPECT_TRUE((c[0] * poly(S, "x*y") + c[1] * poly(S, "x*z")).is_zero());
  EXPECT_TRUE(Ideal(S, {c[0]}).same_ideal(ideal(S, {"z"})));
  EXPECT_TRUE(Ideal(S, {c[1]}).same_ideal(ideal(S, {"y"})));

  EXPECT_TRUE(syzygy_module(std::vector<Polynomial>{poly(S, "x")}, S).empty());

  Column e1{poly(S, "1")};
  auto rep = syzygy_module(std::vector<Column>{e1, e1}, S, 1);
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_TRUE((rep[0][0] + rep[0][1]).is_zero());
  EXPECT_FALSE(rep[0][0].is_zero());
}

TEST(SyzygyTest, RandomSyzygiesAnnihilate) {
  auto S = testing::xyz();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(testing::random_form(S, 1 + static_cast<int>(rng() % 2), 3, rng));
    for (const auto& s : syzygy_module(gens, S)) {
      Polynomial sum(S);
      for (std::size_t j = 0; j < gens.size(); ++j) sum = sum + s[j] * gens[j];
      EXPECT_TRUE(sum.is_zero());
    }
  }
}

TEST(IdealTest, Intersections) {
  auto S = testing::xyz();
  EXPECT_TRUE(ideal_intersection(ideal(S, {"x"}), ideal(S, {"y"})).same_ideal(ideal(S, {"x*y"})));
  EXPECT_TRUE(ideal_intersection(ideal(S, {"x"}), ideal(S, {"x"})).same_ideal(ideal(S, {"x"})));
  EXPECT_TRUE(ideal_intersection(ideal(S, {"x"}), ideal(S, {"y", "z"})).same_ideal(ideal(S, {"x*y", "x*z"})));
}

TEST(IdealTest, ColonsAndSaturation) {
  auto S = testing::xyz();
  auto I = ideal(S, {"x*y", "x*z"});
  EXPECT_TRUE(ideal_colon(I, poly(S, "x")).same_ideal(ideal(S, {"y", "z"})));
  EXPECT_TRUE(ideal_colon(I, Ideal::unit(S)).ideal.same_ideal(I));
  EXPECT_TRUE(ideal_colon(ideal(S, {"x^2"}), poly(S, "x")).same_ideal(ideal(S, {"x"})));
  // (x^2, y) is only (x,y)-primary in three variables, so nothing changes there
  EXPECT_TRUE(saturation(ideal(S, {"x^2", "x*y"}), Ideal::maximal(S)).same_ideal(ideal(S, {"x^2", "x*y"})));
  auto T = testing::xy();
  EXPECT_TRUE(saturation(ideal(T, {"x^2", "x*y"}), Ideal::maximal(T)).same_ideal(ideal(T, {"x"})));
}

TEST(IdealTest, RadicalMembership) {
  auto S = testing::xy();
  EXPECT_TRUE(radical_membership(poly(S, "x"), ideal(S, {"x^2"})));
  EXPECT_FALSE(radical_membership(poly(S, "y"), ideal(S, {"x"})));
  EXPECT_TRUE(radical_membership(poly(S, "x + y"), ideal(S, {"x^2", "y^2"})));
}

TEST(IdealTest, KrullDimension) {
  auto S = testing::xyz();
  EXPECT_EQ(krull_dimension(ideal(S, {"x*y", "x*z"})), 2);
  EXPECT_EQ(krull_dimension(Ideal::zero(S)), 3);
  EXPECT_EQ(krull_dimension(Ideal::unit(S)), -1);
  auto T = testing::xyzw();
  EXPECT_EQ(krull_dimension(ideal(T, {"x*z - y^2", "y*w - z^2", "x*w - y*z"})), 2);
}

TEST(IdealTest, MonomialAndHomogeneousFlags) {
  auto S = testing::xyz();
  EXPECT_TRUE(ideal(S, {"x*y", "z^2"}).is_monomial());
  EXPECT_FALSE(ideal(S, {"x*y - z^2"}).is_monomial());
  EXPECT_TRUE(ideal(S, {"x*y - z^2"}).is_homogeneous());
  EXPECT_FALSE(ideal(S, {"x*y - z"}).is_homogeneous());
  EXPECT_TRUE(ideal(S, {"x", "x + 1"}).is_unit());
}

}  // namespace
}  // namespace serre
