#include <gtest/gtest.h>

#include <random>

#include "serre/errors.hpp"
#include "support.hpp"

namespace serre {
namespace {

using testing::poly;

TEST(PrimeFieldTest, InverseRoundTrip) {
  PrimeField f(101);
  for (Coeff a = 1; a < 101; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 100u);
  EXPECT_EQ(f.to_signed(100), -1);
  EXPECT_EQ(f.from_int(202), 0u);
}

TEST(PrimeFieldTest, RejectsComposite) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(PrimeField(100), PreconditionError);
}

TEST(MonomialTest, ArithmeticAndDivisibility) {
  std::vector<int> a{2, 1, 0}, b{1, 0, 3};
  Monomial ma{std::span<const int>(a)}, mb{std::span<const int>(b)};
  Monomial prod = ma * mb;
  EXPECT_EQ(prod[0], 3);
  EXPECT_EQ(prod[2], 3);
  EXPECT_EQ(prod.degree(), 7u);
  EXPECT_TRUE(ma.divides(prod));
  EXPECT_FALSE(ma.divides(mb));
  EXPECT_EQ(prod / mb, ma);
  Monomial l = ma.lcm(mb);
  EXPECT_EQ(l[0], 2);
  EXPECT_EQ(l[1], 1);
  EXPECT_EQ(l[2], 3);
  EXPECT_FALSE(ma.coprime(mb));
  EXPECT_TRUE(Monomial::variable(1).coprime(Monomial::variable(2)));
}

TEST(MonomialOrderTest, LexAndGrevlex) {
  // x*z^2 vs y^3: same degree
  std::vector<int> a{1, 0, 2}, b{0, 3, 0};
  Monomial ma{std::span<const int>(a)}, mb{std::span<const int>(b)};
  EXPECT_GT(MonomialOrder::lex().compare(ma, mb), 0);
  // grevlex: smallest last exponent wins; z^2 in ma makes it smaller
  EXPECT_LT(MonomialOrder::grevlex().compare(ma, mb), 0);
  // degree first in grevlex
  EXPECT_GT(MonomialOrder::grevlex().compare(Monomial::variable(2, 2), Monomial::variable(0)), 0);
  EXPECT_LT(MonomialOrder::lex().compare(Monomial::variable(2, 2), Monomial::variable(0)), 0);
}

TEST(PolynomialTest, BasicIdentities) {
  auto S = testing::xy();
  EXPECT_EQ(poly(S, "(x+y) + (x-y)"), poly(S, "2*x"));
  EXPECT_TRUE((poly(S, "x^3 + y") * Polynomial(S)).is_zero());
  auto T = PolynomialRing::make(2, {"x"});
  EXPECT_EQ(poly(T, "(x+1)*(x+1)"), poly(T, "x^2 + 1"));
  EXPECT_EQ(poly(S, "x - x"), Polynomial(S));
  EXPECT_EQ(poly(S, "(x+y)^2"), poly(S, "x^2 + 2*x*y + y^2"));
}

TEST(PolynomialTest, RingAxiomsOnRandomInputs) {
  auto S = testing::xyz();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto f = testing::random_poly(S, 3, 4, rng);
    auto g = testing::random_poly(S, 3, 4, rng);
    auto h = testing::random_poly(S, 2, 3, rng);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(-(-f), f);
  }
}

TEST(PolynomialTest, MismatchedRingsThrow) {
  auto S = testing::xy();
  auto T = testing::xyz();
  EXPECT_THROW(poly(S, "x") + poly(T, "x"), DescriptorMismatch);
}

TEST(PolynomialTest, HomogeneityAndDegree) {
  auto S = testing::xyz();
  EXPECT_TRUE(poly(S, "x*y - z^2").is_homogeneous());
  EXPECT_FALSE(poly(S, "x*y - z").is_homogeneous());
  EXPECT_EQ(poly(S, "x*y - z").degree(), 2);
}

TEST(DivisionTest, SmallCases) {
  auto S = testing::xy();
  auto d1 = divide(poly(S, "x^2*y"), {poly(S, "x*y")});
  EXPECT_EQ(d1.quotients[0], poly(S, "x"));
  EXPECT_TRUE(d1.remainder.is_zero());

  auto d2 = divide(poly(S, "x"), {poly(S, "y")});
  EXPECT_TRUE(d2.quotients[0].is_zero());
  EXPECT_EQ(d2.remainder, poly(S, "x"));

  auto L = testing::make_ring({"x", "y"}, 101, MonomialOrder::lex());
  auto d3 = divide(poly(L, "x^2 + x*y"), {poly(L, "x + y")});
  EXPECT_EQ(d3.quotients[0], poly(L, "x"));
  EXPECT_TRUE(d3.remainder.is_zero());
}

// f = Σ q_i g_i + r, and no term of r is divisible by a leading monomial.
TEST(DivisionTest, IdentityHoldsOnRandomInputs) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto S = testing::make_ring({"x", "y", "z"}, 101, order);
    for (int i = 0; i < 600; ++i) {
      auto f = testing::random_poly(S, 5, 6, rng);
      std::vector<Polynomial> gs;
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t j = 0; j < k; ++j) {
        auto g = testing::random_poly(S, 3, 3, rng);
        if (!g.is_zero()) gs.push_back(g);
      }
      if (gs.empty()) continue;
      auto res = divide(f, gs);
      Polynomial sum = res.remainder;
      for (std::size_t j = 0; j < gs.size(); ++j) sum = sum + res.quotients[j] * gs[j];
      ASSERT_EQ(sum, f);
      for (const auto& t : res.remainder.terms()) {
        for (const auto& g : gs) ASSERT_FALSE(g.lead().mono.divides(t.mono));
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 1000);
}

}  // namespace
}  // namespace serre
