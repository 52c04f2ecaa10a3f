#include <gtest/gtest.h>

#include "serre/errors.hpp"
#include "support.hpp"

namespace serre {
namespace {

using testing::ideal;
using testing::poly;
using testing::quotient;

TEST(SerreClassTest, Membership) {
  auto S = testing::xyz();
  EXPECT_TRUE(SerreClass::dim_le(1).contains(quotient(S, {"y", "z"})));
  EXPECT_FALSE(SerreClass::zero_only().contains(quotient(S, {"x*y", "x*z"})));
  EXPECT_TRUE(SerreClass::zero_only().contains(FPModule::zero(RingDescriptor(S))));

  auto T = testing::xy();
  auto sub = subquotient(RingDescriptor(T), 1, {0}, {Column{poly(T, "x")}},
                         {Column{poly(T, "x^2")}, Column{poly(T, "x*y")}});
  EXPECT_TRUE(SerreClass::supp_in(ideal(T, {"x", "y"})).contains(sub));
  EXPECT_FALSE(SerreClass::supp_in(ideal(T, {"x", "y"})).contains(quotient(T, {"x"})));
  EXPECT_TRUE(SerreClass::supp_in(ideal(T, {"x"})).contains(quotient(T, {"x"})));
}

TEST(SerreClassTest, Primes) {
  auto S = testing::xyz();
  EXPECT_TRUE(SerreClass::dim_le(1).contains_prime(ideal(S, {"y", "z"})));
  EXPECT_FALSE(SerreClass::dim_le(1).contains_prime(ideal(S, {"x"})));
  EXPECT_TRUE(SerreClass::supp_in(Ideal::maximal(S)).contains_prime(Ideal::maximal(S)));
  EXPECT_FALSE(SerreClass::zero_only().contains_prime(Ideal::maximal(S)));
}

TEST(SerreClassTest, Names) {
  auto S = testing::xy();
  EXPECT_EQ(SerreClass::zero_only().to_string(), "zero");
  EXPECT_EQ(SerreClass::dim_le(2).to_string(), "dim_le(2)");
  EXPECT_EQ(SerreClass::supp_in(ideal(S, {"x"})).to_string(), "supp_in(x)");
}

TEST(SerreClassTest, InvalidParameters) {
  auto S = testing::xy();
  EXPECT_THROW(SerreClass::dim_le(-1), PreconditionError);
  EXPECT_THROW(SerreClass::supp_in(Ideal::unit(S)), PreconditionError);
}

// Closure under sub, quotient and extension on 0 → N → M → M/N → 0.
TEST(SerreClassTest, ShortExactSequences) {
  auto S = testing::xyz();
  std::mt19937_64 rng(3);
  auto classes = testing::standard_classes(S, ideal(S, {"x", "y"}));
  for (int trial = 0; trial < 30; ++trial) {
    auto base = Ideal(S, {testing::random_form(S, 2, 2, rng), testing::random_form(S, 2, 2, rng)});
    auto M = cyclic_module(RingDescriptor(S), base);
    auto g = testing::random_form(S, 1, 2, rng);
    std::vector<Column> rels, gens{Column{g}};
    for (const auto& f : base.generators()) rels.push_back(Column{f});
    gens.insert(gens.end(), rels.begin(), rels.end());
    auto N = subquotient(RingDescriptor(S), 1, {0}, gens, rels);
    auto Q = M.quotient_by({g});
    for (const auto& cls : classes) {
      EXPECT_EQ(cls.contains(M), cls.contains(N) && cls.contains(Q)) << cls.to_string();
    }
  }
}

}  // namespace
}  // namespace serre
