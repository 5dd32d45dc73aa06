#include <gtest/gtest.h>

#include "egor/numeric.hpp"
#include "egor/oracle.hpp"

using namespace egor;

TEST(Rational, CanonicalAndParse) {
  EXPECT_EQ(rat_str(rat(4, 2)), "2/1");
  EXPECT_EQ(rat_str(rat(3, -6)), "-1/2");
  EXPECT_EQ(parse_rat("-3/9"), rat(-1, 3));
  EXPECT_EQ(parse_rat("+7"), 7);
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/"), std::invalid_argument);
  EXPECT_THROW(rat(1, 0), std::domain_error);
  EXPECT_EQ(floor_rat(rat(-1, 2)), -1);
  EXPECT_EQ(floor_rat(rat(7, 2)), 3);
}

TEST(Factorial, Examples) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Binom, Examples) {
  EXPECT_EQ(binom_int(4, 2), 6);
  EXPECT_EQ(binom_int(2, 3), 0);
  EXPECT_EQ(binom_int(7, 4), 35);
  EXPECT_EQ(binom_int(3, -1), 0);
  EXPECT_EQ(binom_int(-3, 2), 6);
  EXPECT_EQ(binom_general(-3, 2), 6);
  EXPECT_EQ(binom_general(rat(1, 2), 2), rat(-1, 8));
  EXPECT_EQ(binom_general(rat(3, 2), 1), rat(3, 2));
  EXPECT_EQ(binom_primed(rat(-1, 2), 0), 0);
  EXPECT_EQ(binom_primed(3, 1), 3);
  EXPECT_EQ(binom_primed(2, 5), 0);
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial_general(0, {1, 1}), 2);
  EXPECT_EQ(multinomial_general(rat(3, 2), {1, 1}), rat(35, 4));
  EXPECT_EQ(multinomial_general(0, {}), 1);
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(7), -1);
  EXPECT_THROW(mobius(0), std::exception);
}

TEST(Necklace, Examples) {
  EXPECT_EQ(necklace_rank(2, 3), 2);
  EXPECT_EQ(necklace_rank(2, 1), 2);
  EXPECT_EQ(necklace_rank(2, 4), 3);
}

TEST(Properties, BinomFactorial) {
  for (long a = 0; a <= 20; ++a)
    for (long b = 0; b <= a; ++b) EXPECT_EQ(Rat(binom_int(a, b)), Rat(factorial(a)) / Rat(factorial(b) * factorial(a - b)));
}

TEST(Properties, Pascal) {
  for (Rat a : {Rat(-5), rat(1, 2), rat(-7, 3), Rat(4), rat(11, 5)})
    for (long b = 1; b < 8; ++b) EXPECT_EQ(binom_general(a, b), binom_general(a - 1, b) + binom_general(a - 1, b - 1));
}

TEST(Properties, NegativeUpperReflection) {
  for (long n = 1; n < 8; ++n)
    for (long k = 0; k < 8; ++k) EXPECT_EQ(binom_general(-n, k), (k % 2 ? -1 : 1) * Rat(binom_int(n + k - 1, k)));
}

TEST(Properties, MultinomialAtZero) {
  std::vector<std::vector<long>> cases{{2, 3}, {1, 1, 1}, {4, 0, 2}, {5}};
  for (const auto& p : cases) {
    long t = 0;
    Int den = 1;
    for (long x : p) {
      t += x;
      den *= factorial(x);
    }
    EXPECT_EQ(multinomial_general(0, p), Rat(factorial(t)) / Rat(den));
  }
}

TEST(Properties, NecklaceMatchesLyndon) {
  for (long q = 1; q <= 3; ++q)
    for (long n = 1; n <= 8; ++n) EXPECT_EQ(necklace_rank(q, n), lyndon_count(q, n)) << q << "," << n;
}
