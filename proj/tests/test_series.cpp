#include <gtest/gtest.h>

#include "egor/series.hpp"
#include "property_suite.hpp"

using namespace egor;

namespace {
Series W(std::vector<std::pair<long, Rat>> t, long trunc = kExact) { return make("w", t, trunc); }
}  // namespace

TEST(Make, DropsZerosAndRejectsOutOfWindow) {
  Series s = W({{0, 1}, {1, 0}, {2, 3}}, 10);
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_TRUE(W({}, 5).is_zero());
  EXPECT_EQ(W({{-1, 1}}, 5).order(), -1);
  EXPECT_THROW(W({{5, 1}}, 5), std::exception);
}

TEST(Arith, Examples) {
  EXPECT_TRUE(equal_on_window(mul(W({{0, 1}, {1, 1}}), W({{0, 1}, {1, -1}})), W({{0, 1}, {2, -1}})));
  EXPECT_TRUE(equal_on_window(mul(W({{-1, 1}}), W({{0, 1}, {1, 1}})), W({{-1, 1}, {0, 1}})));
  EXPECT_TRUE(equal_on_window(add(W({{0, 1}, {1, 1}}), W({{0, -1}, {1, 1}})), W({{1, 2}})));
  EXPECT_THROW(add(W({{0, 1}}), make("x", {{0, 1}}, kExact)), std::exception);
}

TEST(Arith, MulWindow) {
  // (w^-1 + O(w^3)) * (w^2 + O(w^5)): window min(3+2, 5-1) = 4
  Series p = mul(W({{-1, 1}}, 3), W({{2, 1}}, 5));
  EXPECT_EQ(p.trunc(), 4);
}

TEST(Inv, Examples) {
  Series g = inv(W({{0, 1}, {1, -1}}), 10);
  for (long k = 0; k < 10; ++k) EXPECT_EQ(g.coeff(k), 1);
  Series h = inv(W({{1, 1}, {2, 1}}), 10);
  EXPECT_EQ(h.order(), -1);
  EXPECT_EQ(h.coeff(-1), 1);
  EXPECT_EQ(h.coeff(0), -1);
  EXPECT_EQ(h.coeff(1), 1);
  EXPECT_EQ(inv(W({{0, 2}})).coeff(0), rat(1, 2));
  EXPECT_TRUE(inv(W({{0, 2}})).exact());
  EXPECT_THROW(inv(W({})), std::exception);
}

TEST(Pow, Examples) {
  Series p = pow_int(W({{0, 1}, {1, 1}}), 4);
  std::vector<long> want{1, 4, 6, 4, 1};
  for (long k = 0; k < 5; ++k) EXPECT_EQ(p.coeff(k), want[k]);
  EXPECT_EQ(p.coeff(5), 0);
  Series q = pow_int(W({{0, 1}, {1, -1}}), -2, 12);
  for (long k = 0; k < 12; ++k) EXPECT_EQ(q.coeff(k), k + 1);
  EXPECT_EQ(pow_int(W({{0, 3}, {1, 1}}), 0).coeff(0), 1);
  EXPECT_THROW(pow_int(W({}), -1), std::exception);
}

TEST(BinomPow, Examples) {
  Series c = binom_pow(-4, rat(-1, 2), "w", 8);
  std::vector<long> want{1, 2, 6, 20, 70, 252, 924, 3432};
  for (long k = 0; k < 8; ++k) EXPECT_EQ(c.coeff(k), want[k]);
  Series h = binom_pow(1, rat(1, 2), "w", 4);
  EXPECT_EQ(h.coeff(1), rat(1, 2));
  EXPECT_EQ(h.coeff(2), rat(-1, 8));
  EXPECT_TRUE(binom_pow(1, 3, "w", 2).exact());
  EXPECT_EQ(binom_pow(1, 3, "w", 2).coeff(3), 1);
}

TEST(Coeff, WindowViolation) {
  EXPECT_EQ(pow_int(W({{0, 1}, {1, 1}}), 4).coeff(2), 6);
  EXPECT_EQ(W({{-1, 1}, {0, 1}}).coeff(-1), 1);
  EXPECT_THROW(W({{0, 1}, {1, 1}}, 4).coeff(5), std::out_of_range);
}

TEST(Res, Examples) {
  EXPECT_EQ(res(W({{-1, 1}})), 1);
  EXPECT_EQ(res(mul(pow_int(W({{0, 1}, {1, 1}}), 4), monomial("w", -3))), 6);
  EXPECT_EQ(res(W({{0, 1}, {1, 1}})), 0);
  EXPECT_THROW(res(W({{-2, 1}}, -1)), std::out_of_range);
}

TEST(Compose, Examples) {
  // (1+z)^s at z = x^2/(1-x^2) gives (1-x^2)^{-s}
  long s = 3;
  Series outer = binom_pow(1, s, "z", kExact);
  Series inner = mul(monomial("x", 2), inv(make("x", {{0, 1}, {2, -1}}, kExact), 12));
  Series got = compose(outer, inner);
  Series want = binom_pow(-1, -s, "x", 24);
  for (long k = 0; k < 12; ++k) EXPECT_EQ(got.coeff(k), k % 2 ? Rat(0) : want.coeff(k / 2)) << k;
  Series A = binom_pow(1, rat(1, 3), "w", 9);
  EXPECT_TRUE(equal_on_window(compose(A, monomial("w", 1)), A));
  // 1/(1-z) at w+w^2: Fibonacci numbers
  Series geo = inv(make("z", {{0, 1}, {1, -1}}, kExact), 10);
  Series f = compose(geo, make("w", {{1, 1}, {2, 1}}, kExact));
  std::vector<long> fib{1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (long k = 0; k < 10; ++k) EXPECT_EQ(f.coeff(k), fib[k]);
  EXPECT_THROW(compose(geo, make("w", {{0, 1}, {1, 1}}, kExact)), std::domain_error);
}

TEST(Reverse, Examples) {
  Series h = mul(monomial("w", 1), inv(make("w", {{0, 1}, {1, -1}}, kExact), 10));
  Series hb = reverse(h);
  for (long k = 1; k < 9; ++k) EXPECT_EQ(hb.coeff(k), k % 2 ? 1 : -1);
  Series r = reverse(make("w", {{1, 1}, {2, 1}}, kExact), 8);
  std::vector<long> want{0, 1, -1, 2, -5, 14, -42, 132};
  for (long k = 0; k < 8; ++k) EXPECT_EQ(r.coeff(k), want[k]);
  EXPECT_EQ(reverse(monomial("w", 1), 5).coeff(1), 1);
  EXPECT_THROW(reverse(make("w", {{2, 1}}, kExact)), std::domain_error);
}

TEST(Derive, Examples) {
  EXPECT_EQ(derive(monomial("w", -1)).coeff(-2), -1);
  Series A = pow_int(make("w", {{0, 1}, {1, 1}}, kExact), 4);
  EXPECT_EQ(2 * res(mul(A, monomial("w", -3))), 12);
  EXPECT_EQ(res(mul(derive(A), monomial("w", -2))), 12);
  EXPECT_TRUE(derive(constant("w", 5)).is_zero());
  EXPECT_EQ(derive(W({{0, 1}, {3, 1}}, 6)).trunc(), 5);
}

TEST(ExpLog, Examples) {
  Series e = exp_series(monomial("w", 1), 8);
  for (long k = 0; k < 8; ++k) EXPECT_EQ(e.coeff(k), Rat(1) / Rat(factorial(k)));
  Series sq = pow_int(sub(e, constant("w", 1)), 2);
  EXPECT_EQ(sq.order(), 2);
  EXPECT_EQ(sq.coeff(2), 1);
  Series l = log_series(e);
  EXPECT_TRUE(equal_on_window(l, monomial("w", 1)));
  EXPECT_GE(l.trunc(), 8);
  EXPECT_THROW(exp_series(constant("w", 1)), std::domain_error);
  EXPECT_THROW(log_series(constant("w", 2)), std::domain_error);
}

TEST(GeomSum, Examples) {
  Series g = geom_sum_finite(monomial("w", 1), 3);
  EXPECT_TRUE(equal_on_window(g, make("w", {{0, 1}, {1, 1}, {2, 1}}, kExact)));
  EXPECT_TRUE(geom_sum_finite(monomial("w", 1), 0).is_zero());
  EXPECT_THROW(geom_sum_finite(constant("w", 1), 4), std::exception);
  // Laurent ratio q = (1+y)/y, N = 3: sum q^k = 1 + q + q^2
  Series q = make("y", {{-1, 1}, {0, 1}}, kExact);
  Series want = add(add(constant("y", 1), q), mul(q, q));
  EXPECT_TRUE(equal_on_window(geom_sum_finite(q, 3), want));
}

TEST(Properties, RandomisedRules) {
  auto st = props::run(20240917, 200);
  EXPECT_EQ(st.instances, 200);
  EXPECT_GT(st.checks, 2000);
  for (const auto& f : st.failures) ADD_FAILURE() << f;
}
