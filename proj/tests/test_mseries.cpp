#include <gtest/gtest.h>

#include "egor/mseries.hpp"

using namespace egor;

namespace {
MSeries V(const std::string& v, long e = 1, Rat c = 1) { return MSeries::variable(v, e, c); }
MSeries K(Rat c) { return MSeries::scalar(c); }
}  // namespace

TEST(MArith, Examples) {
  MSeries p = mv_mul(mv_add(K(1), V("u1")), mv_add(K(1), V("u2")));
  EXPECT_EQ(p.terms().size(), 4u);
  for (const auto& [e, c] : p.terms()) EXPECT_EQ(c, 1);
  EXPECT_EQ(mv_mul(V("x", -1), V("x")).as_scalar(), 1);
  MSeries a({"x"}, {5});
  a.set({0}, 1);
  MSeries b({"x"}, {4});
  b.set({-1}, 1);
  EXPECT_EQ(mv_mul(a, b).trunc()[0], 4);  // min(5 - 1, 4 + 0)
}

TEST(MInv, Examples) {
  Caps caps{{"u1", 6}, {"u2", 6}};
  MSeries g = mv_inv(mv_sub(mv_sub(K(1), V("u1")), V("u2")), caps);
  for (long i = 0; i < 6; ++i)
    for (long j = 0; j < 6; ++j) EXPECT_EQ(g.coeff({i, j}), Rat(binom_int(i + j, i)));
  Caps tc{{"t1", 5}, {"t2", 5}};
  MSeries k = mv_inv(mv_sub(mv_sub(K(1), V("t1", 1, rat(1, 3))), V("t2", 1, rat(2, 3))), tc);
  EXPECT_EQ(k.coeff({2, 1}), Rat(3) * rat(1, 9) * rat(2, 3));
  EXPECT_EQ(mv_inv(K(2)).as_scalar(), rat(1, 2));
  EXPECT_THROW(mv_inv(MSeries::scalar(0)), std::exception);
  // x^-1 y + 1 has no unique minimal monomial: rejected
  EXPECT_THROW(mv_inv(mv_add(V("x"), V("y")), caps), std::exception);
}

TEST(MPow, Examples) {
  Caps caps{{"u", 8}};
  MSeries p = mv_pow_general(mv_sub(K(1), V("u")), -2, caps);
  for (long k = 0; k < 8; ++k) EXPECT_EQ(p.coeff({k}), k + 1);
  EXPECT_EQ(mv_pow_general(mv_add(K(1), V("u")), 0, caps).as_scalar(), 1);
  Caps c2{{"t1", 5}, {"t2", 5}};
  MSeries q = mv_pow_general(mv_sub(K(1), mv_scale(mv_add(V("t1"), V("t2")), rat(1, 2))), rat(-3, 2), c2);
  Series uni = binom_pow(rat(-1, 2), rat(-3, 2), "t", 5);
  // t2 := t1 collapses the total degree
  for (long n = 0; n < 5; ++n) {
    Rat s = 0;
    for (long i = 0; i <= n; ++i) s += q.coeff({i, n - i});
    EXPECT_EQ(s, uni.coeff(n) * Rat(Int(1) << n));
  }
  EXPECT_THROW(mv_pow_general(mv_add(K(2), V("u")), rat(1, 2), caps), std::domain_error);
}

TEST(MRes, Examples) {
  long s = 3, k = 2, q = 1;
  MSeries f = mv_mul(mv_pow_int(mv_add(K(1), V("x")), s), mv_pow_int(mv_add(K(1), V("y")), k));
  f = mv_mul(f, mv_mul(V("x", -q - 1), V("y", -(k - q + 2))));
  // C(3,1) * C(2,2) = 3
  EXPECT_EQ(mv_res(f, {"x", "y"}).as_scalar(), 3);
  EXPECT_EQ(mv_res(f, {"y", "x"}).as_scalar(), 3);
  EXPECT_TRUE(mv_res(mv_add(K(1), V("x")), {"x"}).is_zero());
  Series u = mul(binom_pow(1, 4, "w", 10), monomial("w", -3));
  EXPECT_EQ(mv_res(MSeries::from_series(u), {"w"}).as_scalar(), res(u));
}

TEST(MSubst, Examples) {
  MSeries a = mv_pow_int(mv_add(K(1), V("x")), 4);
  MSeries b = mv_subst(a, "x", V("y", 1, 2));
  MSeries want = mv_pow_int(mv_add(K(1), V("y", 1, 2)), 4);
  EXPECT_TRUE(mv_equal_on_window(b, want));
  MSeries c = mv_subst(mv_add(mv_mul(V("x"), V("y")), K(3)), "x", Rat(0));
  EXPECT_EQ(c.constant_term(), 3);
  // sum_q y^q res_x (1+x)^s x^{-q-1} = (1+y)^s
  long s = 5;
  MSeries tot = K(0);
  for (long qq = 0; qq <= s + 2; ++qq) {
    MSeries r = mv_res(mv_mul(mv_pow_int(mv_add(K(1), V("x")), s), V("x", -qq - 1)), {"x"});
    tot = mv_add(tot, mv_mul(V("y", qq), r));
  }
  EXPECT_TRUE(mv_equal_on_window(tot, mv_pow_int(mv_add(K(1), V("y")), s)));
  // infinite series in x: value needs positive order
  Caps caps{{"x", 6}};
  MSeries g = mv_inv(mv_sub(K(1), V("x")), caps);
  EXPECT_THROW(mv_subst(g, "x", K(1), caps), std::exception);
}

TEST(RatFun, Examples) {
  MSeries u = V("u");
  EXPECT_TRUE(ratfun_equal(mv_sub(K(1), mv_mul(u, u)), mv_sub(K(1), u), mv_add(K(1), u), K(1)));
  EXPECT_FALSE(ratfun_equal(K(1), mv_sub(K(1), u), K(1), mv_add(K(1), u)));
}

TEST(MProperties, UnivariateEmbeddingCommutes) {
  Series a = make("w", {{0, 2}, {1, -1}, {3, rat(1, 2)}}, kExact);
  Series b = make("w", {{-1, 1}, {2, 3}}, kExact);
  Series p = mul(a, inv(b, 10));
  MSeries q = mv_mul(MSeries::from_series(a), mv_inv(MSeries::from_series(b), {{"w", 9}}));
  for (long k = -1; k < 8; ++k) EXPECT_EQ(q.coeff({k}), p.coeff(k)) << k;
}
