#include <gtest/gtest.h>

#include "egor/combinum.hpp"
#include "egor/oracle.hpp"

using namespace egor;

TEST(Residues, Examples) {
  EXPECT_EQ(binom_via_res(4, 2), 6);
  EXPECT_EQ(binom_via_res(4, 7), 0);
  EXPECT_EQ(binom_via_res(0, 0), 1);
  EXPECT_EQ(negbinom_via_res(2, 3), 4);
  for (long k = 0; k < 6; ++k) EXPECT_EQ(negbinom_via_res(1, k), 1);
  EXPECT_EQ(negbinom_via_res(3, 0), 1);
  EXPECT_EQ(kronecker(3, 3), 1);
  EXPECT_EQ(kronecker(3, 4), 0);
  EXPECT_EQ(kronecker(0, 0), 1);
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling2(3, 2), 3);
  for (long n = 0; n < 7; ++n) EXPECT_EQ(stirling2(n, n), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(3, 0), 0);
}

TEST(Ballot, Examples) {
  EXPECT_EQ(ballot_phi(3, 2), 5);
  for (long x = 0; x < 5; ++x) EXPECT_EQ(ballot_phi(x, 0), 1);
  EXPECT_EQ(ballot_phi(2, 2), 2);
  EXPECT_THROW(ballot_phi(1, 2), std::exception);
}

TEST(Compositions, Examples) {
  EXPECT_EQ(omega_dd(2, 1), 1);
  EXPECT_EQ(omega_dd(5, 2), 0);
  EXPECT_EQ(omega_dd(6, 2), 2);
  EXPECT_EQ(comp_product_sum(2, 1), 3);
  EXPECT_EQ(comp_product_sum(3, 2), 12);
  EXPECT_EQ(comp_product_sum(1, 2), 0);
}

TEST(Checked, BothRoutes) {
  auto v = checked_binom(9, 4);
  EXPECT_EQ(v.value, 126);
  EXPECT_EQ(v.via_closed_form, v.via_residue);
}

TEST(Properties, RouteAgreement) {
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) EXPECT_EQ(binom_via_res(n, k), Rat(binom_int(n, k)));
}

TEST(Properties, StirlingAgainstOracleAndRecurrence) {
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= 8; ++k) {
      EXPECT_EQ(stirling2(n, k), stirling2_recurrence(n, k)) << n << "," << k;
      EXPECT_EQ(stirling2(n, k), set_partitions_count(n, k)) << n << "," << k;
    }
}

TEST(Properties, BallotAgainstPaths) {
  for (long x = 0; x <= 14; ++x)
    for (long y = 0; y <= x && x + y <= 14; ++y) EXPECT_EQ(ballot_phi(x, y), dominated_path_count(x, y));
}

TEST(Properties, CompositionOracles) {
  for (long m = 1; m <= 14; ++m)
    for (long q = 1; q <= 6; ++q) {
      EXPECT_EQ(omega_dd(m, q), Int(enum_compositions(m, q, Parity::all_even).size()));
      Int t = 0;
      for (const auto& c : enum_compositions(m, q)) {
        Int p = 1;
        for (long x : c) p *= x + 1;
        t += p;
      }
      EXPECT_EQ(comp_product_sum(m, q), t);
    }
}

TEST(Properties, KroneckerOrthogonality) {
  std::vector<Rat> a{3, rat(-1, 2), 7, 0, rat(5, 3)};
  for (long n = 0; n < 5; ++n) {
    Rat s = 0;
    for (long k = 0; k < 5; ++k) s += Rat(kronecker(n, k)) * a[k];
    EXPECT_EQ(s, a[n]);
  }
}
