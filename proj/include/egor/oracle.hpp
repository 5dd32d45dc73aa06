#pragma once
#include <array>
#include <string>
#include <vector>

#include "egor/numeric.hpp"

namespace egor {

enum class Parity { all, all_even, has_odd };
using Composition = std::vector<long>;

std::vector<Composition> enum_compositions(long m, long q, Parity filter = Parity::all);

enum class LevsVariant { levs2, levs1 };
Rat eval_levs_sum(long n, long s, LevsVariant variant);

// pieces of the quadric-class sums, evaluated by direct summation
Rat levs_S1(long n, long s);
Rat levs_S4(long n, long s);
Rat levs_S5(long n, long s);
Rat levs_S6(long n, long s);
Rat levs_S7(long n, long s);
Rat corollary_lhs(long n, long s);
// closed forms
Rat levs_T(long n, long p);
Rat levs_S(long n, long s);

// Weighted count of staircase pairs; strict requires i_t > j_t for all t.
Int enum_staircase_pairs(long n, bool strict);
// number of strict pairs with first row index i and last column index j
Int staircase_strict_count(long n, long i, long j);
Int eval_Lbar_formula(long n, long i, long j);

Rat a73_first_form(long n);
Rat a73_second_form(long n);

struct SixfoldTerms {
  Rat T1, T2, T3;
};
SixfoldTerms eval_sixfold_terms(long n);
Rat sum_31(long n);
Rat sum_32(long n);
Rat sum_29(long n);
Rat closed_28(long n);
Rat closed_33(long n);
Rat closed_34(long n);
Rat closed_35(long n);
Rat closed_72(long n);
Rat lmm3_lhs(long m, long a, long b);
Rat lmm3_rhs(long m, long a, long b);

Int set_partitions_count(long n, long k);
Int dominated_path_count(long X, long Y);
Int lyndon_count(long q, long n);

// Pieces of the three-simplex identity; the full left side equals 1.
struct TwoFParts {
  Rat S, T, R;
};
TwoFParts eval_2F_parts(const std::array<long, 3>& s, const std::array<Rat, 3>& a);
Rat eval_2F_lhs(const std::array<long, 3>& s, const std::array<Rat, 3>& a);
// (s1+s2+s3+2)!/(s1!s2!s3!) * double integral, computed by exact antidifferentiation
Rat eval_2F_R(const std::array<long, 3>& s, const std::array<Rat, 3>& a);

// sum over k of z_k^{s_k+1} * sum_{j_i<=s_i} multinomial(alpha; s_k, j...) prod z_i^{j_i}
Rat eval_Ss_alpha(const std::vector<Rat>& z, const std::vector<long>& s, const Rat& alpha);
// coefficient of t^s in (1 - sum z_i t_i)^{-alpha} prod (1 - t_i)^{-1}, by direct summation
Rat gf_coeff_direct(const std::vector<Rat>& z, const std::vector<long>& s, const Rat& alpha);

// sum_j (-1)^j C(d + sum(alpha+gamma), j) sum_{|beta|=s-j} prod C(beta+gamma, beta) (2 beta + gamma + 1)^alpha
Rat eval_KK1_lhs(long s, const std::vector<long>& alpha, const std::vector<Rat>& gamma, long d);
// same, each factor divided by alpha_i!
Rat eval_KK2_lhs(long s, const std::vector<long>& alpha, const std::vector<Rat>& gamma, long d);

}  // namespace egor
