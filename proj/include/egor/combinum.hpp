#pragma once
#include "egor/numeric.hpp"

namespace egor {

// Each value is produced by a residue computation and checked against
// the closed form; a mismatch throws std::logic_error.
struct CombinatorialValue {
  Rat value;
  Rat via_closed_form;
  Rat via_residue;
};

Rat binom_via_res(long n, long k);
Rat negbinom_via_res(long n, long k);
// S2(n,k) = (n!/k!) res_w (e^w - 1)^k w^{-n-1}
Int stirling2(long n, long k);
Int stirling2_recurrence(long n, long k);
int kronecker(long n, long k);
Int ballot_phi(long X, long Y);
Int omega_dd(long m, long q);
Int comp_product_sum(long m, long q);

CombinatorialValue checked_binom(long n, long k);

}  // namespace egor
