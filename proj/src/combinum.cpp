#include "egor/combinum.hpp"

#include <stdexcept>

#include "egor/series.hpp"

namespace egor {

namespace {
const char* kW = "w";
}

Rat binom_via_res(long n, long k) {
  if (n < 0) throw std::domain_error("binom_via_res needs n >= 0");
  Series s = mul(binom_pow(1, n, kW, 0), monomial(kW, -k - 1));
  return res(s);
}

Rat negbinom_via_res(long n, long k) {
  if (n < 1 || k < 0) throw std::domain_error("negbinom_via_res needs n >= 1, k >= 0");
  Series s = mul(binom_pow(-1, -n, kW, k + 1), monomial(kW, -k - 1));
  return res(s);
}

Int stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling2 needs n, k >= 0");
  if (n == 0 && k == 0) return 1;
  Series e = sub(exp_series(monomial(kW, 1).truncated(n + 2), n + 2), constant(kW, 1));
  Series s = mul(pow_int(e, k), monomial(kW, -n - 1));
  Rat r = res(s) * Rat(factorial(n)) / Rat(factorial(k));
  if (!is_integer(r)) throw std::logic_error("non-integral Stirling number");
  return r.get_num();
}

Int stirling2_recurrence(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0) return 0;
  return k * stirling2_recurrence(n - 1, k) + stirling2_recurrence(n - 1, k - 1);
}

int kronecker(long n, long k) {
  Rat r = res(monomial(kW, -n + k - 1));
  return static_cast<int>(r.get_num().get_si());
}

Int ballot_phi(long X, long Y) {
  if (X < Y || Y < 0) throw std::domain_error("ballot_phi needs X >= Y >= 0");
  Rat v = rat(X - Y + 1, X + 1) * Rat(binom_int(X + Y, Y));
  return v.get_num();
}

Int omega_dd(long m, long q) {
  // res_x (1-x^2)^{-q} x^{-(m-2q+1)}
  long need = m - 2 * q + 1;
  if (need <= 0) return 0;
  Series k = compose(binom_pow(-1, -q, kW, need), monomial(kW, 2));
  Rat r = res(mul(k, monomial(kW, -need)));
  Int closed = (m % 2 == 0) ? binom_primed(Rat(m / 2 - 1), q - 1) : Int(0);
  if (r != Rat(closed)) throw std::logic_error("omega_dd residue disagrees with closed form");
  return closed;
}

Int comp_product_sum(long m, long q) {
  // res_x (-1 + (1-x)^{-2})^q x^{-m-1}
  Series f = sub(binom_pow(-1, -2, kW, m + 1), constant(kW, 1));
  Rat r = res(mul(pow_int(f, q), monomial(kW, -m - 1)));
  return r.get_num();
}

CombinatorialValue checked_binom(long n, long k) {
  Rat a = binom_via_res(n, k);
  Rat b = Rat(binom_int(n, k));
  if (a != b) throw std::logic_error("binomial routes disagree");
  return {a, b, a};
}

}  // namespace egor
