#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "egor/numeric.hpp"

namespace egor {

// Sentinel window for series known exactly (polynomials in the variable).
inline constexpr long kExact = 1L << 40;
inline constexpr long kDefaultPrec = 32;

long win_add(long a, long b);

// Truncated Laurent series: coefficients at exponents >= trunc are unknown.
class Series {
 public:
  Series() = default;
  Series(std::string var, long trunc);

  const std::string& var() const { return var_; }
  long trunc() const { return trunc_; }
  bool exact() const { return trunc_ >= kExact; }
  const std::map<long, Rat>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  // least exponent with a nonzero coefficient; for zero series the trunc.
  long val() const;
  long order() const;  // throws on the zero series
  long max_exp() const;

  Rat coeff(long k) const;
  void set(long k, const Rat& v);
  Series truncated(long t) const;

 private:
  std::string var_;
  std::map<long, Rat> c_;
  long trunc_ = kExact;
};

Series make(const std::string& var, const std::vector<std::pair<long, Rat>>& terms, long trunc);
Series constant(const std::string& var, const Rat& c);
Series monomial(const std::string& var, long e, const Rat& c = 1);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Series& a, const Rat& c);
Series mul(const Series& a, const Series& b);
// prec: relative precision used when a is an exact non-monomial.
Series inv(const Series& a, long prec = kDefaultPrec);
Series pow_int(const Series& a, long e, long prec = kDefaultPrec);
// (1 + c*w)^a up to exponent trunc (exclusive); exact when a is a nonnegative integer.
Series binom_pow(const Rat& c, const Rat& a, const std::string& var, long trunc);
Rat res(const Series& a);
Series compose(const Series& outer, const Series& inner, long prec = kDefaultPrec);
Series reverse(const Series& h, long prec = kDefaultPrec);
Series derive(const Series& a);
Series exp_series(const Series& a, long prec = kDefaultPrec);
Series log_series(const Series& a, long prec = kDefaultPrec);
Series geom_sum_finite(const Series& q, long N, long prec = kDefaultPrec);

// equality on the intersection of windows
bool equal_on_window(const Series& a, const Series& b);

}  // namespace egor
