#include "egor/numeric.hpp"

#include <stdexcept>

namespace egor {

Rat rat(const Int& p, const Int& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat rat(long p, long q) { return rat(Int(p), Int(q)); }

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bad rational: " + text);
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad rational: " + text);
    for (size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad rational: " + text);
    return Int(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator: " + text);
  return rat(parse_int(text.substr(0, slash)), q);
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binom_int(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  }
  return binom_general(Rat(a), b).get_num();
}

Rat binom_general(const Rat& a, long b) {
  if (b < 0) throw std::domain_error("binom_general needs b >= 0");
  Rat num = 1;
  for (long i = 0; i < b; ++i) num *= a - i;
  return num / Rat(factorial(b));
}

Int binom_primed(const Rat& p, long q) {
  if (!is_integer(p) || p < 0 || q < 0) return 0;
  return binom_int(p.get_num().get_si(), q);
}

Rat multinomial_general(const Rat& alpha, const std::vector<long>& parts) {
  long total = 0;
  Int den = 1;
  for (long p : parts) {
    if (p < 0) throw std::domain_error("negative part");
    total += p;
    den *= factorial(p);
  }
  Rat num = 1;
  for (long i = 1; i <= total; ++i) num *= alpha + i;
  return num / Rat(den);
}

int mobius(long n) {
  if (n <= 0) throw std::domain_error("mobius needs n >= 1");
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Int necklace_rank(long q, long n) {
  if (q < 1 || n < 1) throw std::domain_error("necklace_rank needs q, n >= 1");
  Int sum = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n / d));
    sum += mobius(d) * p;
  }
  if (sum % n != 0) throw std::logic_error("necklace divisor sum not divisible by n");
  return sum / n;
}

}  // namespace egor
