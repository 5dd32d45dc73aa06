#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace egor {

using Int = mpz_class;
using Rat = mpq_class;

// Build a canonical rational p/q.
Rat rat(const Int& p, const Int& q = 1);
Rat rat(long p, long q = 1);
// Parse "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rat parse_rat(const std::string& text);
// Always "p/q", q >= 1.
std::string rat_str(const Rat& r);

Int floor_rat(const Rat& r);
bool is_integer(const Rat& r);

Int factorial(long n);

// C(a,b): 0 if b < 0 or b > a >= 0; falling factorial for a < 0.
Int binom_int(long a, long b);
// a(a-1)...(a-b+1)/b!
Rat binom_general(const Rat& a, long b);
// C(p,q) when p and q are nonnegative integers, otherwise 0.
Int binom_primed(const Rat& p, long q);
// (alpha+1)(alpha+2)...(alpha+sum)/prod(parts!)
Rat multinomial_general(const Rat& alpha, const std::vector<long>& parts);

int mobius(long n);
Int necklace_rank(long q, long n);

using ParamBinding = std::map<std::string, Rat>;

}  // namespace egor
