#pragma once
// Randomised checks of the coefficient-extraction rules, shared by the unit tests and the acceptance run.
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "egor/mseries.hpp"
#include "egor/series.hpp"

namespace egor::props {

struct Stats {
  long instances = 0;
  long checks = 0;
  std::vector<std::string> failures;
};

class Gen {
 public:
  explicit Gen(unsigned long seed) : rng_(seed) {}
  long uni(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rat r(bool nonzero = false) {
    while (true) {
      Rat x = rat(uni(-5, 5), uni(1, 4));
      if (!nonzero || x != 0) return x;
    }
  }
  // v: least exponent (leading coefficient nonzero), len terms, window trunc
  Series series(long v, long len, long trunc, const std::string& var = "w") {
    Series s(var, trunc);
    s.set(v, r(true));
    for (long k = v + 1; k < v + len && k < trunc; ++k) s.set(k, r());
    return s;
  }
  Series poly(long deg, const std::string& var = "w") {
    Series s(var, kExact);
    for (long k = 0; k <= deg; ++k) s.set(k, r());
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline void expect(Stats& st, bool ok, const std::string& what, long inst) {
  ++st.checks;
  if (!ok) st.failures.push_back("instance " + std::to_string(inst) + ": " + what);
}

// a and b agree on their common window, and that window reaches `need`
inline bool agree(const Series& a, const Series& b, long need) {
  return std::min(a.trunc(), b.trunc()) >= need && equal_on_window(a, b);
}

inline void run_instance(Stats& st, Gen& g, long inst) {
  ++st.instances;
  // field axiom
  {
    Series a = g.series(g.uni(-2, 1), g.uni(1, 4), 8);
    Series p = mul(a, inv(a));
    expect(st, agree(p, constant("w", 1), 5), "a * inv(a) = 1", inst);
  }
  // Rule 2: linearity of res
  {
    Series A = g.series(g.uni(-3, 0), g.uni(1, 5), 6), B = g.series(g.uni(-3, 0), g.uni(1, 5), 6);
    Rat x = g.r(), y = g.r();
    expect(st, res(add(scale(A, x), scale(B, y))) == x * res(A) + y * res(B), "res linearity", inst);
  }
  // Rule 3: the coefficients of A are residues of A z^{-k-1}
  {
    Series A = g.series(0, g.uni(1, 6), 7);
    Series rebuilt("w", 7);
    for (long k = 0; k < 7; ++k) rebuilt.set(k, res(mul(A, monomial("w", -k - 1))));
    expect(st, agree(rebuilt, A, 7), "coefficients as residues", inst);
  }
  // Rules 4/5: with h = w/f, res_w A f^k w^{-k-1} = [z^k] (A / (f h'))(hbar(z))
  {
    const long T = 7;
    Series f = g.series(0, g.uni(1, 4), T);
    Series A = g.poly(g.uni(0, 3));
    Series h = mul(monomial("w", 1), inv(f));
    Series hbar = reverse(h);
    Series G = mul(A, inv(mul(f, derive(h))));
    Series rhs = compose(G, hbar);
    for (long k = 0; k < T - 2; ++k) {
      Rat lhs = res(mul(mul(A, pow_int(f, k)), monomial("w", -k - 1)));
      expect(st, k < rhs.trunc() && lhs == rhs.coeff(k), "Lagrange rule at k=" + std::to_string(k), inst);
    }
  }
  // Rule 6: k res(A w^{-k-1}) = res(A' w^{-k})
  {
    Series A = g.series(g.uni(-2, 0), g.uni(1, 6), 8);
    for (long k = 0; k < 6; ++k)
      expect(st, Rat(k) * res(mul(A, monomial("w", -k - 1))) == res(mul(derive(A), monomial("w", -k))),
             "derivative rule", inst);
  }
  // exp and log
  {
    Series f = g.series(1, g.uni(1, 5), 8);
    Series e = exp_series(f);
    expect(st, agree(derive(e), mul(derive(f), e), 6), "d exp f = f' exp f", inst);
    expect(st, agree(log_series(e), f, 7), "log exp f = f", inst);
  }
  // reversion
  {
    Series h = g.series(1, g.uni(1, 5), 8);
    expect(st, agree(compose(h, reverse(h)), monomial("w", 1), 7), "h(hbar) = z", inst);
  }
  // iterated residues do not depend on the order of extraction
  {
    MSeries m({"x", "y"}, {4, 4});
    for (long i = -3; i < 4; ++i)
      for (long j = -3; j < 4; ++j)
        if (g.uni(0, 2) == 0) m.set({i, j}, g.r());
    Rat xy = mv_res(m, {"x", "y"}).as_scalar();
    Rat yx = mv_res(m, {"y", "x"}).as_scalar();
    expect(st, xy == yx && xy == m.coeff({-1, -1}), "res order independence", inst);
  }
  // multivariate inverse round trip
  {
    MSeries u = MSeries::scalar(g.r(true));
    u = mv_add(u, MSeries::variable("x", 1, g.r()));
    u = mv_add(u, MSeries::variable("y", g.uni(1, 2), g.r()));
    u = mv_add(u, mv_mul(MSeries::variable("x", 1, g.r()), MSeries::variable("y")));
    Caps caps{{"x", 5}, {"y", 5}};
    MSeries p = mv_mul(u, mv_inv(u, caps));
    bool ok = true;
    for (long i = 0; i < 5; ++i)
      for (long j = 0; j < 5; ++j) ok = ok && p.coeff({i, j}) == (i == 0 && j == 0 ? 1 : 0);
    expect(st, ok, "mv_inv round trip", inst);
  }
}

inline Stats run(unsigned long seed, long instances) {
  Stats st;
  Gen g(seed);
  for (long i = 0; i < instances; ++i) {
    try {
      run_instance(st, g, i);
    } catch (const std::exception& ex) {
      st.failures.push_back("instance " + std::to_string(i) + " threw: " + ex.what());
    }
  }
  return st;
}

}  // namespace egor::props
