#include "egor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "egor/mseries.hpp"

namespace egor {

namespace {

Rat C(long a, long b) { return Rat(binom_int(a, b)); }
Rat half(const Rat& x) { return x / 2; }
Rat pow2(long e) { return e >= 0 ? Rat(Int(1) << e) : rat(1, 1) / Rat(Int(1) << -e); }

Rat rpow(const Rat& x, long e) {
  if (e < 0) return 1 / rpow(x, -e);
  Rat r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

void compositions(long m, long q, Composition& cur, std::vector<Composition>& out) {
  if (q == 0) {
    if (m == 0) out.push_back(cur);
    return;
  }
  for (long p = 1; p <= m - (q - 1); ++p) {
    cur.push_back(p);
    compositions(m - p, q - 1, cur, out);
    cur.pop_back();
  }
}

Rat prod_plus_one(const Composition& c) {
  Rat p = 1;
  for (long x : c) p *= x + 1;
  return p;
}

}  // namespace

std::vector<Composition> enum_compositions(long m, long q, Parity filter) {
  if (m < 0 || q < 1) throw std::domain_error("enum_compositions needs m >= 0, q >= 1");
  std::vector<Composition> all, out;
  Composition cur;
  compositions(m, q, cur, all);
  for (auto& c : all) {
    bool even = std::all_of(c.begin(), c.end(), [](long x) { return x % 2 == 0; });
    if (filter == Parity::all || (filter == Parity::all_even && even) || (filter == Parity::has_odd && !even))
      out.push_back(std::move(c));
  }
  return out;
}

Rat eval_levs_sum(long n, long s, LevsVariant variant) {
  if (n < 1 || s < 1) throw std::domain_error("levs sums need n, s >= 1");
  Rat N = 0;
  for (long m = 1; m <= n; ++m) {
    for (long q = 1; q <= std::min(m, s); ++q) {
      Rat primed = Rat(binom_primed(Rat(-1) + rat(m, 2), q - 1));
      if (variant == LevsVariant::levs2) {
        Rat inner = 0;
        for (const auto& c : enum_compositions(m, q)) inner += Rat(floor_rat(half(prod_plus_one(c))));
        N += C(s, q) * (primed + inner);
      } else {
        N += C(s, q) * pow2(q - 1) * (primed + C(m - 1, q - 1));
      }
    }
  }
  return N;
}

Rat levs_S1(long n, long s) {
  Rat r = 0;
  for (long m = 1; m <= n; ++m)
    for (long q = 1; q <= std::min(m, s); ++q) r += C(s, q) * Rat(binom_primed(Rat(-1) + rat(m, 2), q - 1));
  return r;
}

Rat levs_S4(long n, long s) {
  Rat r = 0;
  for (long m = 1; m <= n; ++m)
    for (long q = 1; q <= std::min(m, s); ++q) {
      Rat inner = 0;
      for (const auto& c : enum_compositions(m, q)) inner += prod_plus_one(c);
      r += C(s, q) * inner;
    }
  return half(r);
}

Rat levs_S5(long n, long s) {
  Rat r = 0;
  for (long m = 1; m <= n; ++m)
    for (long q = 1; q <= std::min(m, s); ++q)
      r += C(s, q) * Rat(static_cast<long>(enum_compositions(m, q, Parity::all_even).size()));
  return -half(r);
}

Rat levs_S6(long n, long s) {
  Rat r = 0;
  for (long m = 1; m <= n; ++m)
    for (long q = 1; q <= std::min(m, s); ++q) r += C(s, q) * pow2(q - 1) * C(m - 1, q - 1);
  return r;
}

Rat levs_S7(long n, long s) {
  Rat r = 0;
  for (long m = 1; m <= n; ++m)
    for (long q = 1; q <= std::min(m, s); ++q)
      r += C(s, q) * pow2(q - 1) * Rat(binom_primed(Rat(-1) + rat(m, 2), q - 1));
  return r;
}

Rat corollary_lhs(long n, long s) {
  Rat r = 0;
  for (long k = 1; k <= n / 2; ++k)
    for (long q = 1; q <= std::min(2 * k, s); ++q) r += C(s, q) * pow2(q - 1) * C(k - 1, q - 1);
  return r + levs_S6(n, s);
}

Rat levs_T(long n, long p) { return rat(-1, 2) + half(C(n + p, p)); }

Rat levs_S(long n, long s) {
  Rat r = rat(-1, 2);
  for (long q = 0; q <= s; ++q) r += pow2(q - 1) * C(s, q) * C(n, q);
  return r;
}

namespace {

// visit all pairs (I, J) of equal-size nonempty increasing index sequences in [1..n]
void for_each_pair(long n, const std::function<void(const std::vector<long>&, const std::vector<long>&)>& f) {
  std::vector<std::vector<std::vector<long>>> by_size(n + 1);
  for (long mask = 1; mask < (1L << n); ++mask) {
    std::vector<long> v;
    for (long b = 0; b < n; ++b)
      if (mask >> b & 1) v.push_back(b + 1);
    by_size[v.size()].push_back(std::move(v));
  }
  for (long r = 1; r <= n; ++r)
    for (const auto& I : by_size[r])
      for (const auto& J : by_size[r]) f(I, J);
}

bool dominates(const std::vector<long>& I, const std::vector<long>& J) {
  for (size_t t = 0; t < I.size(); ++t)
    if (I[t] <= J[t]) return false;
  return true;
}

}  // namespace

Int enum_staircase_pairs(long n, bool strict) {
  if (n < 1 || n > 16) throw std::domain_error("enum_staircase_pairs needs 1 <= n <= 16");
  Int total = 0;
  for_each_pair(n, [&](const std::vector<long>& I, const std::vector<long>& J) {
    if (strict && !dominates(I, J)) return;
    long i = I.front(), j = J.back();
    total += binom_int(i - 1 + n - j, i - 1);
  });
  return total;
}

Int staircase_strict_count(long n, long i, long j) {
  Int c = 0;
  for_each_pair(n, [&](const std::vector<long>& I, const std::vector<long>& J) {
    if (I.front() == i && J.back() == j && dominates(I, J)) c += 1;
  });
  return c;
}

Int eval_Lbar_formula(long n, long i, long j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::domain_error("eval_Lbar_formula needs 1 <= i, j <= n");
  if (i - 1 >= j) return binom_int(n - i + j - 1, j - 1);
  Int tot = 0;
  for (long r = 1; r <= n; ++r)
    for (long k1 = 1; k1 <= r - 1; ++k1)
      for (long k2 = 0; k2 <= r - 1; ++k2)
        for (long s = std::max(r - k1 - 1, r - k2 - 1); s <= 2 * r - k1 - k2 - 2; ++s) {
          long X = s - r + k2 + 1, Y = s - r + k1 + 1;
          if (X < 0 || Y < 0) continue;
          // paths counted by reflection about the shifted diagonal
          Int paths = binom_int(X + Y, Y) - binom_int(X + Y, Y - k1);
          tot += binom_int(i - 1, k1) * binom_int(j - i, s) * binom_int(n - j, k2) *
                 binom_int(s, 2 * r - s - k1 - k2 - 2) * paths;
        }
  return tot;
}

Rat a73_first_form(long n) {
  return pow2(2 * n - 1) + Rat(n - 1) * C(2 * n - 2, n - 1) - rat(4, n) * C(2 * n, n - 2) - C(2 * n, n);
}

Rat a73_second_form(long n) {
  if (n < 2) throw std::domain_error("second form needs n >= 2");
  Rat poly = Rat(n * n * n * n - 2 * n * n * n - 27 * n * n + 20 * n - 4);
  return pow2(2 * n - 1) +
         Rat(2 * factorial(2 * n - 3)) / Rat(factorial(n - 2) * factorial(n + 2)) * poly;
}

SixfoldTerms eval_sixfold_terms(long n) {
  if (n < 3) throw std::domain_error("sixfold terms need n >= 3");
  SixfoldTerms t{0, 0, 0};
  for (long i = 2; i <= n; ++i)
    for (long j = 1; j <= i - 1; ++j) t.T1 += C(n - i + j - 1, j - 1) * C(i - 1 + n - j, i - 1);
  for (long i = 2; i <= n; ++i)
    for (long j = i; j <= n - 1; ++j)
      t.T2 += C(i - 1 + n - j, i - 1) * (C(n - i + j, j) - C(n - i + j, j + 1));
  for (long i = 2; i <= n; ++i)
    for (long j = i; j <= n - 1; ++j) {
      Rat w = C(i - 1 + n - j, i - 1);
      for (long s = 0; s <= j - i - 3; ++s) t.T3 -= w * C(i - 1 + n - j, s + i) * C(2 * j - 2 * i, j - i - s - 3);
      // upper limit j-i+1: the printed j-i-1 drops two terms per (i,j)
      for (long s = 0; s <= j - i + 1; ++s) t.T3 += w * C(i - 1 + n - j, s + i) * C(2 * j - 2 * i, j - i - s + 1);
    }
  return t;
}

Rat sum_31(long n) {
  Rat r = 0;
  for (long i = 2; i <= n; ++i) r += C(2 * n - i, n + 1) - C(2 * n - i, n);
  return r;
}

Rat sum_32(long n) {
  Rat r = 0;
  for (long i = 2; i <= n; ++i)
    for (long j = i; j <= n; ++j) r += C(i - 1 + n - j, n - j) * (C(n - i + j, j) - C(n - i + j, j + 1));
  return r;
}

Rat sum_29(long n) {
  Rat r = 0;
  for (long i = 2; i <= n; ++i)
    for (long j = i; j <= n - 1; ++j) r += C(i - 1 + n - j, n - j) * (C(n - i + j, j) - C(n - i + j, j + 1));
  return r;
}

Rat closed_28(long n) { return Rat(n - 1) * C(2 * n - 2, n - 1); }
Rat closed_33(long n) { return C(2 * n - 1, n + 2) - C(2 * n - 1, n + 1); }
Rat closed_34(long n) { return Rat(-(n - 1)) - C(2 * n, n) + 2 * C(2 * n, n + 1); }
Rat closed_35(long n) { return closed_33(n) + closed_34(n); }
Rat closed_72(long n) {
  return pow2(2 * n - 1) + Rat(n - 1) - rat(2, n) * C(2 * n, n - 2) - C(2 * n, n + 1) - C(2 * n + 1, n) + C(2 * n, n);
}

Rat lmm3_lhs(long m, long a, long b) {
  Rat r = 0;
  for (long s = a; s <= a + b; ++s) r += C(m, s) * C(s, a + b - s) * rat(1, s - b + 1) * C(2 * s - a - b, s - a);
  return r;
}

Rat lmm3_rhs(long m, long a, long b) { return rat(1, m + 1) * C(m + 1, a + 1) * C(m + 1, b); }

Int set_partitions_count(long n, long k) {
  if (k < 0 || n < 0 || n > 10) throw std::domain_error("set_partitions_count needs 0 <= n <= 10, k >= 0");
  if (k > n) return 0;
  // restricted growth strings
  Int count = 0;
  std::vector<long> a(n, 0);
  std::function<void(long, long)> go = [&](long pos, long blocks) {
    if (pos == n) {
      if (blocks == k) count += 1;
      return;
    }
    for (long b = 0; b <= blocks && b < k; ++b) go(pos + 1, std::max(blocks, b + 1));
  };
  if (n == 0) return k == 0 ? 1 : 0;
  go(0, 0);
  return count;
}

Int dominated_path_count(long X, long Y) {
  if (X < 0 || Y < 0) throw std::domain_error("dominated_path_count needs X, Y >= 0");
  std::vector<std::vector<Int>> d(X + 1, std::vector<Int>(Y + 1, 0));
  for (long x = 0; x <= X; ++x)
    for (long y = 0; y <= Y; ++y) {
      if (y > x) continue;
      if (x == 0 && y == 0) {
        d[0][0] = 1;
        continue;
      }
      if (x > 0) d[x][y] += d[x - 1][y];
      if (y > 0) d[x][y] += d[x][y - 1];
    }
  return d[X][Y];
}

Int lyndon_count(long q, long n) {
  if (q < 1 || n < 1) throw std::domain_error("lyndon_count needs q, n >= 1");
  long total = 1;
  for (long i = 0; i < n; ++i) total *= q;
  Int c = 0;
  std::vector<long> w(n);
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (long i = n - 1; i >= 0; --i) {
      w[i] = x % q;
      x /= q;
    }
    bool lyndon = true;
    for (long r = 1; r < n && lyndon; ++r) {
      std::vector<long> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      if (!(w < rot)) lyndon = false;
    }
    if (lyndon) c += 1;
  }
  return c;
}

namespace {

void check_2F_domain(const std::array<long, 3>& s, const std::array<Rat, 3>& a) {
  for (long x : s)
    if (x < 0) throw std::domain_error("s_i must be >= 0");
  for (const auto& x : a)
    if (x <= 0 || x >= 1) throw std::domain_error("alpha_i must lie in (0,1)");
  if (a[0] + a[1] + a[2] > 1) throw std::domain_error("alpha_1 + alpha_2 + alpha_3 must be <= 1");
}

// (1-b2-b3)^{s1+1} sum_{k<=s2, l<=s3} (s1+k+l)!/(s1! k! l!) b2^k b3^l
Rat two_f_S(long s1, long s2, long s3, const Rat& b2, const Rat& b3) {
  Rat sum = 0;
  for (long k = 0; k <= s2; ++k)
    for (long l = 0; l <= s3; ++l)
      sum += Rat(factorial(s1 + k + l)) / Rat(factorial(s1) * factorial(k) * factorial(l)) * rpow(b2, k) * rpow(b3, l);
  return rpow(1 - b2 - b3, s1 + 1) * sum;
}

// (1-c)^{p+q+2} (p+q+1)!/(p! q!) sum_{m<=q} (-1)^m C(q,m)/(p+m+1) ((1 - e/(1-c))^{p+m+1} - (f/(1-c))^{p+m+1})
//   * sum_{k<=r} C(p+q+k+1, k) c^k
Rat two_f_T(long p, long q, long r, const Rat& c, const Rat& e, const Rat& f) {
  Rat inner = 0;
  for (long m = 0; m <= q; ++m)
    inner += Rat(m % 2 ? -1 : 1) * C(q, m) / Rat(p + m + 1) *
             (rpow(1 - e / (1 - c), p + m + 1) - rpow(f / (1 - c), p + m + 1));
  Rat tail = 0;
  for (long k = 0; k <= r; ++k) tail += C(p + q + k + 1, k) * rpow(c, k);
  return rpow(1 - c, p + q + 2) * Rat(factorial(p + q + 1)) / Rat(factorial(p) * factorial(q)) * inner * tail;
}

MPoly antiderivative(const MPoly& p, const std::string& v) {
  int i = p.index_of(v);
  std::map<Exps, Rat> t;
  std::vector<std::string> vars = p.vars();
  if (i < 0) {
    vars.push_back(v);
    for (const auto& [e, c] : p.terms()) {
      Exps ne = e;
      ne.push_back(1);
      t[ne] = c;
    }
    return mpoly(vars, t);
  }
  for (const auto& [e, c] : p.terms()) {
    Exps ne = e;
    ne[i] += 1;
    t[ne] = c / ne[i];
  }
  return mpoly(vars, t);
}

}  // namespace

Rat eval_2F_R(const std::array<long, 3>& s, const std::array<Rat, 3>& a) {
  check_2F_domain(s, a);
  MPoly x = MSeries::variable("x"), y = MSeries::variable("y");
  MPoly one = MSeries::scalar(1);
  MPoly integrand = mv_mul(mv_mul(mv_pow_int(x, s[0]), mv_pow_int(y, s[1])),
                           mv_pow_int(mv_sub(mv_sub(one, x), y), s[2]));
  MPoly Fy = antiderivative(integrand, "y");
  MPoly upper_y = mv_sub(MSeries::scalar(1 - a[2]), x);
  MPoly inner = mv_sub(mv_subst(Fy, "y", upper_y), mv_subst(Fy, "y", a[1]));
  MPoly Fx = antiderivative(inner, "x");
  Rat val = mv_subst(Fx, "x", 1 - a[1] - a[2]).as_scalar() - mv_subst(Fx, "x", a[0]).as_scalar();
  return Rat(factorial(s[0] + s[1] + s[2] + 2)) / Rat(factorial(s[0]) * factorial(s[1]) * factorial(s[2])) * val;
}

TwoFParts eval_2F_parts(const std::array<long, 3>& s, const std::array<Rat, 3>& a) {
  check_2F_domain(s, a);
  auto [s1, s2, s3] = s;
  auto [a1, a2, a3] = a;
  TwoFParts p;
  p.S = two_f_S(s1, s2, s3, a2, a3) + two_f_S(s2, s1, s3, a1, a3) + two_f_S(s3, s1, s2, a1, a2);
  p.T = two_f_T(s1, s2, s3, a3, a2, a1) + two_f_T(s2, s3, s1, a1, a3, a2) + two_f_T(s1, s3, s2, a2, a3, a1);
  p.R = eval_2F_R(s, a);
  return p;
}

Rat eval_2F_lhs(const std::array<long, 3>& s, const std::array<Rat, 3>& a) {
  auto p = eval_2F_parts(s, a);
  return p.S - p.T + p.R;
}

Rat eval_Ss_alpha(const std::vector<Rat>& z, const std::vector<long>& s, const Rat& alpha) {
  if (z.size() != s.size() || z.empty()) throw std::invalid_argument("z and s must have the same nonzero length");
  for (long x : s)
    if (x < 0) return 0;  // coefficient of a negative power
  size_t n = z.size();
  Rat total = 0;
  for (size_t k = 0; k < n; ++k) {
    std::vector<size_t> others;
    for (size_t i = 0; i < n; ++i)
      if (i != k) others.push_back(i);
    std::vector<long> j(others.size(), 0);
    Rat inner = 0;
    while (true) {
      std::vector<long> parts{s[k]};
      Rat mono = 1;
      for (size_t t = 0; t < others.size(); ++t) {
        parts.push_back(j[t]);
        mono *= rpow(z[others[t]], j[t]);
      }
      inner += multinomial_general(alpha, parts) * mono;
      size_t t = 0;
      while (t < j.size() && ++j[t] > s[others[t]]) j[t++] = 0;
      if (t == j.size()) break;
    }
    total += rpow(z[k], s[k] + 1) * inner;
  }
  return total;
}

Rat gf_coeff_direct(const std::vector<Rat>& z, const std::vector<long>& s, const Rat& alpha) {
  for (long x : s)
    if (x < 0) return 0;
  std::vector<long> j(s.size(), 0);
  Rat total = 0;
  while (true) {
    long tot = 0;
    Rat mono = 1;
    Int den = 1;
    for (size_t i = 0; i < j.size(); ++i) {
      tot += j[i];
      mono *= rpow(z[i], j[i]);
      den *= factorial(j[i]);
    }
    Rat rising = 1;
    for (long i = 0; i < tot; ++i) rising *= alpha + i;
    total += rising / Rat(den) * mono;
    size_t t = 0;
    while (t < j.size() && ++j[t] > s[t]) j[t++] = 0;
    if (t == j.size()) break;
  }
  return total;
}

namespace {

Rat kk_lhs(long s, const std::vector<long>& alpha, const std::vector<Rat>& gamma, long d, bool divide) {
  if (d < 0 || static_cast<long>(alpha.size()) != d + 1 || static_cast<long>(gamma.size()) != d + 1)
    throw std::invalid_argument("alpha and gamma need d+1 entries");
  long sum = 0;
  for (long x : alpha) {
    if (x < 0) throw std::domain_error("alpha_i must be >= 0");
    sum += x;
  }
  if (sum != 2 * s + 1) throw std::domain_error("|alpha| must equal 2s+1");
  Rat top = Rat(d);
  for (long i = 0; i <= d; ++i) top += Rat(alpha[i]) + gamma[i];
  Rat total = 0;
  for (long j = 0; j <= s; ++j) {
    Rat Sj = 0;
    std::vector<long> beta(d + 1, 0);
    std::function<void(long, long)> go = [&](long i, long left) {
      if (i == d) {
        beta[i] = left;
        Rat p = 1;
        for (long t = 0; t <= d; ++t) {
          Rat f = binom_general(Rat(beta[t]) + gamma[t], beta[t]) * rpow(Rat(2 * beta[t]) + gamma[t] + 1, alpha[t]);
          if (divide) f /= Rat(factorial(alpha[t]));
          p *= f;
        }
        Sj += p;
        return;
      }
      for (long b = 0; b <= left; ++b) {
        beta[i] = b;
        go(i + 1, left - b);
      }
    };
    go(0, s - j);
    total += Rat(j % 2 ? -1 : 1) * binom_general(top, j) * Sj;
  }
  return total;
}

}  // namespace

Rat eval_KK1_lhs(long s, const std::vector<long>& alpha, const std::vector<Rat>& gamma, long d) {
  return kk_lhs(s, alpha, gamma, d, false);
}

Rat eval_KK2_lhs(long s, const std::vector<long>& alpha, const std::vector<Rat>& gamma, long d) {
  return kk_lhs(s, alpha, gamma, d, true);
}

}  // namespace egor
