#include "egor/identities.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include "json.hpp"
#include <sstream>
#include <stdexcept>
#include <thread>

#include "egor/combinum.hpp"
#include "egor/mseries.hpp"
#include "egor/oracle.hpp"
#include "egor/series.hpp"

namespace egor {

const char* const kEngineVersion = "egor-0.1.0";

namespace {

long L(const ParamBinding& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw std::invalid_argument("missing parameter " + name);
  if (!is_integer(it->second)) throw std::invalid_argument("parameter " + name + " must be an integer");
  return it->second.get_num().get_si();
}

Rat Q(const ParamBinding& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw std::invalid_argument("missing parameter " + name);
  return it->second;
}

Rat Qor(const ParamBinding& b, const std::string& name, const Rat& dflt) {
  auto it = b.find(name);
  return it == b.end() ? dflt : it->second;
}

bool has_int(const ParamBinding& b, const std::string& name) {
  auto it = b.find(name);
  return it != b.end() && is_integer(it->second);
}

Rat C(long a, long b) { return Rat(binom_int(a, b)); }

Rat res_series(const Series& s) { return res(s); }

// J_k = res_t (1-t)^{k-1} (1+t)^{2s-k+1} t^{-s-1}
Rat kk17_J(long s, long k) {
  Series a = mul(binom_pow(-1, k - 1, "t", s + 1), binom_pow(1, 2 * s - k + 1, "t", s + 1));
  return res_series(mul(a, monomial("t", -s - 1)));
}

Rat kk16_J(long s) {
  Series a = mul(binom_pow(-1, -1, "t", s + 1), binom_pow(1, 2 * s + 1, "t", s + 1));
  return res_series(mul(a, monomial("t", -s - 1)));
}

// three-variable slices used by several entries: z3 = total - z1 - z2
std::vector<Rat> z3(const ParamBinding& b, const Rat& total = 1) {
  Rat z1 = Q(b, "z1"), z2 = Q(b, "z2");
  return {z1, z2, total - z1 - z2};
}

std::vector<long> s3(const ParamBinding& b) { return {L(b, "s1"), L(b, "s2"), L(b, "s3")}; }

bool s_nonneg(const ParamBinding& b) { return L(b, "s1") >= 0 && L(b, "s2") >= 0 && L(b, "s3") >= 0; }

std::vector<long> kk_alpha(const ParamBinding& b) {
  long d = L(b, "d");
  std::vector<long> a;
  for (long i = 0; i <= d; ++i) a.push_back(has_int(b, "a" + std::to_string(i)) ? L(b, "a" + std::to_string(i)) : 0);
  return a;
}

std::vector<Rat> kk_gamma(const ParamBinding& b) {
  long d = L(b, "d");
  std::vector<Rat> g;
  for (long i = 0; i <= d; ++i) g.push_back(Qor(b, "g" + std::to_string(i), 0));
  return g;
}

bool kk_ok(const ParamBinding& b) {
  long d = L(b, "d"), s = L(b, "s");
  if (d < 0 || d > 3 || s < 0) return false;
  long sum = 0;
  for (long i = 0; i <= 3; ++i) {
    std::string n = "a" + std::to_string(i);
    long v = has_int(b, n) ? L(b, n) : 0;
    if (v < 0 || (i > d && v != 0)) return false;
    sum += v;
  }
  return sum == 2 * s + 1;
}

Rat kk_rhs(const ParamBinding& b, bool with_factorials) {
  auto a = kk_alpha(b);
  auto g = kk_gamma(b);
  Rat r = Rat(Int(1) << (2 * L(b, "s")));
  for (size_t i = 0; i < a.size(); ++i) {
    r *= binom_general(Rat(a[i]) + g[i], a[i]);
    if (with_factorials) r *= Rat(factorial(a[i]));
  }
  return r;
}

// coefficient of t^s in (1 - sum z_i t_i)^{-alpha} prod (1-t_i)^{-1}, through the series engine
Rat a6_series_coeff(const std::vector<Rat>& z, const std::vector<long>& s, const Rat& alpha) {
  Caps caps;
  MSeries kernel = MSeries::scalar(1);
  MSeries geo = MSeries::scalar(1);
  for (size_t i = 0; i < z.size(); ++i) {
    std::string v = "t" + std::to_string(i + 1);
    caps[v] = s[i] + 1;
    kernel = mv_sub(kernel, MSeries::variable(v, 1, z[i]));
  }
  for (size_t i = 0; i < z.size(); ++i) {
    std::string v = "t" + std::to_string(i + 1);
    geo = mv_mul(geo, mv_inv(mv_sub(MSeries::scalar(1), MSeries::variable(v)), caps));
  }
  MSeries f = mv_mul(mv_pow_general(kernel, -alpha, caps), geo);
  Exps e(f.vars().size(), 0);
  for (size_t i = 0; i < z.size(); ++i) {
    int k = f.index_of("t" + std::to_string(i + 1));
    if (k >= 0) e[k] = s[i];
  }
  return f.coeff(e);
}

std::vector<Identity> build_registry() {
  std::vector<Identity> r;
  auto add = [&](Identity id) { r.push_back(std::move(id)); };
  auto always = [](const ParamBinding&) { return true; };

  add({"th3.omega", "weighted count of all staircase pairs",
       {{"n", "1 <= n <= 12"}},
       [](const ParamBinding& b) -> Rat { return Rat(enum_staircase_pairs(L(b, "n"), false)); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n");
         return Rat(2 * n - 1) * C(2 * n - 2, n - 1);
       },
       [](const ParamBinding& b) { return L(b, "n") >= 1 && L(b, "n") <= 12; }, "(2n-1)\\binom{2n-2 }{n-1}"});

  add({"a73.omega_plus", "weighted count of strictly dominated staircase pairs against the closed form",
       {{"n", "2 <= n <= 12"}},
       [](const ParamBinding& b) -> Rat { return Rat(enum_staircase_pairs(L(b, "n"), true)); },
       [](const ParamBinding& b) -> Rat { return a73_first_form(L(b, "n")); },
       [](const ParamBinding& b) { return L(b, "n") >= 2 && L(b, "n") <= 12; },
       "2^{2n-1}+(n-1)\\binom{2n-2}{n-1}-\\frac{4}{n}\\binom{2n}{n-2}-\\binom{2n}{n}"});

  add({"a73.forms", "the two closed forms of the dominated count agree",
       {{"n", "n >= 2"}},
       [](const ParamBinding& b) -> Rat { return a73_first_form(L(b, "n")); },
       [](const ParamBinding& b) -> Rat { return a73_second_form(L(b, "n")); },
       [](const ParamBinding& b) { return L(b, "n") >= 2; }, "(n^{4}-2n^{3}-27n^{2}+20n-4)"});

  add({"th3.lbar", "count of strict sequence pairs with fixed corners, formula vs enumeration",
       {{"n", "1 <= n <= 10"}, {"i", "1 <= i <= n"}, {"j", "1 <= j <= n"}},
       [](const ParamBinding& b) -> Rat { return Rat(eval_Lbar_formula(L(b, "n"), L(b, "i"), L(b, "j"))); },
       [](const ParamBinding& b) -> Rat { return Rat(staircase_strict_count(L(b, "n"), L(b, "i"), L(b, "j"))); },
       [](const ParamBinding& b) {
         long n = L(b, "n"), i = L(b, "i"), j = L(b, "j");
         return n >= 1 && n <= 10 && i >= 1 && i <= n && j >= 1 && j <= n;
       },
       "\\max (r-k_{1}-1,r-k_{2}-1)\\leq s"});

  auto ns_ok = [](const ParamBinding& b) { return L(b, "n") >= 1 && L(b, "s") >= 1; };
  std::vector<ParamSpec> ns = {{"n", "n >= 1"}, {"s", "s >= 1"}};

  add({"th1.N", "class count with floor products against T(n,2s)+T([n/2],s)", ns,
       [](const ParamBinding& b) -> Rat { return eval_levs_sum(L(b, "n"), L(b, "s"), LevsVariant::levs2); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         return levs_T(n, 2 * s) + levs_T(n / 2, s);
       },
       ns_ok, "T(n,2s) + T(\\left\\lfloor \\frac{n}{2} \\right\\rfloor,s)"});

  add({"th2.N", "class count with powers of two against S(n,s)+S([n/2],s)", ns,
       [](const ParamBinding& b) -> Rat { return eval_levs_sum(L(b, "n"), L(b, "s"), LevsVariant::levs1); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         return levs_S(n, s) + levs_S(n / 2, s);
       },
       ns_ok, "N(n,s) = S(n,s) + S\\left({\\left\\lfloor \\frac{n}{2} \\right\\rfloor,\\,s}\\right)"});

  add({"lemma1.s1", "primed-binomial double sum", ns,
       [](const ParamBinding& b) -> Rat { return levs_S1(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         return Rat(-1) + C(s + n / 2, s);
       },
       ns_ok, "-1+\\binom{s+[\\frac{n}{2}]}{s}"});

  add({"lem5.s4", "half the composition product sum", ns,
       [](const ParamBinding& b) -> Rat { return levs_S4(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         return rat(-1, 2) + rat(1, 2) * C(2 * s + n, n);
       },
       ns_ok, "-\\frac{1}{2}+\\frac{1}{2}\\binom{2s+n}{n}"});

  add({"lemma4.s5", "all-even composition count sum, closed form ending the derivation", ns,
       [](const ParamBinding& b) -> Rat { return levs_S5(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         return rat(1, 2) - rat(1, 2) * C(s + n / 2, s);
       },
       ns_ok, "S_{5}(n,s)=\\frac{1}{2}-\\frac{1}{2}\\binom{s+[\\frac{n}{2}]}{s}"});

  Identity s5p{"lemma4.s5_printed", "all-even composition count sum, closed form as stated (misprint)", ns,
               [](const ParamBinding& b) -> Rat { return levs_S5(L(b, "n"), L(b, "s")); },
               [](const ParamBinding& b) -> Rat {
                 long n = L(b, "n"), s = L(b, "s");
                 return rat(1, 2) - rat(1, 2) * C(2 * s + n / 2, 2 * s);
               },
               ns_ok, "S_{5}(n,s)=\\frac{1}{2}-\\frac{1}{2}\\binom{2s+[n/2]}{2s}"};
  s5p.expected_failure = true;
  add(s5p);

  add({"lem6a.s6", "powers-of-two sum with ordinary binomials", ns,
       [](const ParamBinding& b) -> Rat { return levs_S6(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat { return levs_S(L(b, "n"), L(b, "s")); }, ns_ok, "S_{6}(n,s)=S(n,s)"});

  add({"lem6a.s7", "powers-of-two sum with primed binomials", ns,
       [](const ParamBinding& b) -> Rat { return levs_S7(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat { return levs_S(L(b, "n") / 2, L(b, "s")); }, ns_ok,
       "S_{7}(n,s)=S\\left([\\frac{n}{2}],s\\right)"});

  add({"lem6a.intrep", "powers-of-two sum against its residue representation", ns,
       [](const ParamBinding& b) -> Rat { return levs_S6(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         Series f = mul(mul(binom_pow(1, s, "z", n + 1), binom_pow(-1, -s - 1, "z", n + 1)), monomial("z", -n - 1));
         return rat(-1, 2) + rat(1, 2) * res(f);
       },
       ns_ok, "(1+z)^{s}(1-z)^{-s-1}z^{-n-1}"});

  add({"corollary", "combined powers-of-two identity", ns,
       [](const ParamBinding& b) -> Rat { return corollary_lhs(L(b, "n"), L(b, "s")); },
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n"), s = L(b, "s");
         Rat r = -1;
         for (long q = 0; q <= s; ++q)
           r += (q == 0 ? rat(1, 2) : Rat(Int(1) << (q - 1))) * C(s, q) * (C(n, q) + C(n / 2, q));
         return r;
       },
       ns_ok, "\\left( \\binom{n}{q}+\\binom{[\\frac{n}{2}]}{q}\\right)"});

  std::vector<ParamSpec> mq = {{"m", "m >= 1"}, {"q", "q >= 1"}};
  auto mq_ok = [](const ParamBinding& b) { return L(b, "m") >= 1 && L(b, "q") >= 1; };

  add({"lemma1a.B", "sum over compositions of prod(n_j+1) as a residue", mq,
       [](const ParamBinding& b) -> Rat {
         Rat t = 0;
         for (const auto& c : enum_compositions(L(b, "m"), L(b, "q"))) {
           Rat p = 1;
           for (long x : c) p *= x + 1;
           t += p;
         }
         return t;
       },
       [](const ParamBinding& b) -> Rat { return Rat(comp_product_sum(L(b, "m"), L(b, "q"))); }, mq_ok,
       "\\frac{(-1+(1-x)^{-2})^{q}}{\nx^{m+1}}"});

  add({"lemma1a.C", "number of all-even compositions as a residue", mq,
       [](const ParamBinding& b) -> Rat {
         return Rat(static_cast<long>(enum_compositions(L(b, "m"), L(b, "q"), Parity::all_even).size()));
       },
       [](const ParamBinding& b) -> Rat { return Rat(omega_dd(L(b, "m"), L(b, "q"))); }, mq_ok,
       "(1-x^{2})^{-q}/x^{m-2q+1}"});

  add({"lmma1a.ballot", "paths under the diagonal", {{"X", "X >= Y"}, {"Y", "Y >= 0"}},
       [](const ParamBinding& b) -> Rat { return Rat(dominated_path_count(L(b, "X"), L(b, "Y"))); },
       [](const ParamBinding& b) -> Rat { return Rat(ballot_phi(L(b, "X"), L(b, "Y"))); },
       [](const ParamBinding& b) { return L(b, "Y") >= 0 && L(b, "X") >= L(b, "Y"); },
       "\\frac{X-Y+1}{X+1}\\binom{X+Y}{Y}"});

  add({"lmm3.sum", "single sum with a reciprocal factor",
       {{"m", "m >= a+b"}, {"a", "a >= b"}, {"b", "b >= 1"}},
       [](const ParamBinding& b) -> Rat { return lmm3_lhs(L(b, "m"), L(b, "a"), L(b, "b")); },
       [](const ParamBinding& b) -> Rat { return lmm3_rhs(L(b, "m"), L(b, "a"), L(b, "b")); },
       [](const ParamBinding& b) {
         long m = L(b, "m"), a = L(b, "a"), bb = L(b, "b");
         return bb >= 1 && a >= bb && m >= a + bb;
       },
       "=\\frac{1}{m+1}\\binom{m+1}{a+1}\\binom{m+1}{b}"});

  std::vector<ParamSpec> n3 = {{"n", "n >= 3"}};
  auto n3_ok = [](const ParamBinding& b) { return L(b, "n") >= 3; };
  add({"sec3.t1", "first double sum of the dominated count", n3,
       [](const ParamBinding& b) -> Rat { return eval_sixfold_terms(L(b, "n")).T1; },
       [](const ParamBinding& b) -> Rat { return closed_28(L(b, "n")); }, n3_ok,
       "=(n-1){\\binom{2n-2}{n-1}}"});
  add({"sec3.s1", "single sum of binomial differences", n3,
       [](const ParamBinding& b) -> Rat { return sum_31(L(b, "n")); },
       [](const ParamBinding& b) -> Rat { return closed_33(L(b, "n")); }, n3_ok,
       "\\left( \\binom{2n-i}{n+1}-\\binom{2n-i}{n}\\right)"});
  add({"sec3.s2", "double sum of binomial differences up to j = n", n3,
       [](const ParamBinding& b) -> Rat { return sum_32(L(b, "n")); },
       [](const ParamBinding& b) -> Rat { return closed_34(L(b, "n")); }, n3_ok,
       "-(n-1) -\\binom{2n}{n}+2\\binom{2n}{n+1}"});
  add({"sec3.t2", "second double sum of the dominated count", n3,
       [](const ParamBinding& b) -> Rat { return sum_29(L(b, "n")); },
       [](const ParamBinding& b) -> Rat { return closed_35(L(b, "n")); }, n3_ok,
       "\\binom{i-1+n-j}{n-j}\\left(\\binom{n-i+j}{j}-\\binom{n-i+j}{j+1}\\right)"});
  add({"sec3.t3", "third (triple) sum of the dominated count, positive part up to s = j-i+1", n3,
       [](const ParamBinding& b) -> Rat { return eval_sixfold_terms(L(b, "n")).T3; },
       [](const ParamBinding& b) -> Rat { return closed_72(L(b, "n")); }, n3_ok,
       "\\binom{i-1+n-j}{s+i}\\binom{2j-2i}{j-i-s+1}"});
  add({"sec3.total", "the three sums add up to the first closed form", n3,
       [](const ParamBinding& b) -> Rat {
         auto t = eval_sixfold_terms(L(b, "n"));
         return t.T1 + t.T2 + t.T3;
       },
       [](const ParamBinding& b) -> Rat { return a73_first_form(L(b, "n")); }, n3_ok,
       "\\Omega^{+}(n)=T_{1}+T_{2}+T_{3}"});

  std::vector<ParamSpec> two_f = {{"s1", ">= 0"}, {"s2", ">= 0"}, {"s3", ">= 0"},
                                  {"a1", "0 < a1"}, {"a2", "0 < a2"}, {"a3", "0 < a3, a1+a2+a3 <= 1"}};
  add({"t1.2f", "three-simplex partition of unity", two_f,
       [](const ParamBinding& b) -> Rat {
         return eval_2F_lhs({L(b, "s1"), L(b, "s2"), L(b, "s3")}, {Q(b, "a1"), Q(b, "a2"), Q(b, "a3")});
       },
       [](const ParamBinding&) -> Rat { return Rat(1); },
       [](const ParamBinding& b) {
         Rat a1 = Q(b, "a1"), a2 = Q(b, "a2"), a3 = Q(b, "a3");
         return s_nonneg(b) && a1 > 0 && a2 > 0 && a3 > 0 && a1 < 1 && a2 < 1 && a3 < 1 && a1 + a2 + a3 <= 1;
       },
       "dx\\wedge dy\\equiv 1"});

  std::vector<ParamSpec> sz = {{"s1", ">= 0"}, {"s2", ">= 0"}, {"s3", ">= 0"}, {"z1", "rational"},
                               {"z2", "rational; z3 = 1 - z1 - z2"}};
  add({"t2.k2", "multinomial partition of unity in three variables", sz,
       [](const ParamBinding& b) -> Rat { return eval_Ss_alpha(z3(b), s3(b), 0); },
       [](const ParamBinding&) -> Rat { return Rat(1); }, s_nonneg,
       "z_{n}^{s_{n}+1}\\sum_{j_{1}=0}^{s_{1}}\\ldots \\sum_{j_{n-1}=0}^{s_{n-1}}"});

  add({"zeil.identity", "equal-bound specialisation with three probabilities",
       {{"n", "n >= 1"}, {"z1", "rational"}, {"z2", "rational; z3 = 1 - z1 - z2"}},
       [](const ParamBinding& b) -> Rat {
         long n = L(b, "n");
         return eval_Ss_alpha(z3(b), {n - 1, n - 1, n - 1}, 0);
       },
       [](const ParamBinding&) -> Rat { return Rat(1); }, [](const ParamBinding& b) { return L(b, "n") >= 1; },
       "\\ldots p_{k}^{\\alpha _{k}}=1"});

  std::vector<ParamSpec> sza = sz;
  sza.push_back({"alpha", "alpha >= 0"});
  add({"theo1.a6", "weighted multinomial sums are coefficients of the kernel expansion", sza,
       [](const ParamBinding& b) -> Rat { return eval_Ss_alpha(z3(b), s3(b), Q(b, "alpha")); },
       [](const ParamBinding& b) -> Rat { return a6_series_coeff(z3(b), s3(b), Q(b, "alpha")); },
       [](const ParamBinding& b) { return s_nonneg(b) && Q(b, "alpha") >= 0; },
       "(1-\\sum_{i}z_{i}t_{i})^{-\\alpha}\\prod\\limits_{i}(1-t_{i})^{-1}"});

  add({"le3.a7", "lowering the weight parameter by one", sza,
       [](const ParamBinding& b) -> Rat {
         auto z = z3(b);
         auto s = s3(b);
         Rat a1 = Q(b, "alpha") + 1;
         Rat v = eval_Ss_alpha(z, s, a1);
         for (size_t i = 0; i < 3; ++i) {
           auto t = s;
           t[i] -= 1;
           v -= z[i] * eval_Ss_alpha(z, t, a1);
         }
         return v;
       },
       [](const ParamBinding& b) -> Rat { return eval_Ss_alpha(z3(b), s3(b), Q(b, "alpha")); },
       [](const ParamBinding& b) {
         return s_nonneg(b) && Q(b, "alpha") >= 0;
       },
       "S_{s}(z;\\alpha +1)-z_{1}S_{s_{1}-1,s_{2},\\ldots ,s_{n}}(z;\\alpha+1)"});

  add({"le3.a8", "recursion for unit weight", sz,
       [](const ParamBinding& b) -> Rat { return eval_Ss_alpha(z3(b), s3(b), 1); },
       [](const ParamBinding& b) -> Rat {
         auto z = z3(b);
         auto s = s3(b);
         Rat v = 1;
         for (size_t i = 0; i < 3; ++i) {
           auto t = s;
           t[i] -= 1;
           v += z[i] * eval_Ss_alpha(z, t, 1);
         }
         return v;
       },
       s_nonneg, "S_{s}(z;1)=1+z_{1}S_{s_{1}-1,s_{2},\\ldots ,s_{n}}(z;1)"});

  std::vector<ParamSpec> szb = sza;
  szb.push_back({"beta", "beta not in {0,1}; the scaled vector beta*z sums to beta"});
  auto szb_ok = [](const ParamBinding& b) {
    Rat a = Q(b, "alpha"), be = Q(b, "beta");
    return s_nonneg(b) && a >= 0 && be != 0 && be != 1;
  };
  auto scaled = [](const ParamBinding& b) {
    auto z = z3(b);
    for (auto& x : z) x *= Q(b, "beta");
    return z;
  };
  add({"le4.a15", "weighted sums off the unit simplex split into two kernel coefficients", szb,
       [scaled](const ParamBinding& b) -> Rat { return eval_Ss_alpha(scaled(b), s3(b), Q(b, "alpha")); },
       [scaled](const ParamBinding& b) -> Rat {
         auto w = scaled(b);
         Rat a = Q(b, "alpha"), be = Q(b, "beta");
         return (be - 1) * gf_coeff_direct(w, s3(b), a + 1) + gf_coeff_direct(w, s3(b), a);
       },
       szb_ok, "S_{s}(z;\\alpha ,\\beta)=(\\beta -1)S_{s}(z;\\alpha +1,1)"});
  add({"le4.a16", "raising the weight parameter off the unit simplex", szb,
       [scaled](const ParamBinding& b) -> Rat { return gf_coeff_direct(scaled(b), s3(b), Q(b, "alpha") + 1); },
       [scaled](const ParamBinding& b) -> Rat {
         auto w = scaled(b);
         Rat a = Q(b, "alpha"), be = Q(b, "beta");
         return (eval_Ss_alpha(w, s3(b), a) - gf_coeff_direct(w, s3(b), a)) / (be - 1);
       },
       szb_ok, "\\frac{1}{\\beta -1}\\left(S_{s}(z;\\alpha)-S_{s}(\\beta z;\\alpha)\\right)"});

  std::vector<ParamSpec> kk = {{"s", "s >= 0"}, {"d", "0 <= d <= 3"}, {"a0", "alpha_0"}, {"a1", "alpha_1"},
                               {"a2", "alpha_2"}, {"a3", "alpha_3; |alpha| = 2s+1"}, {"g0", "gamma_0 (default 0)"},
                               {"g1", "gamma_1"}, {"g2", "gamma_2"}, {"g3", "gamma_3"}};
  add({"aprt1.kk2", "cubature sum with alpha_i! in the denominators", kk,
       [](const ParamBinding& b) -> Rat { return eval_KK2_lhs(L(b, "s"), kk_alpha(b), kk_gamma(b), L(b, "d")); },
       [](const ParamBinding& b) -> Rat { return kk_rhs(b, false); }, kk_ok,
       "\\!=2^{2s}\\prod_{i=0}^{d}\\binom{\\alpha_{i}+\\gamma_{i}}{\\alpha_{i}}"});
  add({"aprt1.kk1", "cubature sum without factorials against 2^{2s} alpha! binom", kk,
       [](const ParamBinding& b) -> Rat { return eval_KK1_lhs(L(b, "s"), kk_alpha(b), kk_gamma(b), L(b, "d")); },
       [](const ParamBinding& b) -> Rat { return kk_rhs(b, true); }, kk_ok,
       "2^{2s}\\mathbf{\\alpha}!\\binom{\\alpha +\\gamma}{\\alpha}"});

  add({"kk16.J", "residue equal to a power of four", {{"s", "s >= 0"}},
       [](const ParamBinding& b) -> Rat { return kk16_J(L(b, "s")); },
       [](const ParamBinding& b) -> Rat { return Rat(Int(1) << (2 * L(b, "s"))); },
       [](const ParamBinding& b) { return L(b, "s") >= 0; }, "(1-t)^{-1}(1+t)^{2s+1}t^{-s-1}=2^{2s}"});

  add({"kk17.even", "vanishing residues for even k", {{"s", "s >= 1"}, {"k", "even, 1 <= k <= 2s"}},
       [](const ParamBinding& b) -> Rat { return kk17_J(L(b, "s"), L(b, "k")); },
       [](const ParamBinding&) -> Rat { return Rat(0); },
       [](const ParamBinding& b) {
         long s = L(b, "s"), k = L(b, "k");
         return s >= 1 && k >= 1 && k <= 2 * s && k % 2 == 0;
       },
       "(1-t)^{k-1}(1+t)^{2s-k+1}t^{-s-1}=0"});

  Identity odd{"kk17.odd_counterexample", "the same residues for odd k do not vanish (misprint)",
               {{"s", "s >= 1"}, {"k", "odd, 1 <= k <= 2s"}},
               [](const ParamBinding& b) -> Rat { return kk17_J(L(b, "s"), L(b, "k")); },
               [](const ParamBinding&) -> Rat { return Rat(0); },
               [](const ParamBinding& b) {
                 long s = L(b, "s"), k = L(b, "k");
                 return s >= 1 && k >= 1 && k <= 2 * s && k % 2 == 1;
               },
               "=0,\\text{ }\\forall k=1,\\ldots ,2s"};
  odd.expected_failure = true;
  add(odd);

  add({"kk14.structure", "normalised derivative series is a polynomial in ((1-t)/(1+t))^2",
       {{"alpha", "alpha >= 0"}, {"gamma", "rational"}},
       [](const ParamBinding& b) -> Rat { return Rat(kk14_structure_residual(L(b, "alpha"), Qor(b, "gamma", 0), 20)); },
       [](const ParamBinding&) -> Rat { return Rat(0); }, [](const ParamBinding& b) { return L(b, "alpha") >= 0; },
       "(1+\\sum_{k=1}^{[\\alpha /2]}h_{k}(\\alpha,\\gamma) (1-t)^{2k}(1+t)^{-2k})"});

  add({"necklace", "rank formula against Lyndon word enumeration", {{"q", "q >= 1"}, {"n", "n >= 1"}},
       [](const ParamBinding& b) -> Rat { return Rat(necklace_rank(L(b, "q"), L(b, "n"))); },
       [](const ParamBinding& b) -> Rat { return Rat(lyndon_count(L(b, "q"), L(b, "n"))); },
       [](const ParamBinding& b) { return L(b, "q") >= 1 && L(b, "n") >= 1; },
       "M_{q}(n)=\\frac{1}{n}\\sum \\eta (d) q^{n/d}"});

  add({"m4.stirling", "residue route to set partitions", {{"n", "0 <= n <= 10"}, {"k", "0 <= k <= n"}},
       [](const ParamBinding& b) -> Rat { return Rat(stirling2(L(b, "n"), L(b, "k"))); },
       [](const ParamBinding& b) -> Rat { return Rat(set_partitions_count(L(b, "n"), L(b, "k"))); },
       [](const ParamBinding& b) {
         long n = L(b, "n"), k = L(b, "k");
         return n >= 0 && n <= 10 && k >= 0 && k <= n;
       },
       "(-1+\\exp w)^{n}w^{-k-1}"});

  add({"m1.binom", "binomial coefficient as a residue", {{"n", "n >= 0"}, {"k", "integer"}},
       [](const ParamBinding& b) -> Rat { return binom_via_res(L(b, "n"), L(b, "k")); },
       [](const ParamBinding& b) -> Rat { return C(L(b, "n"), L(b, "k")); },
       [](const ParamBinding& b) { return L(b, "n") >= 0; }, "(1+w)^{n}w^{-k-1}"});

  add({"m3.negbinom", "negative binomial coefficient as a residue", {{"n", "n >= 1"}, {"k", "k >= 0"}},
       [](const ParamBinding& b) -> Rat { return negbinom_via_res(L(b, "n"), L(b, "k")); },
       [](const ParamBinding& b) -> Rat { return C(L(b, "n") + L(b, "k") - 1, L(b, "k")); },
       [](const ParamBinding& b) { return L(b, "n") >= 1 && L(b, "k") >= 0; }, "(1-w)^{-n}w^{-k-1}"});

  add({"m5.kronecker", "Kronecker delta as a residue", {{"n", "integer"}, {"k", "integer"}},
       [](const ParamBinding& b) -> Rat { return Rat(kronecker(L(b, "n"), L(b, "k"))); },
       [](const ParamBinding& b) -> Rat { return Rat(L(b, "n") == L(b, "k") ? 1 : 0); }, always,
       "\\delta (n,k)=\\mbox{\\bf res}_{w}w^{-n+k-1}"});

  return r;
}

}  // namespace

const std::vector<Identity>& registry_list() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

const Identity* find_identity(const std::string& id) {
  for (const auto& e : registry_list())
    if (e.id == id) return &e;
  return nullptr;
}

VerificationReport verify_one(const std::string& id, const ParamBinding& binding) {
  const Identity* e = find_identity(id);
  if (!e) throw std::invalid_argument("unknown identity: " + id);
  if (!e->admissible(binding)) throw std::domain_error("binding outside the domain of " + id);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = id;
  r.binding = binding;
  r.lhs = e->lhs(binding);
  r.rhs = e->rhs(binding);
  r.equal = r.lhs == r.rhs;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Certificate verify_grid(const std::string& id, const std::vector<Range>& ranges, const ParamBinding& fixed,
                        int jobs) {
  const Identity* e = find_identity(id);
  if (!e) throw std::invalid_argument("unknown identity: " + id);
  Certificate cert;
  cert.identity = id;
  cert.swept = ranges;
  cert.fixed = fixed;
  cert.expected_failure = e->expected_failure;
  cert.engine = kEngineVersion;

  // canonical order: ranges sorted by parameter name, first name varies slowest
  std::vector<Range> rs = ranges;
  std::sort(rs.begin(), rs.end(), [](const Range& a, const Range& b) { return a.name < b.name; });
  cert.swept = rs;
  std::vector<ParamBinding> grid;
  bool empty = std::any_of(rs.begin(), rs.end(), [](const Range& r) { return r.hi < r.lo; });
  if (!empty) {
    std::vector<long> cur(rs.size());
    for (size_t i = 0; i < rs.size(); ++i) cur[i] = rs[i].lo;
    while (true) {
      ParamBinding b = fixed;
      for (size_t i = 0; i < rs.size(); ++i) b[rs[i].name] = cur[i];
      if (e->admissible(b)) grid.push_back(std::move(b));
      long i = static_cast<long>(rs.size()) - 1;
      while (i >= 0 && ++cur[i] > rs[i].hi) {
        cur[i] = rs[i].lo;
        --i;
      }
      if (i < 0) break;
    }
  }

  std::vector<VerificationReport> out(grid.size());
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(grid.size());
  auto worker = [&] {
    for (size_t k; (k = next++) < grid.size();) {
      try {
        out[k] = verify_one(id, grid[k]);
      } catch (const std::exception& ex) {
        errors[k] = ex.what();
      }
    }
  };
  int nj = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < nj; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (size_t k = 0; k < grid.size(); ++k)
    if (!errors[k].empty()) throw std::runtime_error("case " + std::to_string(k) + " of " + id + ": " + errors[k]);

  cert.cases = static_cast<long>(grid.size());
  for (auto& r : out)
    if (!r.equal) cert.failures.push_back(r);
  cert.pass = cert.failures.empty();
  cert.digest = compute_digest(cert);
  return cert;
}

bool expectation_met(const Certificate& c) { return c.expected_failure ? !c.failures.empty() : c.pass; }

namespace {

nlohmann::json binding_json(const ParamBinding& b) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : b) j[k] = rat_str(v);
  return j;
}

nlohmann::json cert_body(const Certificate& c) {
  nlohmann::json j;
  j["identity"] = c.identity;
  nlohmann::json swept = nlohmann::json::object();
  for (const auto& r : c.swept) swept[r.name] = std::to_string(r.lo) + ".." + std::to_string(r.hi);
  j["params_swept"] = swept;
  j["params_fixed"] = binding_json(c.fixed);
  j["cases"] = c.cases;
  nlohmann::json f = nlohmann::json::array();
  for (const auto& r : c.failures)
    f.push_back({{"binding", binding_json(r.binding)}, {"lhs", rat_str(r.lhs)}, {"rhs", rat_str(r.rhs)}});
  j["failures"] = f;
  j["pass"] = c.pass;
  j["expected_failure"] = c.expected_failure;
  j["engine"] = c.engine;
  return j;
}

}  // namespace

std::string compute_digest(const Certificate& c) {
  std::string bytes = cert_body(c).dump();
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  std::ostringstream os;
  for (unsigned char x : md) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(x);
  return "sha256:" + os.str();
}

std::string certificate_json(const Certificate& c) {
  nlohmann::json j = cert_body(c);
  j["digest"] = compute_digest(c);
  return j.dump();
}

std::string certificate_csv(const Certificate& c) {
  std::ostringstream os;
  os << "identity,cases,failures,pass,expected_failure,digest\n";
  os << c.identity << ',' << c.cases << ',' << c.failures.size() << ',' << (c.pass ? "true" : "false") << ','
     << (c.expected_failure ? "true" : "false") << ',' << compute_digest(c) << '\n';
  for (const auto& r : c.failures) {
    os << "failure";
    for (const auto& [k, v] : r.binding) os << ',' << k << '=' << rat_str(v);
    os << ",lhs=" << rat_str(r.lhs) << ",rhs=" << rat_str(r.rhs) << '\n';
  }
  return os.str();
}

std::string certificate_md(const Certificate& c) {
  std::ostringstream os;
  os << "| identity | cases | failures | pass | expected failure |\n|---|---|---|---|---|\n";
  os << "| " << c.identity << " | " << c.cases << " | " << c.failures.size() << " | " << (c.pass ? "yes" : "no")
     << " | " << (c.expected_failure ? "yes" : "no") << " |\n";
  if (!c.failures.empty()) {
    os << "\n| binding | lhs | rhs |\n|---|---|---|\n";
    for (const auto& r : c.failures) {
      os << "| ";
      bool first = true;
      for (const auto& [k, v] : r.binding) {
        os << (first ? "" : ", ") << k << '=' << rat_str(v);
        first = false;
      }
      os << " | " << rat_str(r.lhs) << " | " << rat_str(r.rhs) << " |\n";
    }
  }
  os << "\ndigest: " << compute_digest(c) << '\n';
  return os.str();
}

}  // namespace egor
