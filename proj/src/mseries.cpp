#include "egor/mseries.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace egor {

MSeries::MSeries(std::vector<std::string> vars, std::vector<long> trunc)
    : vars_(std::move(vars)), trunc_(std::move(trunc)) {
  if (vars_.size() != trunc_.size()) throw std::invalid_argument("vars/trunc arity mismatch");
  for (auto& t : trunc_) t = std::min(t, kExact);
}

MSeries MSeries::scalar(const Rat& c) {
  MSeries r({}, {});
  r.set({}, c);
  return r;
}

MSeries MSeries::variable(const std::string& v, long e, const Rat& c) {
  MSeries r({v}, {kExact});
  r.set({e}, c);
  return r;
}

MSeries MSeries::from_series(const Series& s) {
  MSeries r({s.var()}, {s.trunc()});
  for (const auto& [e, c] : s.terms()) r.set({e}, c);
  return r;
}

int MSeries::index_of(const std::string& v) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return static_cast<int>(i);
  return -1;
}

long MSeries::trunc_of(const std::string& v) const {
  int i = index_of(v);
  return i < 0 ? kExact : trunc_[i];
}

bool MSeries::exact() const {
  return std::all_of(trunc_.begin(), trunc_.end(), [](long t) { return t >= kExact; });
}

long MSeries::val(size_t i) const {
  if (terms_.empty()) return trunc_[i];
  long m = kExact;
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

long MSeries::max_exp(size_t i) const {
  long m = -kExact;
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

Rat MSeries::coeff(const Exps& e) const {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] >= trunc_[i])
      throw std::out_of_range("exponent " + std::to_string(e[i]) + " of " + vars_[i] + " outside window (trunc " +
                              std::to_string(trunc_[i]) + ")");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MSeries::constant_term() const { return coeff(Exps(vars_.size(), 0)); }

Rat MSeries::as_scalar() const {
  if (!vars_.empty()) {
    for (const auto& [e, c] : terms_)
      for (long x : e)
        if (x != 0) throw std::domain_error("series is not a scalar");
  }
  return constant_term();
}

Series MSeries::to_series() const {
  if (vars_.size() != 1) throw std::domain_error("to_series needs exactly one variable");
  Series s(vars_[0], trunc_[0]);
  for (const auto& [e, c] : terms_) s.set(e[0], c);
  return s;
}

void MSeries::set(const Exps& e, const Rat& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] >= trunc_[i]) throw std::out_of_range("exponent at or above trunc");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

static bool inside(const Exps& e, const std::vector<long>& t) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] >= t[i]) return false;
  return true;
}

MSeries MSeries::truncated(const std::vector<long>& t) const {
  std::vector<long> nt(trunc_);
  for (size_t i = 0; i < nt.size(); ++i) nt[i] = std::min(nt[i], t[i]);
  MSeries r(vars_, nt);
  for (const auto& [e, c] : terms_)
    if (inside(e, nt)) r.terms_[e] = c;
  return r;
}

MSeries MSeries::extend(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) throw std::invalid_argument("extend: variable set is not a superset");
    pos[i] = static_cast<int>(it - vars.begin());
  }
  std::vector<long> t(vars.size(), kExact);
  for (size_t i = 0; i < vars_.size(); ++i) t[pos[i]] = trunc_[i];
  MSeries r(vars, t);
  for (const auto& [e, c] : terms_) {
    Exps ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_[ne] = c;
  }
  return r;
}

MPoly mpoly(const std::vector<std::string>& vars, const std::map<Exps, Rat>& terms) {
  MSeries r(vars, std::vector<long>(vars.size(), kExact));
  for (const auto& [e, c] : terms) r.set(e, c);
  return r;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> r = a;
  for (const auto& v : b)
    if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  return r;
}

MSeries mv_add(const MSeries& a0, const MSeries& b0) {
  auto vars = merge_vars(a0.vars(), b0.vars());
  MSeries a = a0.extend(vars), b = b0.extend(vars);
  std::vector<long> t(vars.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = std::min(a.trunc()[i], b.trunc()[i]);
  std::map<Exps, Rat> acc;
  for (const auto& [e, c] : a.terms())
    if (inside(e, t)) acc[e] += c;
  for (const auto& [e, c] : b.terms())
    if (inside(e, t)) acc[e] += c;
  MSeries r(vars, t);
  for (const auto& [e, c] : acc) r.set(e, c);
  return r;
}

MSeries mv_scale(const MSeries& a, const Rat& c) {
  MSeries r(a.vars(), a.trunc());
  for (const auto& [e, v] : a.terms()) r.set(e, v * c);
  return r;
}

MSeries mv_sub(const MSeries& a, const MSeries& b) { return mv_add(a, mv_scale(b, -1)); }

MSeries mv_mul(const MSeries& a0, const MSeries& b0) {
  auto vars = merge_vars(a0.vars(), b0.vars());
  MSeries a = a0.extend(vars), b = b0.extend(vars);
  std::vector<long> t(vars.size());
  for (size_t i = 0; i < t.size(); ++i)
    t[i] = std::min(win_add(a.trunc()[i], b.val(i)), win_add(b.trunc()[i], a.val(i)));
  std::map<Exps, Rat> acc;
  Exps e(vars.size());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      bool ok = true;
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] >= t[i]) {
          ok = false;
          break;
        }
      }
      if (ok) acc[e] += ca * cb;
    }
  }
  MSeries r(vars, t);
  for (const auto& [k, c] : acc) r.set(k, c);
  return r;
}

namespace {

long cap_for(const Caps& caps, const std::string& v) {
  auto it = caps.find(v);
  return it == caps.end() ? kDefaultPrec : it->second;
}

// u has only nonnegative exponents and a nonzero constant term.
// Sum_k coef(k) * x^k with x = 1 - u/c, truncated to the relative window rel.
MSeries unit_series(const MSeries& u, const std::vector<long>& rel, const std::function<Rat(long)>& coef,
                    long kmax) {
  Rat c = u.constant_term();
  MSeries x = mv_sub(MSeries::scalar(1).extend(u.vars()), mv_scale(u, 1 / c)).truncated(rel);
  MSeries sum(u.vars(), rel);
  sum.set(Exps(u.vars().size(), 0), coef(0));
  MSeries p = MSeries::scalar(1).extend(u.vars());
  for (long k = 1; k <= kmax; ++k) {
    p = mv_mul(p, x).truncated(rel);
    if (p.is_zero()) break;
    Rat ck = coef(k);
    if (ck != 0) sum = mv_add(sum, mv_scale(p, ck));
  }
  return sum.truncated(rel);
}

std::vector<long> relative_window(const MSeries& u, const Caps& caps, const std::vector<long>& shift) {
  std::vector<long> rel(u.vars().size());
  for (size_t i = 0; i < rel.size(); ++i) {
    if (u.trunc()[i] < kExact)
      rel[i] = u.trunc()[i];
    else if (!u.is_zero() && u.max_exp(i) > 0)
      rel[i] = cap_for(caps, u.vars()[i]) + shift[i];
    else
      rel[i] = kExact;
  }
  return rel;
}

void check_unit_shape(const MSeries& u, const char* what) {
  for (const auto& [e, c] : u.terms())
    for (long x : e)
      if (x < 0) throw std::domain_error(std::string(what) + ": negative exponents not allowed here");
}

}  // namespace

MSeries mv_inv(const MSeries& a, const Caps& caps) {
  if (a.is_zero()) throw std::domain_error("inverse of the zero series");
  size_t n = a.vars().size();
  Exps m(n);
  for (size_t i = 0; i < n; ++i) m[i] = a.val(i);
  auto lead = a.terms().find(m);
  if (lead == a.terms().end()) throw std::domain_error("series is not a monomial times a unit; cannot invert");
  MSeries u(a.vars(), a.trunc());
  {
    std::vector<long> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = a.trunc()[i] >= kExact ? kExact : a.trunc()[i] - m[i];
    u = MSeries(a.vars(), t);
    for (const auto& [e, c] : a.terms()) {
      Exps s(n);
      for (size_t i = 0; i < n; ++i) s[i] = e[i] - m[i];
      u.set(s, c);
    }
  }
  auto rel = relative_window(u, caps, m);
  Rat c0 = lead->second;
  MSeries w = unit_series(u, rel, [&](long) { return 1 / c0; }, kExact);
  std::vector<long> t(n);
  for (size_t i = 0; i < n; ++i) t[i] = rel[i] >= kExact ? kExact : rel[i] - m[i];
  MSeries r(a.vars(), t);
  for (const auto& [e, c] : w.terms()) {
    Exps s(n);
    for (size_t i = 0; i < n; ++i) s[i] = e[i] - m[i];
    if (inside(s, t)) r.set(s, c);
  }
  return r;
}

MSeries mv_pow_int(const MSeries& a, long e, const Caps& caps) {
  if (e < 0) return mv_pow_int(mv_inv(a, caps), -e, caps);
  MSeries r = MSeries::scalar(1).extend(a.vars());
  MSeries b = a;
  while (e > 0) {
    if (e & 1) r = mv_mul(r, b);
    e >>= 1;
    if (e) b = mv_mul(b, b);
  }
  return r;
}

MSeries mv_pow_general(const MSeries& a, const Rat& e, const Caps& caps) {
  if (is_integer(e)) {
    long k = e.get_num().get_si();
    if (k >= 0 || a.constant_term() != 1) return mv_pow_int(a, k, caps);
  }
  check_unit_shape(a, "rational power");
  if (a.constant_term() != 1) throw std::domain_error("rational power needs constant term 1");
  auto rel = relative_window(a, caps, std::vector<long>(a.vars().size(), 0));
  // (1 - x)^e = sum binom(e,k) (-x)^k
  return unit_series(a, rel, [&](long k) -> Rat { return binom_general(e, k) * (k % 2 ? -1 : 1); }, kExact);
}

MSeries mv_exp(const MSeries& a, const Caps& caps) {
  check_unit_shape(a, "exp");
  if (a.is_zero()) return MSeries::scalar(1).extend(a.vars()).truncated(a.trunc());
  if (a.constant_term() != 0) throw std::domain_error("exp needs a series with zero constant term");
  MSeries u = mv_sub(MSeries::scalar(1).extend(a.vars()), a);  // x = 1 - u = a
  auto rel = relative_window(u, caps, std::vector<long>(a.vars().size(), 0));
  return unit_series(u, rel, [](long k) -> Rat { return Rat(1) / Rat(factorial(k)); }, kExact);
}

MSeries mv_derive(const MSeries& a, const std::string& var) {
  int i = a.index_of(var);
  if (i < 0) return MSeries(a.vars(), a.trunc());
  auto t = a.trunc();
  if (t[i] < kExact) t[i] -= 1;
  MSeries r(a.vars(), t);
  for (const auto& [e, c] : a.terms()) {
    if (e[i] == 0) continue;
    Exps s = e;
    s[i] -= 1;
    if (inside(s, t)) r.set(s, c * e[i]);
  }
  return r;
}

static MSeries drop_var_slice(const MSeries& a, size_t i, long k) {
  std::vector<std::string> vars;
  std::vector<long> t;
  for (size_t j = 0; j < a.vars().size(); ++j)
    if (j != i) {
      vars.push_back(a.vars()[j]);
      t.push_back(a.trunc()[j]);
    }
  MSeries r(vars, t);
  for (const auto& [e, c] : a.terms()) {
    if (e[i] != k) continue;
    Exps s;
    for (size_t j = 0; j < e.size(); ++j)
      if (j != i) s.push_back(e[j]);
    r.set(s, c);
  }
  return r;
}

MSeries mv_res(const MSeries& a, const std::vector<std::string>& vars) {
  MSeries cur = a;
  for (const auto& v : vars) {
    int i = cur.index_of(v);
    if (i < 0) {
      // independent of v: residue is zero
      return MSeries(cur.vars(), cur.trunc());
    }
    if (cur.trunc()[i] <= -1) throw std::out_of_range("residue in " + v + " outside window");
    cur = drop_var_slice(cur, static_cast<size_t>(i), -1);
  }
  return cur;
}

MSeries mv_subst(const MSeries& a, const std::string& var, const MSeries& value, const Caps& caps) {
  int i = a.index_of(var);
  if (i < 0) return a;
  std::map<long, MSeries> slices;
  for (const auto& [e, c] : a.terms())
    if (!slices.count(e[i])) slices.emplace(e[i], drop_var_slice(a, static_cast<size_t>(i), e[i]));
  bool value_const = value.vars().empty() ||
                     (value.exact() && value.terms().size() <= 1 &&
                      (value.is_zero() || value.terms().begin()->first == Exps(value.vars().size(), 0)));
  std::vector<std::string> rest;
  std::vector<long> rest_t;
  for (size_t j = 0; j < a.vars().size(); ++j)
    if (static_cast<int>(j) != i) {
      rest.push_back(a.vars()[j]);
      rest_t.push_back(a.trunc()[j]);
    }
  auto out_vars = merge_vars(rest, value.vars());
  MSeries r = MSeries(rest, rest_t).extend(out_vars);
  if (a.exact_in(var)) {
    for (const auto& [k, s] : slices) r = mv_add(r, mv_mul(s, mv_pow_int(value, k, caps)));
    return r;
  }
  if (value_const) throw std::domain_error("constant substitution into an infinite series in " + var);
  // infinite in var: value must be a single-variable series of positive order
  int live = -1;
  for (size_t j = 0; j < value.vars().size(); ++j) {
    bool uses = false;
    for (const auto& [e, c] : value.terms()) uses = uses || e[j] != 0;
    if (!uses) continue;
    if (live >= 0) throw std::domain_error("substitution of a multivariate value into an infinite series");
    live = static_cast<int>(j);
  }
  if (live < 0 || value.val(live) < 1)
    throw std::domain_error("substituted value must have positive order");
  for (const auto& [e, c] : value.terms())
    if (e[live] < 0) throw std::domain_error("substituted value must have positive order");
  long m = value.val(live);
  const std::string& y = value.vars()[live];
  long ya = a.index_of(y) >= 0 ? std::min(0L, a.val(a.index_of(y))) : 0;
  long cap = win_add(a.trunc()[i] * m, ya);
  for (const auto& [k, s] : slices) r = mv_add(r, mv_mul(s, mv_pow_int(value, k, caps)));
  auto t = r.trunc();
  int yi = r.index_of(y);
  t[yi] = std::min(t[yi], cap);
  return r.truncated(t);
}

MSeries mv_subst(const MSeries& a, const std::string& var, const Rat& value) {
  return mv_subst(a, var, MSeries::scalar(value));
}

bool mv_equal_on_window(const MSeries& a, const MSeries& b) {
  MSeries d = mv_sub(a, b);
  return d.is_zero();
}

bool ratfun_equal(const MPoly& nl, const MPoly& dl, const MPoly& nr, const MPoly& dr) {
  if (!nl.exact() || !dl.exact() || !nr.exact() || !dr.exact())
    throw std::invalid_argument("ratfun_equal needs exact polynomials");
  if (dl.is_zero() || dr.is_zero()) throw std::domain_error("zero denominator");
  return mv_sub(mv_mul(nl, dr), mv_mul(nr, dl)).is_zero();
}

}  // namespace egor
