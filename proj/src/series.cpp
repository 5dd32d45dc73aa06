#include "egor/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace egor {

long win_add(long a, long b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

Series::Series(std::string var, long trunc) : var_(std::move(var)), trunc_(std::min(trunc, kExact)) {}

long Series::val() const { return c_.empty() ? trunc_ : c_.begin()->first; }

long Series::order() const {
  if (c_.empty()) throw std::domain_error("order of the zero series is undefined");
  return c_.begin()->first;
}

long Series::max_exp() const {
  if (c_.empty()) throw std::domain_error("zero series has no terms");
  return c_.rbegin()->first;
}

Rat Series::coeff(long k) const {
  if (k >= trunc_)
    throw std::out_of_range("coefficient " + std::to_string(k) + " of " + var_ + " outside window (trunc " +
                            std::to_string(trunc_) + ")");
  auto it = c_.find(k);
  return it == c_.end() ? Rat(0) : it->second;
}

void Series::set(long k, const Rat& v) {
  if (k >= trunc_) throw std::out_of_range("exponent at or above trunc");
  if (v == 0)
    c_.erase(k);
  else
    c_[k] = v;
}

Series Series::truncated(long t) const {
  Series r(var_, std::min(trunc_, t));
  for (const auto& [e, v] : c_)
    if (e < r.trunc_) r.c_[e] = v;
  return r;
}

Series make(const std::string& var, const std::vector<std::pair<long, Rat>>& terms, long trunc) {
  Series s(var, trunc);
  for (const auto& [e, v] : terms) {
    if (e >= s.trunc()) throw std::invalid_argument("term exponent at or above trunc");
    if (s.terms().count(e)) throw std::invalid_argument("duplicate exponent");
    s.set(e, v);
  }
  return s;
}

Series constant(const std::string& var, const Rat& c) {
  Series s(var, kExact);
  s.set(0, c);
  return s;
}

Series monomial(const std::string& var, long e, const Rat& c) {
  Series s(var, kExact);
  s.set(e, c);
  return s;
}

static void same_var(const Series& a, const Series& b) {
  if (a.var() != b.var()) throw std::invalid_argument("variable mismatch: " + a.var() + " vs " + b.var());
}

Series add(const Series& a, const Series& b) {
  same_var(a, b);
  Series r(a.var(), std::min(a.trunc(), b.trunc()));
  std::map<long, Rat> acc;
  for (const auto& [e, v] : a.terms())
    if (e < r.trunc()) acc[e] += v;
  for (const auto& [e, v] : b.terms())
    if (e < r.trunc()) acc[e] += v;
  for (const auto& [e, v] : acc) r.set(e, v);
  return r;
}

Series neg(const Series& a) { return scale(a, -1); }
Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series scale(const Series& a, const Rat& c) {
  Series r(a.var(), a.trunc());
  for (const auto& [e, v] : a.terms()) r.set(e, v * c);
  return r;
}

Series mul(const Series& a, const Series& b) {
  same_var(a, b);
  long t = std::min(win_add(a.trunc(), b.val()), win_add(b.trunc(), a.val()));
  Series r(a.var(), t);
  std::map<long, Rat> acc;
  for (const auto& [ea, va] : a.terms())
    for (const auto& [eb, vb] : b.terms())
      if (ea + eb < t) acc[ea + eb] += va * vb;
  for (const auto& [e, v] : acc) r.set(e, v);
  return r;
}

Series inv(const Series& a, long prec) {
  if (a.is_zero()) throw std::domain_error("inverse of the zero series");
  long v = a.order();
  if (a.exact() && a.terms().size() == 1) return monomial(a.var(), -v, 1 / a.terms().begin()->second);
  long rel = a.exact() ? prec : a.trunc() - v;
  std::vector<Rat> u(rel), b(rel);
  for (const auto& [e, c] : a.terms())
    if (e - v < rel) u[e - v] = c;
  Rat u0inv = 1 / u[0];
  for (long k = 0; k < rel; ++k) {
    Rat s = (k == 0) ? Rat(1) : Rat(0);
    for (long j = 1; j <= k; ++j)
      if (u[j] != 0) s -= u[j] * b[k - j];
    b[k] = s * u0inv;
  }
  Series r(a.var(), rel - v);
  for (long k = 0; k < rel; ++k) r.set(k - v, b[k]);
  return r;
}

Series pow_int(const Series& a, long e, long prec) {
  if (e < 0) {
    if (a.is_zero()) throw std::domain_error("zero series to a negative power");
    return pow_int(inv(a, prec), -e, prec);
  }
  Series result = constant(a.var(), 1);
  Series base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Series binom_pow(const Rat& c, const Rat& a, const std::string& var, long trunc) {
  bool poly = is_integer(a) && a >= 0;
  long top = poly ? a.get_num().get_si() + 1 : trunc;
  Series r(var, poly ? kExact : trunc);
  Rat ck = 1;
  for (long k = 0; k < top; ++k) {
    r.set(k, binom_general(a, k) * ck);
    ck *= c;
  }
  return r;
}

Rat res(const Series& a) { return a.coeff(-1); }

Series compose(const Series& outer, const Series& inner, long prec) {
  const std::string& v = inner.var();
  if (outer.exact()) {
    // Laurent polynomial outer: any inner works (negative powers need inner != 0)
    Series r(v, kExact);
    for (const auto& [e, c] : outer.terms()) r = add(r, scale(pow_int(inner, e, prec), c));
    return r;
  }
  if (inner.is_zero() || inner.order() < 1)
    throw std::domain_error("substitution needs an inner series of positive order when the outer series is infinite");
  long m = inner.order();
  long cap = outer.trunc() * m;  // the unknown tail of outer lands at or above this
  Series r(v, cap);
  Series in = inner.truncated(cap);
  Series p = constant(v, 1);
  for (long e = 0; e < outer.trunc(); ++e) {
    if (e > 0) p = mul(p, in).truncated(cap);
    if (p.val() >= cap) break;
    auto it = outer.terms().find(e);
    if (it != outer.terms().end()) r = add(r, scale(p, it->second));
  }
  if (!outer.is_zero() && outer.order() < 0) {
    Series ii = inv(inner, prec);
    Series q = constant(v, 1);
    for (long e = -1; e >= outer.order(); --e) {
      q = mul(q, ii);
      auto it = outer.terms().find(e);
      if (it != outer.terms().end()) r = add(r, scale(q, it->second));
    }
  }
  return r;
}

Series reverse(const Series& h, long prec) {
  if (h.is_zero() || h.order() != 1) throw std::domain_error("reversion needs a series of order 1");
  long t = h.exact() ? prec : h.trunc();
  // Lagrange: [z^k] hbar = (1/k) [w^{k-1}] (w/h)^k
  Series hw(h.var(), h.exact() ? kExact : h.trunc() - 1);
  for (const auto& [e, c] : h.terms())
    if (e - 1 < hw.trunc()) hw.set(e - 1, c);
  Series phi = inv(hw.truncated(t), prec).truncated(t - 1);
  Series r(h.var(), t);
  Series pk = constant(h.var(), 1);
  for (long k = 1; k < t; ++k) {
    pk = mul(pk, phi).truncated(t - 1);
    r.set(k, pk.coeff(k - 1) / k);
  }
  return r;
}

Series derive(const Series& a) {
  Series r(a.var(), a.exact() ? kExact : a.trunc() - 1);
  for (const auto& [e, c] : a.terms())
    if (e != 0) r.set(e - 1, c * e);
  return r;
}

Series exp_series(const Series& a, long prec) {
  if (!a.is_zero() && a.order() < 1) throw std::domain_error("exp needs a series of positive order");
  long t = a.exact() ? prec : a.trunc();
  if (a.is_zero()) return constant(a.var(), 1).truncated(t);
  Series r = constant(a.var(), 1).truncated(t);
  Series p = constant(a.var(), 1);
  Series at = a.truncated(t);
  for (long k = 1; k * a.order() < t; ++k) {
    p = scale(mul(p, at).truncated(t), rat(1, 1) / k);
    r = add(r, p);
  }
  return r.truncated(t);
}

Series log_series(const Series& a, long prec) {
  Series b = sub(a, constant(a.var(), 1));
  if (!b.is_zero() && b.order() < 1) throw std::domain_error("log needs a series of the form 1 + (positive order)");
  long t = a.exact() ? prec : a.trunc();
  Series r(a.var(), t);
  if (b.is_zero()) return r;
  Series bt = b.truncated(t);
  Series p = constant(a.var(), 1);
  for (long k = 1; k * b.order() < t; ++k) {
    p = mul(p, bt).truncated(t);
    r = add(r, scale(p, rat(k % 2 ? 1 : -1, k)));
  }
  return r.truncated(t);
}

Series geom_sum_finite(const Series& q, long N, long prec) {
  if (N < 0) throw std::domain_error("geometric sum needs N >= 0");
  Series one = constant(q.var(), 1);
  Series d = sub(one, q);
  if (d.is_zero() && d.exact()) throw std::domain_error("geometric sum with ratio 1");
  if (N == 0) return Series(q.var(), kExact);
  return mul(sub(one, pow_int(q, N, prec)), inv(d, prec));
}

bool equal_on_window(const Series& a, const Series& b) {
  if (a.var() != b.var()) return false;
  long t = std::min(a.trunc(), b.trunc());
  Series d = sub(a, b).truncated(t);
  return d.is_zero();
}

}  // namespace egor
