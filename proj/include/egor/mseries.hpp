#pragma once
#include <map>
#include <string>
#include <vector>

#include "egor/numeric.hpp"
#include "egor/series.hpp"

namespace egor {

using Exps = std::vector<long>;
// absolute per-variable caps used when an exact operand expands to an infinite series
using Caps = std::map<std::string, long>;

// Sparse multivariate truncated series. A coefficient is unknown when its
// exponent in some variable i is >= trunc[i]. kExact marks full knowledge.
class MSeries {
 public:
  MSeries() = default;
  MSeries(std::vector<std::string> vars, std::vector<long> trunc);

  static MSeries scalar(const Rat& c);
  static MSeries variable(const std::string& v, long e = 1, const Rat& c = 1);
  static MSeries from_series(const Series& s);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<long>& trunc() const { return trunc_; }
  const std::map<Exps, Rat>& terms() const { return terms_; }
  int index_of(const std::string& v) const;  // -1 when absent
  long trunc_of(const std::string& v) const;
  bool exact() const;
  bool exact_in(const std::string& v) const { return trunc_of(v) >= kExact; }
  bool is_zero() const { return terms_.empty(); }
  // least exponent of variable i over stored terms; trunc when zero
  long val(size_t i) const;
  long max_exp(size_t i) const;

  Rat coeff(const Exps& e) const;  // throws outside window
  Rat constant_term() const;
  // scalar value of a series with no variables
  Rat as_scalar() const;
  Series to_series() const;  // exactly one variable

  void set(const Exps& e, const Rat& c);
  MSeries truncated(const std::vector<long>& t) const;
  // re-express over a superset of variables (in the given order)
  MSeries extend(const std::vector<std::string>& vars) const;

 private:
  std::vector<std::string> vars_;
  std::vector<long> trunc_;
  std::map<Exps, Rat> terms_;
};

using MPoly = MSeries;  // an MSeries exact in every variable

MPoly mpoly(const std::vector<std::string>& vars, const std::map<Exps, Rat>& terms);

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

MSeries mv_add(const MSeries& a, const MSeries& b);
MSeries mv_sub(const MSeries& a, const MSeries& b);
MSeries mv_scale(const MSeries& a, const Rat& c);
MSeries mv_mul(const MSeries& a, const MSeries& b);
MSeries mv_inv(const MSeries& a, const Caps& caps = {});
MSeries mv_pow_int(const MSeries& a, long e, const Caps& caps = {});
MSeries mv_pow_general(const MSeries& a, const Rat& e, const Caps& caps = {});
MSeries mv_exp(const MSeries& a, const Caps& caps = {});
MSeries mv_derive(const MSeries& a, const std::string& var);
// coefficient of prod var^{-1}, eliminating vars left to right
MSeries mv_res(const MSeries& a, const std::vector<std::string>& vars);
MSeries mv_subst(const MSeries& a, const std::string& var, const MSeries& value, const Caps& caps = {});
MSeries mv_subst(const MSeries& a, const std::string& var, const Rat& value);
bool mv_equal_on_window(const MSeries& a, const MSeries& b);

bool ratfun_equal(const MPoly& num_lhs, const MPoly& den_lhs, const MPoly& num_rhs, const MPoly& den_rhs);

}  // namespace egor
