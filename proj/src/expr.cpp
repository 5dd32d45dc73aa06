#include "egor/expr.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "egor/oracle.hpp"

namespace egor {

SyntaxError::SyntaxError(const std::string& msg, size_t l, size_t c)
    : std::runtime_error("syntax error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
      line(l),
      column(c) {}

namespace {

ExprPtr node(ExprKind k, size_t pos, std::vector<ExprPtr> kids = {}, std::string name = {}, Rat v = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = pos;
  e->kids = std::move(kids);
  e->name = std::move(name);
  e->value = v;
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& t) : s_(t) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    size_t line = 1, col = 1;
    for (size_t k = 0; k < i_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(i_ >= s_.size() ? std::string("unexpected end of input, expected '") + c + "'"
                                         : std::string("expected '") + c + "'");
  }
  bool digit_ahead() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  Int integer() {
    skip();
    size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected integer");
    return Int(s_.substr(b, i_ - b));
  }
  std::string ident() {
    skip();
    size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return s_.substr(b, i_ - b);
  }

  ExprPtr expr() {
    ExprPtr l = term();
    while (true) {
      size_t p = (skip(), i_);
      if (accept('+'))
        l = node(ExprKind::Add, p, {l, term()});
      else if (accept('-'))
        l = node(ExprKind::Sub, p, {l, term()});
      else
        return l;
    }
  }
  ExprPtr term() {
    ExprPtr l = unary();
    while (true) {
      size_t p = (skip(), i_);
      if (accept('*'))
        l = node(ExprKind::Mul, p, {l, unary()});
      else if (accept('/'))
        l = node(ExprKind::Div, p, {l, unary()});
      else
        return l;
    }
  }
  // '^' binds tighter than unary minus: -w^2 is -(w^2)
  ExprPtr unary() {
    size_t p = (skip(), i_);
    if (accept('-')) return node(ExprKind::Neg, p, {unary()});
    return factor();
  }
  ExprPtr factor() {
    ExprPtr b = atom(true);
    size_t p = (skip(), i_);
    if (accept('^')) return node(ExprKind::Pow, p, {b, exponent()});
    return b;
  }
  // integer | ident | '(' expr ')' ; a leading '-' is allowed inside the parentheses through expr
  ExprPtr exponent() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input, expected exponent");
    return atom(false);
  }
  ExprPtr atom(bool rational_literal) {
    skip();
    size_t p = i_;
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (digit_ahead()) {
      Int num = integer();
      // a/b is a literal only when b follows immediately as digits
      size_t save = i_;
      if (rational_literal && accept('/') && digit_ahead()) {
        Int den = integer();
        if (den == 0) fail("zero denominator");
        return node(ExprKind::Num, p, {}, {}, rat(num, den));
      }
      i_ = save;
      return node(ExprKind::Num, p, {}, {}, Rat(num));
    }
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_') {
      std::string id = ident();
      if (id.rfind("res_", 0) == 0) {
        std::string v = id.substr(4);
        if (v.empty()) fail("res_ needs a variable name");
        expect('(');
        ExprPtr e = expr();
        expect(')');
        return node(ExprKind::Res, p, {e}, v);
      }
      if (accept('(')) {
        std::vector<ExprPtr> args{expr()};
        while (accept(',')) args.push_back(expr());
        expect(')');
        return node(ExprKind::Call, p, args, id);
      }
      return node(ExprKind::Ident, p, {}, id);
    }
    fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ExprPtr& e) {
  auto bin = [&](const char* op) { return "(" + print_expr(e->kids[0]) + op + print_expr(e->kids[1]) + ")"; };
  switch (e->kind) {
    case ExprKind::Num:
      return is_integer(e->value) ? e->value.get_num().get_str() : "(" + e->value.get_str() + ")";
    case ExprKind::Ident:
      return e->name;
    case ExprKind::Add:
      return bin("+");
    case ExprKind::Sub:
      return bin("-");
    case ExprKind::Mul:
      return bin("*");
    case ExprKind::Div: {
      // keep "(a)/(b)" from reading back as the literal a/b
      auto side = [](const ExprPtr& k) {
        std::string x = print_expr(k);
        return k->kind == ExprKind::Num ? "(" + x + ")" : x;
      };
      return "(" + side(e->kids[0]) + "/" + side(e->kids[1]) + ")";
    }
    case ExprKind::Neg:
      return "(-" + print_expr(e->kids[0]) + ")";
    case ExprKind::Pow: {
      std::string x = print_expr(e->kids[1]);
      if (x[0] != '(' && e->kids[1]->kind != ExprKind::Num && e->kids[1]->kind != ExprKind::Ident) x = "(" + x + ")";
      return "(" + print_expr(e->kids[0]) + ")^" + x;
    }
    case ExprKind::Call: {
      std::string r = e->name + "(";
      for (size_t k = 0; k < e->kids.size(); ++k) r += (k ? "," : "") + print_expr(e->kids[k]);
      return r + ")";
    }
    case ExprKind::Res:
      return "res_" + e->name + "(" + print_expr(e->kids[0]) + ")";
  }
  return {};
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind || a->name != b->name || a->value != b->value || a->kids.size() != b->kids.size())
    return false;
  for (size_t k = 0; k < a->kids.size(); ++k)
    if (!expr_equal(a->kids[k], b->kids[k])) return false;
  return true;
}

size_t expr_depth(const ExprPtr& e) {
  size_t d = 0;
  for (const auto& k : e->kids) d = std::max(d, expr_depth(k));
  return d + 1;
}

namespace {

struct EvalError : std::domain_error {
  using std::domain_error::domain_error;
};

Rat scalar_of(const MSeries& m, const ExprPtr& e) {
  if (!m.vars().empty()) {
    bool all_const = true;
    for (const auto& [x, c] : m.terms())
      for (long v : x)
        if (v) all_const = false;
    if (!all_const || !m.exact()) throw EvalError("expected a constant in " + print_expr(e));
    return m.constant_term();
  }
  return m.as_scalar();
}

void collect_vars(const ExprPtr& e, const ParamBinding& b, std::set<std::string>& out) {
  if (e->kind == ExprKind::Ident && !b.count(e->name)) out.insert(e->name);
  if (e->kind == ExprKind::Res) out.insert(e->name);
  for (const auto& k : e->kids) collect_vars(k, b, out);
}

MSeries ev(const ExprPtr& e, const ParamBinding& b, const Caps& caps) {
  auto wrap = [&](const std::function<MSeries()>& f) {
    try {
      return f();
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(std::string(ex.what()) + " in " + print_expr(e));
    }
  };
  switch (e->kind) {
    case ExprKind::Num:
      return MSeries::scalar(e->value);
    case ExprKind::Ident: {
      auto it = b.find(e->name);
      if (it != b.end()) return MSeries::scalar(it->second);
      return MSeries::variable(e->name);
    }
    case ExprKind::Add:
      return mv_add(ev(e->kids[0], b, caps), ev(e->kids[1], b, caps));
    case ExprKind::Sub:
      return mv_sub(ev(e->kids[0], b, caps), ev(e->kids[1], b, caps));
    case ExprKind::Mul:
      return mv_mul(ev(e->kids[0], b, caps), ev(e->kids[1], b, caps));
    case ExprKind::Neg:
      return mv_scale(ev(e->kids[0], b, caps), -1);
    case ExprKind::Div: {
      MSeries n = ev(e->kids[0], b, caps), d = ev(e->kids[1], b, caps);
      return wrap([&] { return mv_mul(n, mv_inv(d, caps)); });
    }
    case ExprKind::Pow: {
      MSeries base = ev(e->kids[0], b, caps);
      Rat x = scalar_of(ev(e->kids[1], b, caps), e->kids[1]);
      return wrap([&] { return mv_pow_general(base, x, caps); });
    }
    case ExprKind::Res: {
      MSeries a = ev(e->kids[0], b, caps);
      return wrap([&] { return mv_res(a, {e->name}); });
    }
    case ExprKind::Call: {
      std::vector<MSeries> args;
      for (const auto& k : e->kids) args.push_back(ev(k, b, caps));
      auto arity = [&](size_t n) {
        if (args.size() != n) throw EvalError(e->name + " takes " + std::to_string(n) + " argument(s)");
      };
      auto as_long = [&](size_t k) {
        Rat r = scalar_of(args[k], e->kids[k]);
        if (!is_integer(r)) throw EvalError("integer argument expected in " + print_expr(e));
        return r.get_num().get_si();
      };
      if (e->name == "exp") {
        arity(1);
        return wrap([&] { return mv_exp(args[0], caps); });
      }
      if (e->name == "floor") {
        arity(1);
        return MSeries::scalar(Rat(floor_rat(scalar_of(args[0], e->kids[0]))));
      }
      if (e->name == "binom") {
        arity(2);
        return MSeries::scalar(binom_general(scalar_of(args[0], e->kids[0]), as_long(1)));
      }
      // registry closed forms
      if (e->name == "T") {
        arity(2);
        return MSeries::scalar(levs_T(as_long(0), as_long(1)));
      }
      if (e->name == "S") {
        arity(2);
        return MSeries::scalar(levs_S(as_long(0), as_long(1)));
      }
      throw EvalError("unknown function " + e->name);
    }
  }
  throw EvalError("bad node");
}

}  // namespace

MSeries eval_expr(const ExprPtr& e, const ParamBinding& binding, long order) {
  std::set<std::string> vars;
  collect_vars(e, binding, vars);
  long slack = 8;
  while (true) {
    Caps caps;
    for (const auto& v : vars) caps[v] = std::max<long>(order, 1) + slack;
    MSeries r = ev(e, binding, caps);
    bool ok = true;
    for (size_t i = 0; i < r.vars().size(); ++i)
      if (r.trunc()[i] < order) ok = false;
    if (ok) {
      std::vector<long> t = r.trunc();
      for (auto& x : t)
        if (x < kExact) x = order;
      return r.truncated(t);
    }
    if (slack > 512) throw std::domain_error("cannot reach order " + std::to_string(order) + " in " + print_expr(e));
    slack *= 4;
  }
}

}  // namespace egor
