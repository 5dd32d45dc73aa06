#pragma once
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "egor/mseries.hpp"
#include "egor/numeric.hpp"

namespace egor {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind { Num, Ident, Add, Sub, Mul, Div, Neg, Pow, Call, Res };

struct Expr {
  ExprKind kind;
  Rat value;          // Num
  std::string name;   // Ident, Call, Res (the variable)
  std::vector<ExprPtr> kids;  // Pow: {base, exponent}
  size_t pos = 0;     // offset into the source, for messages
};

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& msg, size_t line, size_t column);
  size_t line, column;  // 1-based
};

ExprPtr parse_expr(const std::string& text);
std::string print_expr(const ExprPtr& e);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);
size_t expr_depth(const ExprPtr& e);

// Identifiers bound in `binding` are parameters, all others are series variables.
// Every variable window in the result reaches at least `order` (unless exact).
MSeries eval_expr(const ExprPtr& e, const ParamBinding& binding, long order);

}  // namespace egor
