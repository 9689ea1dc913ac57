#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gabor/interval.hpp"

namespace gabor::ival {

enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Sinh, Cosh, Tanh, Coth, Sech, Csch, Log, Acosh, Asinh };

// Immutable expression tree in one variable. Copies share structure.
class Expr {
 public:
  Expr(double v);  // NOLINT: numeric literals lift into constants
  static Expr var();
  static Expr pi();
  // Decimal literal; widened to the enclosing double interval unless exactly representable.
  static Expr decimal(std::string_view text);
  static Expr parse(std::string_view prefix);

  Op op() const;
  const std::vector<Expr>& args() const;
  int exponent() const;            // Pow only
  const Interval& value() const;   // Const only
  std::string to_prefix() const;

  static Expr unary(Op op, Expr a);
  static Expr binary(Op op, Expr a, Expr b);
  static Expr power(Expr a, int k);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& a, int k);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sinh(const Expr& a);
Expr cosh(const Expr& a);
Expr tanh(const Expr& a);
Expr coth(const Expr& a);
Expr sech(const Expr& a);
Expr csch(const Expr& a);
Expr acosh(const Expr& a);
Expr asinh(const Expr& a);

// Natural interval extension.
Interval eval_interval(const Expr& e, const Interval& x);
// Plain double evaluation (constants at their nearest double).
double eval_point(const Expr& e, double x);

// Value and derivative enclosures by forward-mode interval differentiation.
struct Jet {
  Interval value;
  Interval slope;
};
Jet eval_jet(const Expr& e, const Interval& x);

// Natural extension intersected with the mean-value form when the derivative is available.
Interval enclose(const Expr& e, const Interval& x);

}  // namespace gabor::ival
