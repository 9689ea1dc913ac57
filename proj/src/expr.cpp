#include "gabor/expr.hpp"

#include <cctype>
#include <cfenv>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "gabor/errors.hpp"

namespace gabor::ival {

struct Expr::Node {
  Op op = Op::Const;
  std::vector<Expr> args;
  int k = 0;
  Interval c;
  std::string text;
};

namespace {

struct OpName {
  Op op;
  const char* name;
  int arity;
};

constexpr OpName op_table[] = {
    {Op::Add, "+", 2},      {Op::Sub, "-", 2},      {Op::Mul, "*", 2},      {Op::Div, "/", 2},
    {Op::Pow, "^", 2},      {Op::Neg, "neg", 1},    {Op::Exp, "exp", 1},    {Op::Sinh, "sinh", 1},
    {Op::Cosh, "cosh", 1},  {Op::Tanh, "tanh", 1},  {Op::Coth, "coth", 1},  {Op::Sech, "sech", 1},
    {Op::Csch, "csch", 1},  {Op::Log, "log", 1},    {Op::Acosh, "acosh", 1}, {Op::Asinh, "asinh", 1},
};

const OpName& lookup(Op op) {
  for (const auto& o : op_table)
    if (o.op == op) return o;
  throw std::logic_error("operator without a name");
}

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double strtod_mode(const std::string& s, int mode) {
  int old = std::fegetround();
  std::fesetround(mode);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  std::fesetround(old);
  if (end != s.c_str() + s.size()) throw DomainError("malformed numeric literal '" + s + "'");
  return v;
}

Interval sq(const Interval& v) { return pow(v, 2); }

}  // namespace

Expr::Expr(double v) {
  auto n = std::make_shared<Node>();
  n->c = Interval(v);
  n->text = shortest(v);
  node_ = std::move(n);
}

Expr Expr::var() {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->text = "x";
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::pi() {
  auto n = std::make_shared<Node>();
  constexpr double p = std::numbers::pi;  // below the true value
  n->c = Interval(p, std::nextafter(p, 4.0));
  n->text = "pi";
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::decimal(std::string_view text) {
  std::string s(text);
  double lo = strtod_mode(s, FE_DOWNWARD), hi = strtod_mode(s, FE_UPWARD);
  auto n = std::make_shared<Node>();
  n->c = Interval(lo, hi);
  n->text = s;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::unary(Op op, Expr a) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = {std::move(a)};
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::binary(Op op, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = {std::move(a), std::move(b)};
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::power(Expr a, int k) {
  auto n = std::make_shared<Node>();
  n->op = Op::Pow;
  n->k = k;
  n->args = {std::move(a)};
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Op Expr::op() const { return node_->op; }
const std::vector<Expr>& Expr::args() const { return node_->args; }
int Expr::exponent() const { return node_->k; }
const Interval& Expr::value() const { return node_->c; }

std::string Expr::to_prefix() const {
  switch (op()) {
    case Op::Const:
    case Op::Var: return node_->text;
    case Op::Pow: return "(^ " + args()[0].to_prefix() + " " + std::to_string(exponent()) + ")";
    default: break;
  }
  std::string s = "(";
  s += lookup(op()).name;
  for (const auto& a : args()) s += " " + a.to_prefix();
  return s + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != src_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("expression parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) && src_[pos_] != '(' &&
           src_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr parse_expr() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (src_[pos_] != '(') return atom(token());
    ++pos_;
    std::string head = token();
    const OpName* found = nullptr;
    for (const auto& o : op_table)
      if (head == o.name) found = &o;
    if (!found) fail("unknown operator '" + head + "'");
    std::vector<Expr> kids;
    if (found->op == Op::Pow) {
      kids.push_back(parse_expr());
      std::string k = token();
      int kv = 0;
      auto r = std::from_chars(k.data(), k.data() + k.size(), kv);
      if (r.ec != std::errc() || r.ptr != k.data() + k.size()) fail("power exponent must be an integer");
      close();
      return Expr::power(kids[0], kv);
    }
    for (int i = 0; i < found->arity; ++i) kids.push_back(parse_expr());
    close();
    if (found->arity == 1) return Expr::unary(found->op, kids[0]);
    return Expr::binary(found->op, kids[0], kids[1]);
  }

  void close() {
    skip_space();
    if (pos_ >= src_.size() || src_[pos_] != ')') fail("expected ')'");
    ++pos_;
  }

  Expr atom(const std::string& t) {
    if (t == "x") return Expr::var();
    if (t == "pi") return Expr::pi();
    return Expr::decimal(t);
  }
};

}  // namespace

Expr Expr::parse(std::string_view prefix) { return Parser(prefix).parse_all(); }

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Op::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Op::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Op::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Op::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Op::Neg, a); }
Expr pow(const Expr& a, int k) { return Expr::power(a, k); }
Expr exp(const Expr& a) { return Expr::unary(Op::Exp, a); }
Expr log(const Expr& a) { return Expr::unary(Op::Log, a); }
Expr sinh(const Expr& a) { return Expr::unary(Op::Sinh, a); }
Expr cosh(const Expr& a) { return Expr::unary(Op::Cosh, a); }
Expr tanh(const Expr& a) { return Expr::unary(Op::Tanh, a); }
Expr coth(const Expr& a) { return Expr::unary(Op::Coth, a); }
Expr sech(const Expr& a) { return Expr::unary(Op::Sech, a); }
Expr csch(const Expr& a) { return Expr::unary(Op::Csch, a); }
Expr acosh(const Expr& a) { return Expr::unary(Op::Acosh, a); }
Expr asinh(const Expr& a) { return Expr::unary(Op::Asinh, a); }

Interval eval_interval(const Expr& e, const Interval& x) {
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Const: return e.value();
    case Op::Var: return x;
    case Op::Add: return eval_interval(a[0], x) + eval_interval(a[1], x);
    case Op::Sub: return eval_interval(a[0], x) - eval_interval(a[1], x);
    case Op::Mul: return eval_interval(a[0], x) * eval_interval(a[1], x);
    case Op::Div: return eval_interval(a[0], x) / eval_interval(a[1], x);
    case Op::Pow: return pow(eval_interval(a[0], x), e.exponent());
    case Op::Neg: return -eval_interval(a[0], x);
    case Op::Exp: return exp(eval_interval(a[0], x));
    case Op::Sinh: return sinh(eval_interval(a[0], x));
    case Op::Cosh: return cosh(eval_interval(a[0], x));
    case Op::Tanh: return tanh(eval_interval(a[0], x));
    case Op::Coth: return coth(eval_interval(a[0], x));
    case Op::Sech: return sech(eval_interval(a[0], x));
    case Op::Csch: return csch(eval_interval(a[0], x));
    case Op::Log: return log(eval_interval(a[0], x));
    case Op::Acosh: return acosh(eval_interval(a[0], x));
    case Op::Asinh: return asinh(eval_interval(a[0], x));
  }
  throw std::logic_error("unhandled expression node");
}

double eval_point(const Expr& e, double x) {
  const auto& a = e.args();
  auto f = [&](int i) { return eval_point(a[static_cast<std::size_t>(i)], x); };
  switch (e.op()) {
    case Op::Const: return e.value().mid();
    case Op::Var: return x;
    case Op::Add: return f(0) + f(1);
    case Op::Sub: return f(0) - f(1);
    case Op::Mul: return f(0) * f(1);
    case Op::Div: return f(0) / f(1);
    case Op::Pow: return std::pow(f(0), e.exponent());
    case Op::Neg: return -f(0);
    case Op::Exp: return std::exp(f(0));
    case Op::Sinh: return std::sinh(f(0));
    case Op::Cosh: return std::cosh(f(0));
    case Op::Tanh: return std::tanh(f(0));
    case Op::Coth: return 1.0 / std::tanh(f(0));
    case Op::Sech: return 1.0 / std::cosh(f(0));
    case Op::Csch: return 1.0 / std::sinh(f(0));
    case Op::Log: return std::log(f(0));
    case Op::Acosh: return std::acosh(f(0));
    case Op::Asinh: return std::asinh(f(0));
  }
  throw std::logic_error("unhandled expression node");
}

Jet eval_jet(const Expr& e, const Interval& x) {
  const auto& a = e.args();
  if (e.op() == Op::Const) return {e.value(), Interval(0.0)};
  if (e.op() == Op::Var) return {x, Interval(1.0)};
  Jet u = eval_jet(a[0], x);
  switch (e.op()) {
    case Op::Add: {
      Jet v = eval_jet(a[1], x);
      return {u.value + v.value, u.slope + v.slope};
    }
    case Op::Sub: {
      Jet v = eval_jet(a[1], x);
      return {u.value - v.value, u.slope - v.slope};
    }
    case Op::Mul: {
      Jet v = eval_jet(a[1], x);
      return {u.value * v.value, u.slope * v.value + u.value * v.slope};
    }
    case Op::Div: {
      Jet v = eval_jet(a[1], x);
      Interval q = u.value / v.value;
      return {q, (u.slope - q * v.slope) / v.value};
    }
    case Op::Pow: {
      int k = e.exponent();
      if (k == 0) return {Interval(1.0), Interval(0.0)};
      return {pow(u.value, k), Interval(static_cast<double>(k)) * pow(u.value, k - 1) * u.slope};
    }
    case Op::Neg: return {-u.value, -u.slope};
    case Op::Exp: {
      Interval v = exp(u.value);
      return {v, v * u.slope};
    }
    case Op::Sinh: return {sinh(u.value), cosh(u.value) * u.slope};
    case Op::Cosh: return {cosh(u.value), sinh(u.value) * u.slope};
    case Op::Tanh: return {tanh(u.value), sq(sech(u.value)) * u.slope};
    case Op::Coth: return {coth(u.value), -(sq(csch(u.value)) * u.slope)};
    case Op::Sech: {
      Interval s = sech(u.value);
      return {s, -(s * tanh(u.value) * u.slope)};
    }
    case Op::Csch: {
      Interval c = csch(u.value);
      return {c, -(c * coth(u.value) * u.slope)};
    }
    case Op::Log: return {log(u.value), u.slope / u.value};
    case Op::Acosh:
      return {acosh(u.value), u.slope / sqrt((u.value - Interval(1.0)) * (u.value + Interval(1.0)))};
    case Op::Asinh: return {asinh(u.value), u.slope / sqrt(sq(u.value) + Interval(1.0))};
    default: break;
  }
  throw std::logic_error("unhandled expression node");
}

Interval enclose(const Expr& e, const Interval& x) {
  Jet j;
  try {
    j = eval_jet(e, x);
  } catch (const DomainViolation&) {
    return eval_interval(e, x);
  }
  double m = x.mid();
  Interval centre = eval_interval(e, Interval(m));
  Interval mv = centre + j.slope * (x - Interval(m));
  return intersect(j.value, mv);
}

}  // namespace gabor::ival
