#include "gabor/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "gabor/errors.hpp"

namespace gabor::ival {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(std::nextafter(v, -inf), -inf); }
double up(double v) { return std::nextafter(std::nextafter(v, inf), inf); }

void guard(bool ok, const char* what) {
  if (!ok) throw DomainViolation(what);
}

template <typename F>
Interval monotone(const Interval& x, F f) {
  return outward(f(x.lo()), f(x.hi()));
}

}  // namespace

Interval::Interval(double v) : lo_(v), hi_(v) {
  if (std::isnan(v)) throw DomainViolation("NaN interval endpoint");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw DomainViolation("malformed interval");
}

double Interval::mid() const {
  if (std::isinf(lo_) || std::isinf(hi_)) return std::isinf(lo_) ? (std::isinf(hi_) ? 0.0 : hi_) : lo_;
  return lo_ + 0.5 * (hi_ - lo_);
}

Interval outward(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) throw DomainViolation("NaN in interval evaluation");
  return Interval(down(std::min(a, b)), up(std::max(a, b)));
}

Interval hull(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

Interval intersect(const Interval& x, const Interval& y) {
  double lo = std::max(x.lo(), y.lo()), hi = std::min(x.hi(), y.hi());
  if (lo > hi) throw DomainViolation("empty intersection of enclosures");
  return Interval(lo, hi);
}

Interval operator-(const Interval& x) { return Interval(-x.hi(), -x.lo()); }

Interval operator+(const Interval& x, const Interval& y) { return outward(x.lo() + y.lo(), x.hi() + y.hi()); }

Interval operator-(const Interval& x, const Interval& y) { return outward(x.lo() - y.hi(), x.hi() - y.lo()); }

Interval operator*(const Interval& x, const Interval& y) {
  double p[] = {x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()};
  for (double& v : p)
    if (std::isnan(v)) v = 0.0;  // 0 * inf: the zero factor is exact
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return outward(*mn, *mx);
}

Interval operator/(const Interval& x, const Interval& y) {
  guard(!y.contains_zero(), "division by an interval containing 0");
  double p[] = {x.lo() / y.lo(), x.lo() / y.hi(), x.hi() / y.lo(), x.hi() / y.hi()};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return outward(*mn, *mx);
}

Interval pow(const Interval& x, int k) {
  if (k == 0) return Interval(1.0);
  if (k < 0) return Interval(1.0) / pow(x, -k);
  auto p = [k](double v) { return std::pow(v, k); };
  if (k % 2 == 1 || x.lo() >= 0.0) return monotone(x, p);
  if (x.hi() <= 0.0) return monotone(x, p);
  return Interval(0.0, up(std::max(p(x.lo()), p(x.hi()))));
}

Interval sqrt(const Interval& x) {
  guard(x.lo() >= 0.0, "sqrt of an interval with negative part");
  auto v = monotone(x, [](double t) { return std::sqrt(t); });
  return Interval(std::max(0.0, v.lo()), v.hi());
}

Interval exp(const Interval& x) {
  auto v = monotone(x, [](double t) { return std::exp(t); });
  return Interval(std::max(0.0, v.lo()), v.hi());
}

Interval log(const Interval& x) {
  guard(x.lo() > 0.0, "log of an interval that is not strictly positive");
  return monotone(x, [](double t) { return std::log(t); });
}

Interval sinh(const Interval& x) {
  return monotone(x, [](double t) { return std::sinh(t); });
}

Interval cosh(const Interval& x) {
  auto f = [](double t) { return std::cosh(t); };
  if (x.lo() >= 0.0) return monotone(x, f);
  if (x.hi() <= 0.0) return monotone(x, f);
  return Interval(1.0, up(std::max(f(x.lo()), f(x.hi()))));
}

Interval tanh(const Interval& x) {
  auto v = monotone(x, [](double t) { return std::tanh(t); });
  return Interval(std::max(-1.0, v.lo()), std::min(1.0, v.hi()));
}

Interval coth(const Interval& x) {
  guard(!x.contains_zero(), "coth of an interval containing 0");
  return Interval(1.0) / tanh(x);
}

Interval sech(const Interval& x) {
  auto v = Interval(1.0) / cosh(x);
  return Interval(std::max(0.0, v.lo()), std::min(1.0, v.hi()));
}

Interval csch(const Interval& x) {
  guard(!x.contains_zero(), "csch of an interval containing 0");
  return Interval(1.0) / sinh(x);
}

Interval acosh(const Interval& x) {
  guard(x.lo() >= 1.0, "arccosh of an interval reaching below 1");
  auto v = monotone(x, [](double t) { return std::acosh(t); });
  return Interval(std::max(0.0, v.lo()), v.hi());
}

Interval asinh(const Interval& x) {
  return monotone(x, [](double t) { return std::asinh(t); });
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lo() << ", " << x.hi() << ']';
}

}  // namespace gabor::ival
