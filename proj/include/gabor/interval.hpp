#pragma once

#include <iosfwd>

namespace gabor::ival {

// Closed interval [lo, hi] with outward rounding: every operation evaluates endpoints
// in round-to-nearest and then widens by two ulps on each side.
class Interval {
 public:
  Interval() = default;
  Interval(double v);  // NOLINT: point intervals convert implicitly
  Interval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const { return hi_ - lo_; }
  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool positive() const { return lo_ > 0.0; }
  bool negative() const { return hi_ < 0.0; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Widened hull of two endpoint values.
Interval outward(double a, double b);
Interval hull(const Interval& x, const Interval& y);
Interval intersect(const Interval& x, const Interval& y);

Interval operator-(const Interval& x);
Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
Interval operator/(const Interval& x, const Interval& y);

Interval pow(const Interval& x, int k);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sinh(const Interval& x);
Interval cosh(const Interval& x);
Interval tanh(const Interval& x);
Interval coth(const Interval& x);
Interval sech(const Interval& x);
Interval csch(const Interval& x);
Interval acosh(const Interval& x);
Interval asinh(const Interval& x);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace gabor::ival
