#pragma once

#include <cstddef>

namespace gabor::series {

inline constexpr double default_eps = 1e-14;

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the omitted terms
  std::size_t terms_used = 0;
};

// f_A(t) = t * sum_{k>=0} sech(pi (k+1/2) t)^2
SeriesValue f_A(double t, double eps = default_eps);
// f_B(t) = t * sum_{k>=0} csch(pi (k+1/2) t)^2
SeriesValue f_B(double t, double eps = default_eps);
// h_A(t) = t f_A'(t),  h_B(t) = t f_B'(t), summed termwise.
SeriesValue h_A(double t, double eps = default_eps);
SeriesValue h_B(double t, double eps = default_eps);

// Same sums with a fixed number of terms and no stopping rule; used to audit tails.
double f_A_partial(double t, std::size_t terms);
double f_B_partial(double t, std::size_t terms);
double h_A_partial(double t, std::size_t terms);
double h_B_partial(double t, std::size_t terms);

// Overflow-safe hyperbolic helpers built on exp/expm1.
double sech_sq(double x);
double csch_sq(double x);
double tanh_pos(double x);
double coth_pos(double x);

}  // namespace gabor::series
