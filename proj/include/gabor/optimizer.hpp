#pragma once

#include <string>
#include <string_view>

#include "gabor/window_bounds.hpp"

namespace gabor {

enum class Quantity { LowerBound, UpperBound, ConditionNumber };
enum class Extremum { Max, Min };

std::string_view quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);

struct CriticalPoint {
  Quantity quantity = Quantity::LowerBound;
  double eta_star = 0.0;  // location in the optimized parameter (eta, or gamma for the gamma search)
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;  // |derivative| at eta_star
  Extremum kind = Extremum::Max;
};

struct SearchWindow {
  int n = 0;
  double lo = 0.0;
  double hi = 0.0;
};

inline constexpr double bisection_width = 1e-12;

// Analytic d/d(eta) of A, B or kappa at fixed density; cut-offs use a = eta/n at fixed gamma.
double derivative_of_bound(const WindowSpec& w, Quantity q, int n, double eta, double eps = series::default_eps);

// Interval whose endpoints carry opposite derivative signs for the requested quantity.
SearchWindow search_bracket(const WindowSpec& w, Quantity q, int n);
SearchWindow search_window_two_sided(int n);

CriticalPoint find_critical_point(const WindowSpec& w, Quantity q, int n, double eps = series::default_eps);

// Cut-off m2 at fixed a, optimized over gamma.
double cutoff_m2_gamma_derivative(Quantity q, int n, double a, double gamma);
CriticalPoint find_critical_gamma_cutoff_m2(Quantity q, int n, double a);

struct OrderingReport {
  double eta_A = 0.0;
  double eta_kappa = 0.0;
  double eta_B = 0.0;
  double separator = 0.0;  // arcsinh(n) one-sided; 2 arccosh(n) two-sided (3.9 for n = 3)
  bool ordered = false;
  std::string description;
};

OrderingReport verify_ordering(const WindowSpec& w, int n, double eps = series::default_eps);

}  // namespace gabor
