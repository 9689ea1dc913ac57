#include "gabor/hyperbolic_series.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "gabor/errors.hpp"

namespace gabor::series {
namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t min_terms = 8;

double alpha(std::size_t k) { return pi * (static_cast<double>(k) + 0.5); }

struct Neumaier {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

void check_args(double t, double eps) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("series argument must be positive and finite");
  if (!(eps > 0.0)) throw DomainError("series tolerance must be positive");
}

// Geometric tails for k >= K, with x_K = alpha_K t and ratio q = e^{-2 pi t}.
double tail_sech(double t, std::size_t K) {
  double xK = alpha(K) * t;
  double q = std::exp(-2.0 * pi * t);
  return 4.0 * t * std::exp(-2.0 * xK) / (1.0 - q);
}

double tail_csch(double t, std::size_t K) {
  double xK = alpha(K) * t;
  double q = std::exp(-2.0 * pi * t);
  double d = -std::expm1(-2.0 * xK);
  return 4.0 * t * std::exp(-2.0 * xK) / (d * d * (1.0 - q));
}

// |sech^2(x)(1 - 2x tanh x)| <= 4 e^{-2x} (1 + 2x)
double tail_dsech(double t, std::size_t K) {
  double xK = alpha(K) * t;
  double q = std::exp(-2.0 * pi * t);
  double geo = (1.0 + 2.0 * xK) / (1.0 - q) + 2.0 * pi * t * q / ((1.0 - q) * (1.0 - q));
  return 4.0 * t * std::exp(-2.0 * xK) * geo;
}

// |csch^2(x)(1 - 2x coth x)| <= 4 e^{-2x} (1 + 2x coth x_K) / (1 - e^{-2x_K})^2
double tail_dcsch(double t, std::size_t K) {
  double xK = alpha(K) * t;
  double q = std::exp(-2.0 * pi * t);
  double d = -std::expm1(-2.0 * xK);
  double c = coth_pos(xK);
  double geo = (1.0 + 2.0 * xK * c) / (1.0 - q) + 2.0 * c * pi * t * q / ((1.0 - q) * (1.0 - q));
  return 4.0 * t * std::exp(-2.0 * xK) * geo / (d * d);
}

using Term = std::function<double(double)>;
using Tail = double (*)(double, std::size_t);

SeriesValue sum_series(double t, double eps, const Term& term, Tail tail) {
  check_args(t, eps);
  std::size_t K = std::max<std::size_t>(min_terms, static_cast<std::size_t>(std::ceil(6.0 / t)));
  while (tail(t, K) >= eps) ++K;
  Neumaier acc;
  // Smallest terms first keeps the compensated sum tight.
  for (std::size_t k = K; k-- > 0;) acc.add(term(alpha(k) * t));
  return {t * acc.value(), tail(t, K), K};
}

double partial(double t, std::size_t terms, const Term& term) {
  check_args(t, 1.0);
  Neumaier acc;
  for (std::size_t k = terms; k-- > 0;) acc.add(term(alpha(k) * t));
  return t * acc.value();
}

double dsech_term(double x) { return sech_sq(x) * (1.0 - 2.0 * x * tanh_pos(x)); }
double dcsch_term(double x) { return csch_sq(x) * (1.0 - 2.0 * x * coth_pos(x)); }

}  // namespace

double sech_sq(double x) {
  x = std::abs(x);
  double e = std::exp(-2.0 * x);
  double d = 1.0 + e;
  return 4.0 * e / (d * d);
}

double csch_sq(double x) {
  x = std::abs(x);
  double e = std::exp(-2.0 * x);
  double d = -std::expm1(-2.0 * x);
  return 4.0 * e / (d * d);
}

double tanh_pos(double x) {
  double m = -std::expm1(-2.0 * x);
  return m / (2.0 - m);
}

double coth_pos(double x) {
  double m = -std::expm1(-2.0 * x);
  return (2.0 - m) / m;
}

SeriesValue f_A(double t, double eps) { return sum_series(t, eps, sech_sq, tail_sech); }
SeriesValue f_B(double t, double eps) { return sum_series(t, eps, csch_sq, tail_csch); }
SeriesValue h_A(double t, double eps) { return sum_series(t, eps, dsech_term, tail_dsech); }
SeriesValue h_B(double t, double eps) { return sum_series(t, eps, dcsch_term, tail_dcsch); }

double f_A_partial(double t, std::size_t terms) { return partial(t, terms, sech_sq); }
double f_B_partial(double t, std::size_t terms) { return partial(t, terms, csch_sq); }
double h_A_partial(double t, std::size_t terms) { return partial(t, terms, dsech_term); }
double h_B_partial(double t, std::size_t terms) { return partial(t, terms, dcsch_term); }

}  // namespace gabor::series
