#include "gabor/window_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gabor/errors.hpp"

namespace gabor {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

BoundsValue make(double A, double B, double trunc = 0.0) {
  BoundsValue v;
  v.A = A > 0.0 ? A : 0.0;
  v.B = B;
  v.degenerate = !(A > 0.0);
  v.kappa = v.degenerate ? inf : B / A;
  v.trunc_bound = trunc;
  return v;
}

void check_n(int n) {
  if (n < 1) throw DomainError("density n must be a positive integer");
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

// x / (e^x - 1) and x / (1 - e^{-x}), with their Taylor forms near zero.
double x_over_expm1(double x) {
  if (std::abs(x) < 1e-6) return 1.0 - x / 2.0 + x * x / 12.0;
  return x / std::expm1(x);
}

double x_over_one_minus_exp(double x) {
  if (std::abs(x) < 1e-6) return 1.0 + x / 2.0 + x * x / 12.0;
  return x / -std::expm1(-x);
}

double one_minus_sech(double z) {
  double s = std::sinh(z / 2.0);
  return 2.0 * s * s / std::cosh(z);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Sech: return "sech";
    case Family::CutoffM1: return "cutoff1";
    case Family::CutoffM2: return "cutoff2";
    case Family::OneSided: return "onesided";
    case Family::TwoSided: return "twosided";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Sech, Family::CutoffM1, Family::CutoffM2, Family::OneSided, Family::TwoSided})
    if (family_name(f) == name) return f;
  throw DomainError("unknown window family '" + std::string(name) + "'");
}

bool is_cutoff(Family f) { return f == Family::CutoffM1 || f == Family::CutoffM2; }

void validate(const WindowSpec& w) {
  if (!std::isfinite(w.gamma) || w.gamma < 0.0) throw DomainError("gamma must be finite and nonnegative");
  if (w.gamma == 0.0 && !is_cutoff(w.family)) throw DomainError("gamma = 0 is only allowed for cut-off windows");
}

void validate(const LatticeShape& s) {
  check_n(s.n);
  check_positive(s.eta, "eta");
}

Lattice physical_lattice(const WindowSpec& w, const LatticeShape& s) {
  validate(w);
  validate(s);
  double n = s.n;
  switch (w.family) {
    case Family::Sech: return {w.gamma * s.eta / n, 1.0 / (w.gamma * s.eta)};
    case Family::OneSided:
    case Family::TwoSided: return {s.eta / (w.gamma * n), w.gamma / s.eta};
    case Family::CutoffM1:
    case Family::CutoffM2: return {s.eta / n, 1.0 / s.eta};
  }
  return {};
}

BoundsValue sech_bounds(const LatticeShape& s, double eps) {
  validate(s);
  const double n = s.n, eta = s.eta;
  auto a1 = series::f_A(eta / n, eps), a2 = series::f_A(1.0 / eta, eps);
  auto b1 = series::f_B(n / eta, eps), b2 = series::f_B(eta, eps);
  double A = n * pi * (a1.value + a2.value) - n;
  double B = n * pi * (b1.value + b2.value) + n;
  double trunc = n * pi * std::max(a1.tail_bound + a2.tail_bound, b1.tail_bound + b2.tail_bound);
  if (s.n == 1) A = 0.0;
  return make(A, B, trunc);
}

BoundsValue cutoff_m1_bounds(int n, double a, double gamma) {
  check_n(n);
  check_positive(a, "a");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be finite and nonnegative");
  double x = 2.0 * gamma * a;
  auto v = make(n * x_over_expm1(x), n * x_over_one_minus_exp(x));
  v.kappa = std::exp(x);
  return v;
}

BoundsValue cutoff_m2_bounds(int n, double a, double gamma) {
  check_n(n);
  check_positive(a, "a");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be finite and nonnegative");
  if (gamma == 0.0) return make(0.0, 2.0 * n);
  double y = gamma * a;
  double z = n * y;
  double A = n * x_over_expm1(2.0 * y) * one_minus_sech(z);
  double B = n * x_over_one_minus_exp(2.0 * y) * (1.0 + 1.0 / std::cosh(z));
  auto v = make(A, B);
  if (!v.degenerate) {
    double c = 1.0 / std::tanh(z / 2.0);
    v.kappa = std::exp(2.0 * y) * c * c;
  }
  return v;
}

BoundsValue onesided_bounds(const LatticeShape& s) {
  validate(s);
  const double n = s.n, eta = s.eta;
  double u = 2.0 * eta / n;
  double A = eta * std::tanh(eta / 2.0) * 2.0 / std::expm1(u);
  double B = eta / std::tanh(eta / 2.0) * 2.0 / -std::expm1(-u);
  auto v = make(A, B);
  double r = std::exp(eta / n) / std::tanh(eta / 2.0);
  if (!v.degenerate) v.kappa = r * r;
  return v;
}

BoundsValue twosided_bounds(const LatticeShape& s) {
  validate(s);
  if (s.n < 2) throw InvalidDensity("two-sided exponential window has no frame at density n = 1");
  const double n = s.n, eta = s.eta;
  auto f = [](double t) { return t / std::sinh(t); };
  double A = n * std::tanh(eta / 2.0) * (f(eta / n) - f(eta));
  double B = n / std::tanh(eta / 2.0) * ((eta / n) / std::tanh(eta / n) + f(eta));
  return make(A, B);
}

BoundsValue bounds(const WindowSpec& w, const LatticeShape& s, double eps) {
  validate(w);
  validate(s);
  switch (w.family) {
    case Family::Sech: return sech_bounds(s, eps);
    case Family::CutoffM1: return cutoff_m1_bounds(s.n, s.eta / s.n, w.gamma);
    case Family::CutoffM2: return cutoff_m2_bounds(s.n, s.eta / s.n, w.gamma);
    case Family::OneSided: return onesided_bounds(s);
    case Family::TwoSided: return twosided_bounds(s);
  }
  return {};
}

double eta_kappa_onesided(int n) {
  check_n(n);
  return std::asinh(static_cast<double>(n));
}

double gamma_kappa_cutoff_m2(int n, double a) {
  check_n(n);
  check_positive(a, "a");
  double nn = n;
  return std::asinh(nn) / (a * nn);
}

}  // namespace gabor
