#include "gabor/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gabor/errors.hpp"

namespace gabor {
namespace {

constexpr double pi = std::numbers::pi;

double kappa_derivative(double A, double dA, double B, double dB) { return (dB * A - B * dA) / (A * A); }

double pick(Quantity q, double A, double dA, double B, double dB) {
  switch (q) {
    case Quantity::LowerBound: return dA;
    case Quantity::UpperBound: return dB;
    case Quantity::ConditionNumber: return kappa_derivative(A, dA, B, dB);
  }
  return 0.0;
}

// g(u) = u/(e^u - 1) and g'(u); u/(1 - e^{-u}) = g(u) + u.
double g_cut(double u) {
  if (std::abs(u) < 1e-3) return 1.0 - u / 2.0 + u * u / 12.0 - u * u * u * u / 720.0;
  return u / std::expm1(u);
}

double dg_cut(double u) {
  if (std::abs(u) < 1e-3) return -0.5 + u / 6.0 - u * u * u / 180.0;
  double e = std::expm1(u);
  return (e - u * (e + 1.0)) / (e * e);
}

double sech(double x) { return 1.0 / std::cosh(x); }
double coth(double x) { return 1.0 / std::tanh(x); }
double csch(double x) { return 1.0 / std::sinh(x); }

// Derivatives in y = gamma * a.
double m1_dy(Quantity q, int n, double y) {
  double A = n * g_cut(2.0 * y), B = n * (g_cut(2.0 * y) + 2.0 * y);
  double dA = 2.0 * n * dg_cut(2.0 * y), dB = 2.0 * n * (dg_cut(2.0 * y) + 1.0);
  if (q == Quantity::ConditionNumber) return 2.0 * std::exp(2.0 * y);
  return pick(q, A, dA, B, dB);
}

double m2_dy(Quantity q, int n, double y) {
  double z = n * y;
  double P = g_cut(2.0 * y), dP = 2.0 * dg_cut(2.0 * y);
  double R = P + 2.0 * y, dR = dP + 2.0;
  double s = std::sinh(z / 2.0);
  double Qa = 2.0 * s * s * sech(z), Qb = 1.0 + sech(z);
  double dQ = n * sech(z) * std::tanh(z);
  switch (q) {
    case Quantity::LowerBound: return n * (dP * Qa + P * dQ);
    case Quantity::UpperBound: return n * (dR * Qb - R * dQ);
    case Quantity::ConditionNumber: {
      double c = coth(z / 2.0), h = csch(z / 2.0);
      return std::exp(2.0 * y) * c * (2.0 * c - n * h * h);
    }
  }
  return 0.0;
}

double sech_derivative(Quantity q, int n, double eta, double eps) {
  if (n == 1 && q != Quantity::UpperBound) throw NoOptimizer("sech window at density 1 has A = 0 identically");
  const double nn = n;
  double dA = nn * pi / eta * (series::h_A(eta / nn, eps).value - series::h_A(1.0 / eta, eps).value);
  double dB = nn * pi / eta * (series::h_B(eta, eps).value - series::h_B(nn / eta, eps).value);
  if (q == Quantity::ConditionNumber) {
    auto v = sech_bounds({n, eta}, eps);
    return kappa_derivative(v.A, dA, v.B, dB);
  }
  return q == Quantity::LowerBound ? dA : dB;
}

double onesided_derivative(Quantity q, int n, double eta) {
  const double nn = n, r = eta / nn;
  auto v = onesided_bounds({n, eta});
  switch (q) {
    case Quantity::LowerBound: return v.A / eta * (1.0 + eta * csch(eta) - r - r * coth(r));
    case Quantity::UpperBound: return v.B / eta * (1.0 + r - r * coth(r) - eta * csch(eta));
    case Quantity::ConditionNumber: return 2.0 * v.kappa * (1.0 / nn - csch(eta));
  }
  return 0.0;
}

double twosided_derivative(Quantity q, int n, double eta) {
  const double nn = n, r = eta / nn;
  auto v = twosided_bounds({n, eta});
  auto f = [](double t) { return t * csch(t); };
  auto df = [](double t) { return csch(t) * (1.0 - t * coth(t)); };
  double th = std::tanh(eta / 2.0), ch = coth(eta / 2.0);
  double sh2 = sech(eta / 2.0), cs2 = csch(eta / 2.0);
  double F = f(r) - f(eta);
  double dF = df(r) / nn - df(eta);
  double H = r * coth(r) + f(eta);
  double cr = csch(r);
  double dH = (coth(r) - r * cr * cr) / nn + df(eta);
  double dA = nn * (0.5 * sh2 * sh2 * F + th * dF);
  double dB = nn * (-0.5 * cs2 * cs2 * H + ch * dH);
  return pick(q, v.A, dA, v.B, dB);
}

Extremum kind_of(Quantity q) { return q == Quantity::LowerBound ? Extremum::Max : Extremum::Min; }

template <typename F>
CriticalPoint bisect(Quantity q, double lo, double hi, F&& d) {
  double dlo = d(lo), dhi = d(hi);
  if (!(dlo * dhi < 0.0)) {
    std::ostringstream msg;
    msg << "derivative of " << quantity_name(q) << " has no sign change on (" << lo << ", " << hi << ")";
    throw NoSignChange(msg.str());
  }
  CriticalPoint cp{q, 0.0, lo, hi, 0.0, kind_of(q)};
  double a = lo, b = hi, da = dlo;
  while (b - a > bisection_width) {
    double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    double dm = d(m);
    if (dm == 0.0) {
      a = b = m;
      break;
    }
    if ((dm < 0.0) == (da < 0.0)) {
      a = m;
      da = dm;
    } else {
      b = m;
    }
  }
  cp.eta_star = 0.5 * (a + b);
  cp.residual = std::abs(d(cp.eta_star));
  return cp;
}

constexpr double m2_scale_lo = 1e-3;
constexpr double m2_scale_hi = 1e3;

// Bracket in y = gamma * a for the cut-off m2 quantities. The right end grows until the
// derivative flips, since the bounds underflow long before y = 1e3/n.
std::pair<double, double> m2_bracket(Quantity q, int n) {
  const double nn = n;
  double lo = m2_scale_lo / nn;
  if (q == Quantity::UpperBound) {
    if (n < 3) throw NoOptimizer("cut-off m2 upper bound is monotone in gamma for n <= 2");
    lo = std::acosh(std::numbers::phi) / nn;
  }
  double s0 = m2_dy(q, n, lo);
  double hi = std::max(1.0, 2.0 * lo * nn) / nn;
  while (hi < m2_scale_hi / nn && !(m2_dy(q, n, hi) * s0 < 0.0)) hi *= 2.0;
  return {lo, std::min(hi, m2_scale_hi / nn)};
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::LowerBound: return "A";
    case Quantity::UpperBound: return "B";
    case Quantity::ConditionNumber: return "kappa";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::LowerBound, Quantity::UpperBound, Quantity::ConditionNumber})
    if (quantity_name(q) == name) return q;
  throw DomainError("unknown quantity '" + std::string(name) + "' (expected A, B or kappa)");
}

double derivative_of_bound(const WindowSpec& w, Quantity q, int n, double eta, double eps) {
  validate(w);
  validate(LatticeShape{n, eta});
  switch (w.family) {
    case Family::Sech: return sech_derivative(q, n, eta, eps);
    case Family::OneSided: return onesided_derivative(q, n, eta);
    case Family::TwoSided:
      if (n < 2) throw InvalidDensity("two-sided exponential window has no frame at density n = 1");
      return twosided_derivative(q, n, eta);
    case Family::CutoffM1: return w.gamma / n * m1_dy(q, n, w.gamma * eta / n);
    case Family::CutoffM2: return w.gamma / n * m2_dy(q, n, w.gamma * eta / n);
  }
  return 0.0;
}

SearchWindow search_window_two_sided(int n) {
  if (n < 2) throw InvalidDensity("two-sided exponential window has no frame at density n = 1");
  if (n == 2) return {2, 2.38, 4.2};
  if (n == 3) return {3, 3.3, 4.8};
  const double nn = n, eta_n = 2.0 * std::acosh(nn);
  if (n <= 10) return {n, std::max(3.08, eta_n / 2.0), std::min(4.0 * nn / 3.0, 2.0 * eta_n)};
  return {n, eta_n / 2.0, 2.0 * eta_n};
}

SearchWindow search_bracket(const WindowSpec& w, Quantity q, int n) {
  validate(w);
  if (n < 1) throw DomainError("density n must be a positive integer");
  const double nn = n;
  switch (w.family) {
    case Family::Sech: {
      if (n == 1 && q != Quantity::UpperBound) throw NoOptimizer("sech window at density 1 has A = 0 identically");
      double r = std::sqrt(nn);
      return {n, r / 2.0, 2.0 * r};
    }
    case Family::OneSided:
      switch (q) {
        case Quantity::LowerBound: return {n, 0.5, std::asinh(nn)};
        case Quantity::UpperBound: return {n, std::asinh(nn), 2.0 * nn};
        case Quantity::ConditionNumber: return {n, 0.5, 2.0 * nn};
      }
      break;
    case Family::TwoSided:
      if (n == 2) {
        switch (q) {
          case Quantity::LowerBound: return {2, 2.38, 4.2};
          case Quantity::UpperBound: return {2, 3.0, 3.1};
          case Quantity::ConditionNumber: return {2, 3.0, 3.74};
        }
      }
      return search_window_two_sided(n);
    case Family::CutoffM1: throw NoOptimizer("an optimal lattice does not exist for the cut-off m1 window");
    case Family::CutoffM2: {
      if (w.gamma == 0.0) throw NoOptimizer("box window is tight for every lattice");
      auto [ylo, yhi] = m2_bracket(q, n);
      return {n, nn * ylo / w.gamma, nn * yhi / w.gamma};
    }
  }
  return {};
}

CriticalPoint find_critical_point(const WindowSpec& w, Quantity q, int n, double eps) {
  auto win = search_bracket(w, q, n);
  return bisect(q, win.lo, win.hi, [&](double eta) { return derivative_of_bound(w, q, n, eta, eps); });
}

double cutoff_m2_gamma_derivative(Quantity q, int n, double a, double gamma) {
  if (n < 1) throw DomainError("density n must be a positive integer");
  if (!(a > 0.0) || !(gamma > 0.0)) throw DomainError("a and gamma must be positive");
  return a * m2_dy(q, n, gamma * a);
}

CriticalPoint find_critical_gamma_cutoff_m2(Quantity q, int n, double a) {
  if (n < 1) throw DomainError("density n must be a positive integer");
  if (!(a > 0.0)) throw DomainError("a must be positive");
  auto [ylo, yhi] = m2_bracket(q, n);
  return bisect(q, ylo / a, yhi / a, [&](double g) { return cutoff_m2_gamma_derivative(q, n, a, g); });
}

OrderingReport verify_ordering(const WindowSpec& w, int n, double eps) {
  if (w.family != Family::OneSided && w.family != Family::TwoSided)
    throw DomainError("ordering is defined for the one-sided and two-sided exponential windows");
  OrderingReport r;
  r.eta_A = find_critical_point(w, Quantity::LowerBound, n, eps).eta_star;
  r.eta_B = find_critical_point(w, Quantity::UpperBound, n, eps).eta_star;
  r.eta_kappa = find_critical_point(w, Quantity::ConditionNumber, n, eps).eta_star;
  std::ostringstream d;
  d.precision(12);
  if (w.family == Family::OneSided) {
    r.separator = std::asinh(static_cast<double>(n));
    r.ordered = r.eta_A < r.eta_kappa && r.eta_kappa < r.eta_B;
    d << "eta_A=" << r.eta_A << " < eta_kappa=" << r.eta_kappa << " < eta_B=" << r.eta_B;
  } else if (n >= 4) {
    r.separator = 2.0 * std::acosh(static_cast<double>(n));
    r.ordered = r.eta_B < r.separator && r.separator < r.eta_A && r.eta_B < r.eta_kappa && r.eta_kappa < r.eta_A;
    d << "eta_B=" << r.eta_B << " < eta_n=" << r.separator << " < eta_A=" << r.eta_A;
  } else if (n == 3) {
    r.separator = 3.9;
    bool split = derivative_of_bound(w, Quantity::LowerBound, n, 3.9, eps) > 0.0 &&
                 derivative_of_bound(w, Quantity::UpperBound, n, 3.9, eps) > 0.0;
    r.ordered = split && r.eta_B < r.separator && r.separator < r.eta_A;
    d << "eta_B=" << r.eta_B << " < 3.9 < eta_A=" << r.eta_A;
  } else {
    r.separator = 2.0 * std::acosh(static_cast<double>(n));
    r.ordered = r.separator < r.eta_B && r.eta_B < r.eta_A;
    d << "eta_n=" << r.separator << " < eta_B=" << r.eta_B << " < eta_A=" << r.eta_A;
  }
  r.description = d.str();
  return r;
}

}  // namespace gabor
