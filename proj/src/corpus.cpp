#include <cmath>

#include "gabor/certify.hpp"

namespace gabor::ival {
namespace {

Expr dec(const char* s) { return Expr::decimal(s); }

Certificate make(std::string name, Expr e, double lo, double hi, Claim c, std::string note = {}) {
  return {std::move(name), std::move(e), Interval(lo, hi), c, default_max_depth, std::move(note)};
}

}  // namespace

std::vector<Certificate> builtin_certificates() {
  const Expr x = Expr::var();
  const Expr pi = Expr::pi();
  const auto P = Claim::Positive;
  const auto N = Claim::Negative;
  std::vector<Certificate> out;

  out.push_back(make("sech_sq_margin", 1.0 - 2.0 * pow(x, 2) * pow(sech(x), 2) - dec("0.1"), 0.05, 30.0, P,
                     "1 - 2x^2 sech(x)^2 > 0.1; x -> 0 and x -> inf limits are 1"));

  Expr psi = 1.0 - 2.0 * pow(x, 2) + 6.0 * pow(x, 2) * pow(coth(x), 2) - 6.0 * x * coth(x);
  out.push_back(make("psi_small", psi, 0.05, 1.6, P, "psi(0+) = 1 covers (0, 0.05)"));
  out.push_back(make("psi_large_lower_bound", psi - (4.0 * pow(x - dec("0.825"), 2) - dec("1.7225")),
                     0.5 * std::log(21.0), 40.0, P,
                     "psi exceeds the quadratic whenever coth(x) < 1.1, i.e. x > log(sqrt(21)); checked up to 40"));
  out.push_back(make("psi_large_quadratic", 4.0 * pow(1.0 - dec("0.825") * x, 2) - dec("1.7225") * pow(x, 2), 0.0,
                     0.66, P, "variable u = 1/x: 4(x - 0.825)^2 - 1.7225 > 0 for all x >= 1.52"));

  Expr p = -2.0 * pow(x, 2) + 5.0 * x - 2.0;
  out.push_back(make("p_plus_3x2", p + 3.0 * pow(x, 2), 1.0, 50.0, P));
  out.push_back(make("p_plus_3x2_tail", 1.0 + 5.0 * x - 2.0 * pow(x, 2), 0.0, 1.0, P,
                     "variable u = 1/x: x^2 + 5x - 2 > 0 for all x >= 1"));
  out.push_back(make("p_positive_decreasing", p, 1.44, 1.52, P));
  out.push_back(make("p_decreasing", p, 1.44, 1.52, Claim::Decreasing));
  out.push_back(make("hA_second_derivative_surrogate",
                     3.0 * csch(pi * x) - dec("16.14") * exp(-dec("1.04") * pi) * csch(dec("0.52") * pi) +
                         dec("1.44") * pow(sech(dec("0.52") * pi), 2) * dec("0.9792"),
                     1.0, 1.04, P));
  out.push_back(make("hA_second_derivative_constant", 8.0 * (pi / 2.0) * tanh(pi / 2.0) - 5.0 - 6.0, 0.0, 1.0, P,
                     "constant: 8 (pi/2) tanh(pi/2) - 5 > 6"));

  out.push_back(make("xcothx_derivative", pow(csch(x), 2) * (0.5 * sinh(2.0 * x) - x), 0.05, 10.0, P));
  out.push_back(make("xcothx_increasing", x * coth(x), 0.05, 10.0, Claim::Increasing));

  out.push_back(make("rho_decreasing_kernel", pow(acosh(x), 2) - 1.0 - 1.0 / (pow(x, 2) - 1.0), 2.0, 50.0, P));
  out.push_back(make("rho_decreasing", 2.0 * acosh(x) / x, 2.0, 50.0, Claim::Decreasing));

  Expr f2 = 0.5 * pow(tanh(x), 2) + tanh(x) / x - 1.0;
  out.push_back(make("twosided_f2_positive", f2, 0.05, 1.6, P));
  out.push_back(make("twosided_f2_negative", f2, 1.61, 30.0, N));

  Expr h = x / 2.0;
  Expr T = pow(csch(h), 2) * (0.5 * coth(h) * x * csch(x) - csch(x) + x * csch(x) * coth(x)) +
           coth(h) * (-2.0 * csch(x) * coth(x) + x * csch(x) + 2.0 * x * pow(csch(x), 3));
  out.push_back(make("twosided_T", T, 0.1, 30.0, P));
  out.push_back(make("twosided_T_kernel", x * cosh(x) + 2.0 * x - 2.0 * sinh(x), 0.1, 30.0, P));
  out.push_back(make("twosided_Tn_factor_half", h * coth(h) - 1.0, 0.1, 30.0, P));
  out.push_back(make("twosided_Tn_factor", x * coth(x) - 1.0, 0.01, 30.0, P, "argument eta/n"));
  out.push_back(make("twosided_n3_kernel", x * pow(csch(x), 2) + x / 2.0 - coth(x) - dec("0.64"), 3.3, 4.8, P));

  out.push_back(make("concavity_kernel", 3.0 * coth(x) - 3.0 * x * pow(coth(x), 2) + x, 0.05, 5.0, N,
                     "the series form is -4x^3/15 + O(x^5) near 0"));

  out.push_back(make("logconvex_1", sinh(x) - pow(x, 2) * coth(x), 0.05, 8.0 / 3.0, N,
                     "limit 0 from below at 0+; domain end rounded to the double nearest 8/3"));
  Expr c43 = coth(dec("4") / 3.0);
  out.push_back(make("logconvex_2", x - (8.0 / Expr(3.0)) * c43 * coth(x), 3.08, 60.0, P));
  out.push_back(make("logconvex_2_increasing", x - (8.0 / Expr(3.0)) * c43 * coth(x), 3.08, 60.0,
                     Claim::Increasing));
  out.push_back(make("logconvex_3", cosh(x) * (1.0 - pow(x, -2)), std::acosh(4.0), 60.0, P,
                     "eta in I_n implies n < cosh(eta)"));
  out.push_back(make("logconvex_4", 0.5 * x * coth(x) - (4.0 / Expr(3.0)) * c43, 3.08, 60.0, P));
  out.push_back(make("logconvex_4_constant", 0.5 * dec("3.08") * coth(dec("3.08")) - dec("1.54"), 0.0, 1.0, P,
                     "constant: 1.54 < (3.08/2) coth(3.08)"));
  return out;
}

}  // namespace gabor::ival
