#pragma once

#include <string>
#include <string_view>

#include "gabor/hyperbolic_series.hpp"

namespace gabor {

enum class Family { Sech, CutoffM1, CutoffM2, OneSided, TwoSided };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
bool is_cutoff(Family f);

struct WindowSpec {
  Family family = Family::Sech;
  double gamma = 1.0;
};

// Density n = 1/(ab) and shape eta, with (a, b) = (eta/n, 1/eta) at unit dilation.
struct LatticeShape {
  int n = 1;
  double eta = 1.0;
};

struct Lattice {
  double a = 0.0;
  double b = 0.0;
};

struct BoundsValue {
  double A = 0.0;
  double B = 0.0;
  double kappa = 0.0;  // +inf when A == 0
  double trunc_bound = 0.0;
  bool degenerate = false;  // A vanishes: no frame
};

void validate(const WindowSpec& w);
void validate(const LatticeShape& s);

// Lattice constants on which the dilated window g_gamma has the returned bounds.
// Cut-off windows are not dilated: a = eta/n and gamma enters the bounds directly.
Lattice physical_lattice(const WindowSpec& w, const LatticeShape& s);

BoundsValue sech_bounds(const LatticeShape& s, double eps = series::default_eps);
BoundsValue cutoff_m1_bounds(int n, double a, double gamma);
BoundsValue cutoff_m2_bounds(int n, double a, double gamma);
BoundsValue onesided_bounds(const LatticeShape& s);
BoundsValue twosided_bounds(const LatticeShape& s);

BoundsValue bounds(const WindowSpec& w, const LatticeShape& s, double eps = series::default_eps);

double eta_kappa_onesided(int n);
double gamma_kappa_cutoff_m2(int n, double a);

}  // namespace gabor
