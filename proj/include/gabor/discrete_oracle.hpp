#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gabor/window_bounds.hpp"

namespace gabor::oracle {

// Which one-sided limit a sample takes when it lands exactly on a jump of the window.
enum class JumpSide { Left, Right };

struct DiscreteGaborConfig {
  int L = 0;
  int a_d = 0;  // time step in samples
  int b_d = 0;  // frequency step: modulations by multiples of b_d cycles per L samples
  double T = 0.0;      // continuous period covered by the L samples
  double delta = 0.0;  // sample spacing T / L
};

struct SampledWindow {
  std::vector<double> samples;
  double norm = 0.0;  // discrete l2 norm
};

struct FrameBounds {
  double A_d = 0.0;
  double B_d = 0.0;
  double trace = 0.0;  // sum of all eigenvalues
  bool degenerate = false;
};

struct DenseCheck {
  double A_d = 0.0;
  double B_d = 0.0;
  double trace = 0.0;
  double hermitian_residual = 0.0;  // max |S - S^*| / max |S|
};

inline constexpr double degenerate_threshold = 1e-12;
inline constexpr double min_periods = 40.0;

bool has_jumps(Family f);

// Largest L <= L_max with n | L and an even factorization L/n = a_d * b_d whose period
// covers min_periods decay lengths and lattice steps, taking the finest time step.
DiscreteGaborConfig choose_config(const WindowSpec& w, const LatticeShape& s, int L_max);

SampledWindow sample_window(const WindowSpec& w, const LatticeShape& s, const DiscreteGaborConfig& c,
                            JumpSide side = JumpSide::Left);

// Extreme eigenvalues of S f = sum_{k,l} <f, M_{l} T_{k a_d} g> M_{l} T_{k a_d} g, with
// modulations by multiples of b_d cycles per L samples, via the block (Walnut) structure.
FrameBounds frame_operator_bounds(const SampledWindow& g, const DiscreteGaborConfig& c);

// Explicit complex L x L assembly; meant for small L.
DenseCheck assemble_dense(const SampledWindow& g, const DiscreteGaborConfig& c);

// Bound on the relative periodization error of the sampled window.
double alias_budget(const WindowSpec& w, const LatticeShape& s, const DiscreteGaborConfig& c);

struct Rational {
  long p = 0;
  long q = 1;
};
Rational best_rational(double x, long max_denominator);

struct ComparisonReport {
  Family family = Family::Sech;
  double gamma = 1.0;
  int n = 1;
  double eta_requested = 0.0;
  double eta_tested = 0.0;
  DiscreteGaborConfig config;
  double A = 0.0, B = 0.0;
  double A_d = 0.0, B_d = 0.0;
  double rel_err_A = 0.0, rel_err_B = 0.0;
  double alias_budget = 0.0;
  bool degenerate = false;
  std::string note;
};

double family_tolerance(Family f);

// max_denominator > 0 rounds eta to the best rational p/q with q <= max_denominator first.
ComparisonReport compare(const WindowSpec& w, const LatticeShape& s, int L_max, long max_denominator = 0);
bool within_tolerance(const ComparisonReport& r);

nlohmann::json to_json(const ComparisonReport& r);

}  // namespace gabor::oracle
