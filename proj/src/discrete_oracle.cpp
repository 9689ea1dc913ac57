#include "gabor/discrete_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "gabor/errors.hpp"

namespace gabor::oracle {
namespace {

constexpr double pi = std::numbers::pi;

double decay_length(const WindowSpec& w) {
  switch (w.family) {
    case Family::Sech: return w.gamma;
    case Family::OneSided:
    case Family::TwoSided: return 1.0 / w.gamma;
    case Family::CutoffM1:
    case Family::CutoffM2: return 0.0;
  }
  return 0.0;
}

// exp(-gamma t) scaled to unit L2 norm on [0, len).
double cutoff_constant(double gamma, double len) {
  if (gamma == 0.0) return 1.0 / std::sqrt(len);
  return std::sqrt(2.0 * gamma / -std::expm1(-2.0 * gamma * len));
}

double rel_err(double approx, double exact) {
  if (exact == 0.0) return std::abs(approx);
  return std::abs(approx - exact) / std::abs(exact);
}

}  // namespace

bool has_jumps(Family f) { return f == Family::OneSided || f == Family::CutoffM1 || f == Family::CutoffM2; }

DiscreteGaborConfig choose_config(const WindowSpec& w, const LatticeShape& s, int L_max) {
  Lattice lat = physical_lattice(w, s);
  if (L_max < 4 * s.n) throw IncommensurableLattice("L_max must be at least 4n for an even factorization");
  const double T_min = min_periods * std::max({decay_length(w), lat.a, 1.0 / lat.b});
  DiscreteGaborConfig fallback;
  for (int L = L_max; L >= std::max(4 * s.n, L_max / 2); --L) {
    if (L % s.n) continue;
    const int m = L / s.n;
    DiscreteGaborConfig best;
    for (int a_d = 2; a_d <= m; a_d += 2) {
      if (m % a_d) continue;
      const int b_d = m / a_d;
      if (b_d % 2) continue;
      DiscreteGaborConfig c{L, a_d, b_d, b_d / lat.b, lat.a / a_d};
      if (c.T >= T_min && a_d > best.a_d) best = c;
      if (fallback.L == 0 || c.T > fallback.T) fallback = c;
    }
    if (best.L) return best;
  }
  if (fallback.L) return fallback;
  std::ostringstream msg;
  msg << "no even factorization L/n = a_d b_d with L <= " << L_max << " for n = " << s.n;
  throw IncommensurableLattice(msg.str());
}

SampledWindow sample_window(const WindowSpec& w, const LatticeShape& s, const DiscreteGaborConfig& c,
                            JumpSide side) {
  validate(w);
  validate(s);
  if (c.L <= 0 || c.a_d <= 0 || c.b_d <= 0 || c.L % c.a_d || c.L % c.b_d || c.L != s.n * c.a_d * c.b_d)
    throw DomainError("discrete configuration does not reproduce density n");
  const double g = w.gamma, d = c.delta;
  const long L = c.L;
  const long M = L / c.b_d;  // samples per 1/b
  const bool right = side == JumpSide::Right;

  std::function<double(long)> value;
  long reach = 1;
  switch (w.family) {
    case Family::Sech: {
      double C = std::sqrt(pi / (2.0 * g));
      value = [=](long j) {
        double x = pi * std::abs(static_cast<double>(j) * d) / g;
        double e = std::exp(-x);
        return C * 2.0 * e / (1.0 + e * e);
      };
      break;
    }
    case Family::TwoSided: {
      double C = std::sqrt(g);
      value = [=](long j) { return C * std::exp(-g * std::abs(static_cast<double>(j) * d)); };
      break;
    }
    case Family::OneSided: {
      double C = std::sqrt(2.0 * g);
      value = [=](long j) {
        if (j > 0) return C * std::exp(-g * static_cast<double>(j) * d);
        return (j == 0 && right) ? C : 0.0;
      };
      break;
    }
    case Family::CutoffM1:
    case Family::CutoffM2: {
      const long support = w.family == Family::CutoffM1 ? M : 2 * M;
      const double C = cutoff_constant(g, static_cast<double>(support) * d);
      value = [=](long j) {
        if (j < 0 || j > support) return 0.0;
        if (j == 0) return right ? C : 0.0;
        if (j == support) return right ? 0.0 : C * std::exp(-g * static_cast<double>(j) * d);
        return C * std::exp(-g * static_cast<double>(j) * d);
      };
      break;
    }
  }
  if (!is_cutoff(w.family)) {
    double ell = decay_length(w);
    reach = 1 + static_cast<long>(std::ceil(60.0 * ell / c.T));
    reach = std::min<long>(reach, 1000);
  }

  SampledWindow out;
  out.samples.assign(static_cast<std::size_t>(L), 0.0);
  const double scale = std::sqrt(d);
  double energy = 0.0;
  for (long j = 0; j < L; ++j) {
    double v = 0.0;
    for (long p = -reach; p <= reach; ++p) v += value(j + p * L);
    v *= scale;
    out.samples[static_cast<std::size_t>(j)] = v;
    energy += v * v;
  }
  out.norm = std::sqrt(energy);
  return out;
}

FrameBounds frame_operator_bounds(const SampledWindow& gw, const DiscreteGaborConfig& c) {
  const int L = c.L, a = c.a_d, b = c.b_d;
  if (static_cast<int>(gw.samples.size()) != L) throw DomainError("window length does not match L");
  const int M = L / b, K = L / a;
  const auto& g = gw.samples;
  auto at = [&](long j) { return g[static_cast<std::size_t>(((j % L) + L) % L)]; };

  FrameBounds fb;
  fb.A_d = std::numeric_limits<double>::infinity();
  fb.B_d = -std::numeric_limits<double>::infinity();
  double block_traces = 0.0;
  Eigen::MatrixXd W(K, b);
  // Translation by a_d permutes the residue blocks, so residues 0..a_d-1 cover every distinct block.
  for (int r = 0; r < a; ++r) {
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < b; ++m) W(k, m) = at(static_cast<long>(r) + static_cast<long>(m) * M - static_cast<long>(k) * a);
    Eigen::MatrixXd blk = static_cast<double>(M) * (W.transpose() * W);
    block_traces += blk.trace();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blk, Eigen::EigenvaluesOnly);
    fb.A_d = std::min(fb.A_d, es.eigenvalues()(0));
    fb.B_d = std::max(fb.B_d, es.eigenvalues()(b - 1));
  }
  fb.trace = block_traces * (static_cast<double>(M) / a);
  fb.A_d = std::max(fb.A_d, 0.0);
  fb.degenerate = fb.A_d < degenerate_threshold;
  return fb;
}

DenseCheck assemble_dense(const SampledWindow& gw, const DiscreteGaborConfig& c) {
  const int L = c.L, a = c.a_d, b = c.b_d;
  const int K = L / a, Lm = L / b;
  Eigen::MatrixXcd G(L, K * Lm);
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < Lm; ++l)
      for (int j = 0; j < L; ++j) {
        double shift = gw.samples[static_cast<std::size_t>(((j - k * a) % L + L) % L)];
        double phase = 2.0 * pi * static_cast<double>((static_cast<long>(l) * b * j) % L) / L;
        G(j, k * Lm + l) = shift * std::polar(1.0, phase);
      }
  Eigen::MatrixXcd S = G * G.adjoint();
  DenseCheck d;
  d.hermitian_residual = (S - S.adjoint()).cwiseAbs().maxCoeff() / S.cwiseAbs().maxCoeff();
  d.trace = S.trace().real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S, Eigen::EigenvaluesOnly);
  d.A_d = es.eigenvalues()(0);
  d.B_d = es.eigenvalues()(L - 1);
  return d;
}

double alias_budget(const WindowSpec& w, const LatticeShape&, const DiscreteGaborConfig& c) {
  const double g = w.gamma, T = c.T;
  switch (w.family) {
    case Family::Sech: return 4.0 * std::exp(-pi * T / (2.0 * g)) / -std::expm1(-pi * T / g);
    case Family::TwoSided: return 2.0 * std::exp(-g * T / 2.0) / -std::expm1(-g * T);
    case Family::OneSided: return std::exp(-g * T) / -std::expm1(-g * T);
    case Family::CutoffM1:
    case Family::CutoffM2: return 0.0;
  }
  return 0.0;
}

Rational best_rational(double x, long max_denominator) {
  if (!(x > 0.0) || max_denominator < 1) throw DomainError("best_rational needs x > 0 and a positive denominator cap");
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  Rational best{static_cast<long>(std::llround(x)), 1};
  for (int it = 0; it < 64; ++it) {
    long a = static_cast<long>(std::floor(r));
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_denominator) {
      long t = (max_denominator - q0) / q1;
      Rational semi{t * p1 + p0, t * q1 + q0};
      Rational conv{p1, q1};
      auto err = [x](Rational v) { return std::abs(x - static_cast<double>(v.p) / static_cast<double>(v.q)); };
      best = (t > 0 && err(semi) < err(conv)) ? semi : conv;
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    best = {p1, q1};
    double frac = r - static_cast<double>(a);
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return best;
}

double family_tolerance(Family f) {
  return (f == Family::Sech || f == Family::TwoSided) ? 1e-3 : 1e-2;
}

ComparisonReport compare(const WindowSpec& w, const LatticeShape& s, int L_max, long max_denominator) {
  validate(w);
  validate(s);
  ComparisonReport r;
  r.family = w.family;
  r.gamma = w.gamma;
  r.n = s.n;
  r.eta_requested = s.eta;
  r.eta_tested = s.eta;
  std::ostringstream note;
  if (max_denominator > 0) {
    Rational q = best_rational(s.eta, max_denominator);
    r.eta_tested = static_cast<double>(q.p) / static_cast<double>(q.q);
    if (r.eta_tested != s.eta) note << "eta rounded to " << q.p << "/" << q.q << "; ";
  }
  LatticeShape tested{s.n, r.eta_tested};
  auto closed = bounds(w, tested);
  r.A = closed.A;
  r.B = closed.B;
  r.config = choose_config(w, tested, L_max);
  auto left = frame_operator_bounds(sample_window(w, tested, r.config, JumpSide::Left), r.config);
  r.A_d = left.A_d;
  r.B_d = left.B_d;
  if (has_jumps(w.family)) {
    auto rightb = frame_operator_bounds(sample_window(w, tested, r.config, JumpSide::Right), r.config);
    r.A_d = std::min(r.A_d, rightb.A_d);
    r.B_d = std::max(r.B_d, rightb.B_d);
  }
  r.degenerate = r.A_d < degenerate_threshold;
  if (r.degenerate) note << "warning: A_d below " << degenerate_threshold << " (near non-frame); ";
  r.rel_err_A = rel_err(r.A_d, r.A);
  r.rel_err_B = rel_err(r.B_d, r.B);
  r.alias_budget = alias_budget(w, tested, r.config);
  r.note = note.str();
  if (!r.note.empty()) r.note.erase(r.note.size() - 2);
  return r;
}

bool within_tolerance(const ComparisonReport& r) {
  double tol = family_tolerance(r.family);
  return r.rel_err_A <= tol && r.rel_err_B <= tol;
}

nlohmann::json to_json(const ComparisonReport& r) {
  nlohmann::json j{{"family", family_name(r.family)},
                   {"gamma", r.gamma},
                   {"n", r.n},
                   {"eta_requested", r.eta_requested},
                   {"eta_tested", r.eta_tested},
                   {"L", r.config.L},
                   {"a_d", r.config.a_d},
                   {"b_d", r.config.b_d},
                   {"A", r.A},
                   {"B", r.B},
                   {"A_d", r.A_d},
                   {"B_d", r.B_d},
                   {"rel_err_A", r.rel_err_A},
                   {"rel_err_B", r.rel_err_B},
                   {"alias_budget", r.alias_budget},
                   {"within_tolerance", within_tolerance(r)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace gabor::oracle
