#include <doctest.h>

#include <cmath>

#include "gabor/discrete_oracle.hpp"
#include "gabor/errors.hpp"

using namespace gabor;
using namespace gabor::oracle;

TEST_SUITE("discrete_oracle") {
  TEST_CASE("box window is exactly tight") {
    for (int n : {1, 2, 3, 4, 6}) {
      for (double eta : {0.7, 1.0, 2.0}) {
        auto r = compare({Family::CutoffM1, 0.0}, {n, eta}, 512);
        CAPTURE(n);
        CAPTURE(eta);
        CHECK(std::abs(r.B_d / r.A_d - 1.0) < 1e-10);
        CHECK(r.A_d == doctest::Approx(n).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("box samples are zero or one constant") {
    DiscreteGaborConfig c = choose_config({Family::CutoffM1, 0.0}, {2, 1.0}, 256);
    auto g = sample_window({Family::CutoffM1, 0.0}, {2, 1.0}, c, JumpSide::Right);
    double level = 0.0;
    int nonzero = 0;
    for (double v : g.samples) {
      if (v == 0.0) continue;
      if (level == 0.0) level = v;
      CHECK(v == doctest::Approx(level).epsilon(1e-15));
      ++nonzero;
    }
    CHECK(nonzero == c.L / c.b_d);
    CHECK(g.norm == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("closed forms agree with the discrete model") {
    struct Case {
      Family f;
      double gamma;
      int n;
      double eta;
    };
    for (Case k : {Case{Family::Sech, 1, 2, std::sqrt(2.0)}, Case{Family::Sech, 1, 3, 1.2}, Case{Family::Sech, 2.5, 2, 1.1},
                   Case{Family::TwoSided, 1, 3, 4.0}, Case{Family::TwoSided, 0.5, 2, 3.0}, Case{Family::OneSided, 1, 1, 1.0},
                   Case{Family::OneSided, 2, 3, 2.0}, Case{Family::CutoffM1, 1, 2, 1.0}, Case{Family::CutoffM2, 1, 2, 2.0},
                   Case{Family::CutoffM2, 0.3, 4, 3.0}}) {
      auto r = compare({k.f, k.gamma}, {k.n, k.eta}, 2048);
      CAPTURE(family_name(k.f));
      CAPTURE(k.n);
      CAPTURE(k.eta);
      CHECK(within_tolerance(r));
      CHECK(r.rel_err_A < 1e-9);
      CHECK(r.rel_err_B < 1e-9);
      CHECK(r.eta_tested == r.eta_requested);
      CHECK(r.config.L % k.n == 0);
      CHECK(r.config.L == k.n * r.config.a_d * r.config.b_d);
      CHECK(r.config.a_d % 2 == 0);
      CHECK(r.config.b_d % 2 == 0);
    }
  }

  TEST_CASE("one-sided window is a frame at the critical density") {
    auto r = compare({Family::OneSided, 1.0}, {1, 1.0}, 2048);
    CHECK(r.A_d > 0.0);
    CHECK(!r.degenerate);
  }

  TEST_CASE("ordering is preserved by the discrete model") {
    auto best = compare({Family::Sech}, {2, std::sqrt(2.0)}, 1024);
    auto off = compare({Family::Sech}, {2, 1.2}, 1024);
    CHECK(best.A_d > off.A_d);
    CHECK(best.B_d < off.B_d);
  }

  TEST_CASE("block method, dense assembly and trace agree") {
    for (Family f : {Family::Sech, Family::TwoSided, Family::OneSided, Family::CutoffM2}) {
      WindowSpec w{f, 1.0};
      LatticeShape s{2, 2.0};
      auto c = choose_config(w, s, 96);
      auto g = sample_window(w, s, c);
      auto fb = frame_operator_bounds(g, c);
      auto d = assemble_dense(g, c);
      CAPTURE(family_name(f));
      CHECK(d.hermitian_residual <= 1e-12);
      CHECK(fb.A_d >= 0.0);
      CHECK(fb.A_d == doctest::Approx(d.A_d).epsilon(1e-10));
      CHECK(fb.B_d == doctest::Approx(d.B_d).epsilon(1e-10));
      double expected = s.n * c.L * g.norm * g.norm;
      CHECK(std::abs(fb.trace - expected) <= 1e-10 * expected);
      CHECK(std::abs(d.trace - expected) <= 1e-10 * expected);
    }
  }

  TEST_CASE("jump sides bracket the continuous bounds") {
    WindowSpec w{Family::OneSided, 1.0};
    LatticeShape s{2, 1.3};
    auto c = choose_config(w, s, 1024);
    auto left = frame_operator_bounds(sample_window(w, s, c, JumpSide::Left), c);
    auto right = frame_operator_bounds(sample_window(w, s, c, JumpSide::Right), c);
    auto exact = bounds(w, s);
    CHECK(left.A_d == doctest::Approx(exact.A).epsilon(1e-9));
    CHECK(right.B_d == doctest::Approx(exact.B).epsilon(1e-9));
    CHECK(left.B_d < exact.B);
    CHECK(right.A_d > exact.A);
  }

  TEST_CASE("refinement does not increase the error for smooth windows") {
    for (Family f : {Family::Sech, Family::TwoSided}) {
      for (int n : {2, 3}) {
        auto coarse = compare({f}, {n, std::sqrt(n)}, 512);
        auto fine = compare({f}, {n, std::sqrt(n)}, 2048);
        CHECK(fine.rel_err_A <= std::max(coarse.rel_err_A, 1e-12));
        CHECK(fine.rel_err_B <= std::max(coarse.rel_err_B, 1e-12));
      }
    }
  }

  TEST_CASE("configuration choice") {
    auto c = choose_config({Family::Sech}, {2, std::sqrt(2.0)}, 2048);
    CHECK(c.T >= 40.0);
    CHECK(c.delta * c.a_d == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
    CHECK_THROWS_AS(choose_config({Family::Sech}, {5, 1.0}, 12), IncommensurableLattice);
  }

  TEST_CASE("aliasing budgets") {
    DiscreteGaborConfig c{2048, 16, 64, 40.0, 40.0 / 2048};
    CHECK(alias_budget({Family::Sech}, {2, 1.0}, c) < 1e-20);
    c.T = 60.0;
    CHECK(alias_budget({Family::TwoSided}, {2, 1.0}, c) < 1e-12);
    CHECK(alias_budget({Family::CutoffM1, 0.0}, {2, 1.0}, c) == 0.0);
  }

  TEST_CASE("rational rounding path") {
    auto q = best_rational(M_PI, 7);
    CHECK(q.p == 22);
    CHECK(q.q == 7);
    q = best_rational(M_PI, 200);
    CHECK(q.p == 355);
    CHECK(q.q == 113);
    q = best_rational(1.5, 64);
    CHECK(q.p == 3);
    CHECK(q.q == 2);
    auto r = compare({Family::Sech}, {2, M_PI}, 1024, 8);
    CHECK(r.eta_tested == doctest::Approx(22.0 / 7).epsilon(1e-15));
    CHECK(r.note.find("22/7") != std::string::npos);
    CHECK(within_tolerance(r));
  }

  TEST_CASE("report json carries every field") {
    auto j = to_json(compare({Family::TwoSided}, {3, 4.0}, 512));
    for (auto key : {"family", "gamma", "n", "eta_requested", "eta_tested", "L", "A", "B", "A_d", "B_d", "rel_err_A",
                     "rel_err_B", "alias_budget"})
      CHECK(j.contains(key));
  }

  TEST_CASE("family tolerances") {
    CHECK(family_tolerance(Family::Sech) == 1e-3);
    CHECK(family_tolerance(Family::TwoSided) == 1e-3);
    CHECK(family_tolerance(Family::OneSided) == 1e-2);
    CHECK(family_tolerance(Family::CutoffM2) == 1e-2);
  }

  TEST_CASE("degenerate sech at density one is flagged") {
    auto r = compare({Family::Sech}, {1, 1.0}, 512);
    CHECK(r.degenerate);
    CHECK(r.A_d < 1e-12);
  }
}
