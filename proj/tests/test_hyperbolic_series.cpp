#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gabor/errors.hpp"
#include "gabor/hyperbolic_series.hpp"
#include "support/reference.hpp"

using namespace gabor::series;
constexpr double pi = std::numbers::pi;

namespace {
std::vector<double> log_grid(double lo, double hi, int k) {
  std::vector<double> xs;
  for (int i = 0; i < k; ++i) xs.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (k - 1)));
  return xs;
}
}  // namespace

TEST_SUITE("hyperbolic_series") {
  TEST_CASE("frozen values agree with high-precision references") {
    CHECK(f_A(1.0).value == doctest::Approx(0.1591549430918953357688837633725).epsilon(1e-14));
    CHECK(f_B(1.0).value == doctest::Approx(0.1891460393295238790271778017088).epsilon(1e-14));
    CHECK(f_A(0.3).value == doctest::Approx(0.31793232011315358082).epsilon(1e-13));
    CHECK(f_B(0.3).value == doctest::Approx(1.3483567911757975264617).epsilon(1e-13));
    CHECK(h_A(0.7).value == doctest::Approx(-0.21296891986165681133).epsilon(1e-12));
    CHECK(h_A(2.0).value == doctest::Approx(-0.078286704149445469277).epsilon(1e-12));
    CHECK(h_B(0.8).value == doctest::Approx(-0.61170736804602287807).epsilon(1e-12));
    CHECK(h_B(1.1).value == doctest::Approx(-0.39830301110909061932).epsilon(1e-12));
    CHECK(h_B(1.3).value == doctest::Approx(-0.29232821810338520842).epsilon(1e-12));
  }

  TEST_CASE("large argument values are tiny and dominated by the first term") {
    auto a = f_A(10.0), b = f_B(10.0);
    CHECK(a.value == doctest::Approx(9.084404273295962722712097547888e-13).epsilon(1e-12));
    CHECK(b.value == doctest::Approx(9.084404273296787986722104402344e-13).epsilon(1e-12));
    CHECK(a.value < 40.0 * std::exp(-10.0 * pi) * 1.0001);
  }

  TEST_CASE("brute-force long double sums agree") {
    for (double t : {0.05, 0.2, 0.5, 1.0, 1.7, 3.0, 8.0}) {
      CAPTURE(t);
      auto a = f_A(t);
      auto b = f_B(t);
      CHECK(std::abs(a.value - static_cast<double>(ref::f_A(t))) <= a.tail_bound + 1e-13);
      CHECK(std::abs(b.value - static_cast<double>(ref::f_B(t))) <= b.tail_bound + 1e-13 * (1 + b.value));
    }
  }

  TEST_CASE("f_A(t) + f_A(1/t) = 1/pi on a log grid") {
    for (double t : log_grid(0.05, 20.0, 50)) {
      CAPTURE(t);
      auto x = f_A(t), y = f_A(1.0 / t);
      CHECK(std::abs(pi * x.value + pi * y.value - 1.0) <= pi * (x.tail_bound + y.tail_bound) + 1e-12);
    }
  }

  TEST_CASE("lattice sum transform holds") {
    for (double x : {0.3, 0.7, 1.0, 1.3, 2.0, 5.0}) {
      CAPTURE(x);
      double lhs = static_cast<double>(ref::sech_lattice_sum(x));
      double rhs = 2.0 + 2.0 * pi * f_B(pi / x).value;
      CHECK(std::abs(lhs - rhs) < 1e-12 * lhs);
    }
  }

  TEST_CASE("h_A is symmetric under t -> 1/t") {
    for (double t : log_grid(0.05, 20.0, 50)) {
      CAPTURE(t);
      CHECK(std::abs(h_A(t).value - h_A(1.0 / t).value) <= 1e-10);
    }
  }

  TEST_CASE("h_B is strictly increasing") {
    auto grid = log_grid(0.05, 20.0, 200);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(h_B(grid[i - 1]).value < h_B(grid[i]).value);
    CHECK(h_B(1.0).value < h_B(1.5).value);
    CHECK(h_B(0.8).value != h_B(1.3).value);
  }

  TEST_CASE("termwise derivatives match central differences") {
    const double h = 1e-5;
    for (double t : {0.3, 0.7, 1.0, 1.1, 2.5, 6.0}) {
      CAPTURE(t);
      double dA = ref::central_difference([](double s) { return f_A(s).value; }, t, h);
      double dB = ref::central_difference([](double s) { return f_B(s).value; }, t, h);
      CHECK(std::abs(t * dA - h_A(t).value) < 1e-8);
      CHECK(std::abs(t * dB - h_B(t).value) < 1e-6);
    }
    double d = ref::central_difference([](double s) { return f_A(s).value; }, 0.7, 1e-5);
    CHECK(std::abs(0.7 * d - h_A(0.7).value) < 1e-8);
    d = ref::central_difference([](double s) { return f_B(s).value; }, 1.1, 1e-5);
    CHECK(std::abs(1.1 * d - h_B(1.1).value) < 1e-8);
  }

  TEST_CASE("tail bounds are sound and below eps") {
    for (double t : {0.05, 0.1, 0.4, 1.0, 3.0, 12.0}) {
      CAPTURE(t);
      auto check = [&](SeriesValue v, auto partial) {
        CHECK(v.terms_used >= 8);
        CHECK(v.tail_bound >= 0.0);
        CHECK(v.tail_bound <= default_eps);
        double extended = partial(t, v.terms_used + 10);
        CHECK(std::abs(extended - v.value) <= v.tail_bound + 4e-16 * std::abs(v.value));
      };
      check(f_A(t), f_A_partial);
      check(f_B(t), f_B_partial);
      check(h_A(t), h_A_partial);
      check(h_B(t), h_B_partial);
    }
  }

  TEST_CASE("term count grows like 1/t") {
    CHECK(f_B(0.05).terms_used >= 120);
    CHECK(f_A(0.01).terms_used > f_A(0.1).terms_used);
  }

  TEST_CASE("relaxed eps stays within its own tolerance") {
    auto v = f_A(0.5, 1e-6);
    CHECK(v.tail_bound <= 1e-6);
    CHECK(std::abs(v.value - f_A(0.5).value) <= 1e-6);
  }

  TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(f_A(0.0), gabor::DomainError);
    CHECK_THROWS_AS(f_B(-1.0), gabor::DomainError);
    CHECK_THROWS_AS(h_A(1.0, 0.0), gabor::DomainError);
    CHECK_THROWS_AS(h_B(std::nan("")), gabor::DomainError);
  }
}
