#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "expbound/bounds.hpp"
#include "expbound/error.hpp"
#include "expbound/sequences.hpp"
#include "oracles.hpp"

using namespace expbound;

namespace {
const double e2 = std::exp(2.0);
}

TEST_CASE("Taylor envelope") {
  CHECK(taylor_envelope(4, 0.0) == 0.0);
  CHECK(taylor_envelope_b(3.0) == doctest::Approx(2.0 * std::numbers::e / 3.0));
  CHECK(taylor_envelope_b(1.0) == doctest::Approx(6.0 * std::pow(std::numbers::e / 3.0, 3.0)));
  for (unsigned n = 2; n <= 12; n += 2) {
    CHECK(taylor_envelope(n, 0.1) < taylor_envelope(n, 0.2));
    CHECK(taylor_envelope(n + 2, 0.2) < taylor_envelope(n, 0.2));
    CHECK(taylor_envelope(n, -0.2) == taylor_envelope(n, 0.2));
  }
  CHECK_THROWS_AS(taylor_envelope(3, 0.1), Error);
  CHECK_THROWS_AS(taylor_envelope_b(0.0), Error);
}

TEST_CASE("the Taylor envelope dominates the construction pointwise") {
  for (unsigned n = 2; n <= 10; n += 2) {
    const ExpSum g = uhrig_sum(n);
    const double t = 0.5;
    CHECK(sup_norm(g, Interval::symmetric(t), 0, precision_policy_digits(g)).max <= taylor_envelope(n, t));
  }
}

TEST_CASE("Stirling envelope") {
  CHECK(stirling_envelope(1.0 / (2.0 * e2)) == doctest::Approx(oracle::kStirlingEnvelopeAtDomainEdge).epsilon(1e-13));
  double previous = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double a = i / (100.0 * 2.0 * e2);
    const double v = stirling_envelope(a);
    CHECK(v > previous);
    previous = v;
  }
  CHECK(stirling_envelope(1e-4) < 1e-300);
  CHECK_THROWS_AS(stirling_envelope(0.0), Error);
  CHECK_THROWS_AS(stirling_envelope(0.1), Error);
}

TEST_CASE("Stirling order selection") {
  CHECK(stirling_order(1.0 / (2.0 * e2)) == 2);
  CHECK(stirling_order(1.0 / (10.0 * e2)) == 10);
  CHECK(stirling_order(1.0 / (2.0 * e2) * (1 - 1e-6)) == 4);
  CHECK(stirling_order(1.0 / (5.0 * e2)) == 6);
}

TEST_CASE("Taylor claim check") {
  const ClaimCheck first = check_taylor_envelope(1.0 / 9.0);
  CHECK(first.n == 2);
  CHECK(first.passes);
  CHECK(first.achieved_max < first.envelope);
  const ClaimCheck widest = check_taylor_envelope(1.0 / 3.0);
  CHECK(widest.n == 0);
  CHECK(widest.passes);
  double previous = 1e300;
  for (double a : {1.0 / 9, 1.0 / 18, 1.0 / 36, 1.0 / 72}) {
    const ClaimCheck c = check_taylor_envelope(a);
    CHECK(c.passes);
    CHECK(c.achieved_max < previous);
    previous = c.achieved_max;
  }
  CHECK_THROWS_AS(check_taylor_envelope(0.5), Error);
}

TEST_CASE("Stirling claim check") {
  for (unsigned n : {2u, 6u, 10u}) {
    const ClaimCheck c = check_stirling_envelope(1.0 / (n * e2));
    CHECK(c.n == n);
    CHECK(c.passes);
  }
  const ClaimCheck off_grid = check_stirling_envelope(0.03);
  CHECK(off_grid.passes);
}

TEST_CASE("scaling fit recovers synthetic data") {
  std::vector<ScanPoint> points;
  for (double a : {0.1, 0.05, 0.03, 0.02, 0.01}) points.push_back({a, 3.0 * std::exp(-2.0 / a)});
  const ScanResult fit = scaling_fit(points);
  CHECK(std::abs(fit.fit_slope - 2.0) <= 1e-9);
  CHECK(fit.fit_intercept == doctest::Approx(-std::log(3.0)).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0));

  CHECK_THROWS_AS(scaling_fit(std::vector<ScanPoint>{{0.1, 1.0}, {0.2, 1.0}}), Error);
  CHECK_THROWS_AS(scaling_fit(std::vector<ScanPoint>{{0.1, 1.0}, {0.2, 0.0}, {0.3, 1.0}}), Error);
  CHECK_THROWS_AS(scaling_fit(std::vector<ScanPoint>{{0.1, 1.0}, {0.1, 2.0}, {0.3, 1.0}}), Error);
}

TEST_CASE("lower bound probe") {
  const LowerBoundProbe constant = lower_bound_probe(ExpSum({1.0}, {0.0}), Interval(0.0, 1.0), ClassParams{1.0, 0, 1.0});
  CHECK(constant.l1 == doctest::Approx(1.0));
  CHECK(constant.implied_c == doctest::Approx(0.0));
  const LowerBoundProbe probe = lower_bound_probe(gap_scaled_sum(1.0), Interval::symmetric(1.0 / 18), ClassParams{2.0, 0, 1.0});
  CHECK(probe.l1 > 0.0);
  CHECK(std::isfinite(probe.implied_c));
  CHECK_THROWS_AS(lower_bound_probe(uhrig_sum(2), Interval(0.0, 1.0), ClassParams{2.0, 0, 1.0}), Error);
  CHECK_THROWS_AS(lower_bound_probe(ExpSum({1.0}, {0.0}), Interval(0.0, 4.0), ClassParams{1.0, 0, 1.0}), Error);
}
