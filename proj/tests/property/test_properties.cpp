// Randomised invariants. Each case draws from a fixed seed so failures replay.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "expbound/bounds.hpp"
#include "expbound/chebyshev.hpp"
#include "expbound/dephasing.hpp"
#include "expbound/expsum.hpp"
#include "expbound/sequences.hpp"
#include "oracles.hpp"

using namespace expbound;

namespace {

ExpSum random_real_sum(oracle::Rng& rng, int max_terms = 8) {
  const int size = rng.integer(1, max_terms);
  std::vector<double> c;
  std::vector<double> e;
  double x = rng.uniform(-3.0, 3.0);
  for (int j = 0; j < size; ++j) {
    c.push_back(rng.uniform(-2.0, 2.0));
    e.push_back(x);
    x += rng.uniform(0.05, 3.0);
  }
  return ExpSum::from_real(c, e);
}

PulseSequence random_sequence(oracle::Rng& rng) {
  const int pulses = rng.integer(0, 10);
  const double total = rng.uniform(0.2, 5.0);
  std::vector<double> interior;
  for (int i = 0; i < pulses; ++i) interior.push_back(rng.uniform(0.01, 0.99) * total);
  std::sort(interior.begin(), interior.end());
  std::vector<double> times{0.0};
  for (double t : interior) {
    if (t - times.back() > 1e-3 * total) times.push_back(t);
  }
  if (total - times.back() <= 1e-3 * total) times.pop_back();
  times.push_back(total);
  if (times.size() < 2) times = {0.0, total};
  return PulseSequence(times);
}

}  // namespace

TEST_CASE("endpoint identity holds for random even polynomials") {
  oracle::Rng rng(101);
  for (unsigned n = 2; n <= 40; n += 2) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> q(2 * n + 1, 0.0);
      double total = 0.0;
      for (unsigned i = 0; i <= 2 * n; i += 2) {
        q[i] = rng.uniform(-10.0, 10.0);
        total += std::abs(q[i]);
      }
      CHECK(endpoint_identity_residual(q, n) <= 1e-10 * (1.0 + total));
    }
  }
}

TEST_CASE("derivatives compose") {
  oracle::Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const ExpSum g = random_real_sum(rng);
    const unsigned p = static_cast<unsigned>(rng.integer(0, 4));
    const unsigned q = static_cast<unsigned>(rng.integer(0, 4));
    const ExpSum twice = derivative(derivative(g, p), q);
    const ExpSum once = derivative(g, p + q);
    for (std::size_t j = 0; j < g.size(); ++j) {
      CHECK(std::abs(twice.coefficients()[j] - once.coefficients()[j]) <=
            1e-12 * std::max(1.0, std::abs(once.coefficients()[j])));
    }
  }
}

TEST_CASE("real sums are conjugate symmetric") {
  oracle::Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const ExpSum g = random_real_sum(rng);
    const double t = rng.uniform(-10.0, 10.0);
    CHECK(std::abs(evaluate(g, -t) - std::conj(evaluate(g, t))) <= 1e-12);
  }
}

TEST_CASE("sup and L1 scale covariantly with the exponents") {
  oracle::Rng rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const ExpSum g = random_real_sum(rng, 5);
    const double s = rng.uniform(0.25, 4.0);
    std::vector<double> c;
    std::vector<double> e;
    for (std::size_t j = 0; j < g.size(); ++j) {
      c.push_back(g.coefficients()[j].real());
      e.push_back(s * g.exponents()[j].real());
    }
    const ExpSum scaled = ExpSum::from_real(c, e);
    const Interval interval(rng.uniform(-2.0, 0.0), rng.uniform(0.5, 3.0));
    const Interval shrunk(interval.y / s, interval.a / s);
    const SupNormResult a = sup_norm(g, interval);
    const SupNormResult b = sup_norm(scaled, shrunk);
    CHECK(std::abs(a.max - b.max) <= a.certification_slack + b.certification_slack + 1e-9);
    const double l1a = l1_norm(g, interval).value;
    const double l1b = l1_norm(scaled, shrunk).value;
    CHECK(std::abs(l1a - s * l1b) <= 1e-8 * std::max(1.0, s));
  }
}

TEST_CASE("vanishing order is scale invariant") {
  for (unsigned n = 2; n <= 8; n += 2) {
    const ExpSum g = uhrig_sum(n);
    for (double s : {0.5, 3.0, 17.0}) {
      std::vector<double> c;
      std::vector<double> e;
      for (std::size_t j = 0; j < g.size(); ++j) {
        c.push_back(g.coefficients()[j].real());
        e.push_back(s * g.exponents()[j].real());
      }
      CHECK(vanishing_order(ExpSum::from_real(c, e), 0.0, 1e-10, 60).order == n + 1);
    }
  }
}

TEST_CASE("L1 never exceeds length times sup") {
  oracle::Rng rng(105);
  for (int trial = 0; trial < 40; ++trial) {
    const ExpSum g = random_real_sum(rng);
    const Interval interval(rng.uniform(-5.0, 5.0), rng.uniform(0.1, 4.0));
    const SupNormResult sup = sup_norm(g, interval);
    const QuadratureResult l1 = l1_norm(g, interval);
    CHECK(l1.value <= interval.a * (sup.max + sup.certification_slack) + l1.error_estimate + 1e-12);
  }
}

TEST_CASE("gap check agrees with a brute-force scan") {
  oracle::Rng rng(106);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = rng.integer(2, 12);
    std::vector<double> e{0.0};
    for (int j = 1; j < size; ++j) e.push_back(e.back() + rng.uniform(0.0, 2.0));
    const double delta = rng.uniform(0.1, 1.5);
    bool consecutive = true;
    bool linear = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j > 0 && e[j] - e[j - 1] < delta - 1e-12) consecutive = false;
      if (e[j] < j * delta - 1e-12) linear = false;
    }
    const GapReport report = gap_check(e, delta);
    CHECK(report.consecutive_ok == consecutive);
    CHECK(report.linear_growth_ok == linear);
    CHECK(report.satisfied == (consecutive && linear));
  }
}

TEST_CASE("scaling fit recovers random exponential laws") {
  oracle::Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const double c = rng.uniform(0.05, 3.0);
    const double scale = rng.uniform(0.1, 10.0);
    std::vector<ScanPoint> points;
    for (int i = 0; i < rng.integer(3, 10); ++i) {
      const double a = 0.02 + 0.03 * i + rng.uniform(0.0, 0.01);
      points.push_back({a, scale * std::exp(-c / a)});
    }
    const ScanResult fit = scaling_fit(points);
    CHECK(std::abs(fit.fit_slope - c) <= 1e-9);
    CHECK(fit.r_squared >= 0.0);
    CHECK(fit.r_squared <= 1.0);
  }
}

TEST_CASE("filter function: bound, time scaling, and sum form") {
  oracle::Rng rng(108);
  for (int trial = 0; trial < 100; ++trial) {
    const PulseSequence seq = random_sequence(rng);
    const double n = static_cast<double>(seq.pulse_count());
    const ExpSum sum = filter_expsum(seq);
    const double s = rng.uniform(0.2, 5.0);
    std::vector<double> stretched_times;
    for (double t : seq.times()) stretched_times.push_back(s * t);
    const PulseSequence stretched(stretched_times);
    for (int i = 0; i < 10; ++i) {
      const double omega = rng.uniform(0.0, 50.0);
      const Complex f = filter_function(seq, omega);
      CHECK(std::abs(f) <= 2.0 * (n + 1.0) + 1e-12);
      CHECK(std::abs(f - evaluate(sum, omega)) <= 1e-13 * std::max(1.0, std::abs(f)));
      CHECK(std::abs(std::abs(filter_function(stretched, omega / s)) - std::abs(f)) <= 1e-11);
    }
  }
}

TEST_CASE("decay factor is non-negative and linear in the amplitude") {
  oracle::Rng rng(109);
  for (int trial = 0; trial < 15; ++trial) {
    const PulseSequence seq = random_sequence(rng);
    const double cutoff = rng.uniform(0.5, 4.0);
    const double amplitude = rng.uniform(0.1, 5.0);
    const bool ohmic = trial % 2 == 1;
    auto density = [&](double amp) {
      return ohmic ? SpectralDensity::ohmic(amp, cutoff) : SpectralDensity::flat(amp, cutoff);
    };
    const double unit = decay_factor(seq, density(1.0), 1e-9).value;
    const double scaled = decay_factor(seq, density(amplitude), 1e-9 * amplitude).value;
    CHECK(unit >= 0.0);
    CHECK(std::abs(scaled - amplitude * unit) <= 1e-8 * amplitude);
  }
}
