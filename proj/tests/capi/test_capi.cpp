#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "expbound/expbound.h"

extern "C" int eb_c_smoke(void);

TEST_CASE("header compiles and works from C") {
  CHECK(eb_c_smoke() == 0);
}

TEST_CASE("version and status strings") {
  CHECK(std::strlen(eb_version()) > 0);
  CHECK(std::string(eb_status_string(EB_OK)) != "");
  CHECK(std::string(eb_status_string(EB_ERR_BUFFER_TOO_SMALL)) == "buffer too small");
}

TEST_CASE("error codes and last-error messages") {
  double out = 0.0;
  CHECK(eb_cheb_u(3, NAN, &out) == EB_ERR_INVALID_INPUT);
  CHECK(std::strlen(eb_last_error_message()) > 0);
  CHECK(eb_cheb_u(3, 0.5, nullptr) == EB_ERR_NULL_ARGUMENT);
  CHECK(eb_cheb_u(3, 0.5, &out) == EB_OK);
  CHECK(out == doctest::Approx(-1.0));
  CHECK(eb_taylor_envelope(3, 0.1, &out) == EB_ERR_INVALID_INPUT);
  CHECK(eb_stirling_envelope(1.0, &out) == EB_ERR_INVALID_INPUT);
}

TEST_CASE("array outputs report the needed size") {
  size_t count = 0;
  CHECK(eb_cheb_nodes(4, nullptr, 0, &count) == EB_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 9);
  std::vector<double> nodes(count);
  CHECK(eb_cheb_nodes(4, nodes.data(), nodes.size(), &count) == EB_OK);
  CHECK(nodes[4] == 0.0);
  std::vector<double> small(3);
  CHECK(eb_uhrig_fractions(4, small.data(), small.size(), &count) == EB_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 4);
  std::vector<double> residuals(10);
  CHECK(eb_power_sum_residuals(10, 0, residuals.data(), residuals.size(), &count) == EB_OK);
  for (double r : residuals) CHECK(r <= 1e-12);
  std::vector<double> timings(2);
  CHECK(eb_rescaled_timings(2, timings.data(), 2, &count) == EB_OK);
  CHECK(timings[1] == doctest::Approx(3.0));
  const double q[] = {0.0, 0.0, 1.0};
  double residual = 1.0;
  CHECK(eb_endpoint_identity_residual(q, 3, 2, &residual) == EB_OK);
  CHECK(residual <= 1e-15);
}

TEST_CASE("exponential sum handles") {
  const double c[] = {1.0, -1.0};
  const double e[] = {0.0, 1.0};
  eb_expsum* sum = nullptr;
  REQUIRE(eb_expsum_create(c, nullptr, e, nullptr, 2, &sum) == EB_OK);
  CHECK(eb_expsum_size(sum) == 2);
  double re = 0.0;
  double im = 0.0;
  CHECK(eb_evaluate(sum, M_PI, 0, &re, &im) == EB_OK);
  CHECK(re == doctest::Approx(2.0));
  eb_sup_result sup{};
  CHECK(eb_sup_norm(sum, -1.0, 2.0, 0, 0, &sup) == EB_OK);
  CHECK(sup.max == doctest::Approx(2.0 * std::sin(0.5)).epsilon(1e-12));
  eb_quad_result l1{};
  CHECK(eb_l1_norm(sum, 0.0, 1.0, 1e-12, 0, &l1) == EB_OK);
  CHECK(l1.value == doctest::Approx(4.0 * (1.0 - std::cos(0.5))).epsilon(1e-10));

  eb_expsum* d = nullptr;
  CHECK(eb_derivative(sum, 2, &d) == EB_OK);
  double bound = 0.0;
  CHECK(eb_derivative_sup_bound(d, 0, &bound) == EB_OK);
  CHECK(bound == doctest::Approx(1.0));
  eb_expsum_destroy(d);

  char* text = nullptr;
  CHECK(eb_expsum_to_json(sum, &text) == EB_OK);
  CHECK(std::string(text) == R"({"exponents":[0,1],"coefficients_re":[1,-1],"coefficients_im":[0,0]})");
  eb_expsum* back = nullptr;
  CHECK(eb_expsum_from_json(text, &back) == EB_OK);
  eb_string_free(text);
  std::vector<double> cre(2), cim(2), ere(2), eim(2);
  CHECK(eb_expsum_terms(back, cre.data(), cim.data(), ere.data(), eim.data(), 2) == EB_OK);
  CHECK(cre[1] == -1.0);
  CHECK(ere[1] == 1.0);
  CHECK(eb_expsum_terms(back, cre.data(), cim.data(), ere.data(), eim.data(), 1) == EB_ERR_BUFFER_TOO_SMALL);
  eb_expsum_destroy(back);
  eb_expsum_destroy(sum);
  eb_expsum_destroy(nullptr);

  const double bad_e[] = {1.0, 0.0};
  eb_expsum* none = nullptr;
  CHECK(eb_expsum_create(c, nullptr, bad_e, nullptr, 2, &none) == EB_ERR_INVALID_INPUT);
  CHECK(none == nullptr);
  CHECK(eb_expsum_from_json("{oops", &none) == EB_ERR_PARSE);
  CHECK(eb_expsum_create(c, nullptr, e, nullptr, 2, nullptr) == EB_ERR_NULL_ARGUMENT);
}

TEST_CASE("constructions, vanishing order and class checks") {
  eb_expsum* g = nullptr;
  REQUIRE(eb_uhrig_sum(6, &g) == EB_OK);
  unsigned digits = 0;
  CHECK(eb_precision_policy_digits(g, &digits) == EB_OK);
  CHECK(digits == 42);
  eb_vanishing_report report{};
  std::vector<double> ratios(16);
  CHECK(eb_vanishing_order(g, 0.0, 1e-12, 0, &report, ratios.data(), ratios.size()) == EB_OK);
  CHECK(report.order == 7);
  CHECK(report.orders_examined == 8);
  CHECK(ratios[7] > 1e-6);
  CHECK(eb_vanishing_order(g, 0.0, 0.5, 0, &report, nullptr, 0) == EB_ERR_INVALID_INPUT);
  eb_class_report membership{};
  CHECK(eb_class_membership(g, 2.0, 0, 1.0, &membership) == EB_OK);
  CHECK(membership.member == 0);
  CHECK(membership.violation == EB_CLASS_EXPONENT_GROWTH);
  eb_expsum_destroy(g);

  unsigned order = 0;
  REQUIRE(eb_gap_scaled_sum(0.5, &g, &order) == EB_OK);
  CHECK(order == 4);
  CHECK(eb_class_membership(g, 2.0, 0, 1.0, &membership) == EB_OK);
  CHECK(membership.member == 1);
  eb_probe_result probe{};
  CHECK(eb_lower_bound_probe(g, -0.5 / 18, 1.0 / 18, 1.0, 2.0, 0, &probe) == EB_OK);
  CHECK(probe.l1 > 0.0);
  CHECK(std::isfinite(probe.implied_c));
  eb_expsum_destroy(g);
  CHECK(eb_gap_scaled_sum(4.0, &g, &order) == EB_ERR_INVALID_INPUT);

  REQUIRE(eb_unit_gap_sum(4, &g) == EB_OK);
  std::vector<double> ere(6), cre(6);
  CHECK(eb_expsum_terms(g, cre.data(), nullptr, ere.data(), nullptr, 6) == EB_OK);
  eb_gap_report gaps{};
  CHECK(eb_gap_check(ere.data(), ere.size(), 1.0, &gaps) == EB_OK);
  CHECK(gaps.satisfied == 1);
  eb_expsum_destroy(g);
}

TEST_CASE("claims and fits") {
  eb_claim_result claim{};
  CHECK(eb_check_taylor_envelope(1.0 / 9, &claim) == EB_OK);
  CHECK(claim.passes == 1);
  CHECK(claim.n == 2);
  CHECK(eb_check_stirling_envelope(std::exp(-2.0) / 4, &claim) == EB_OK);
  CHECK(claim.passes == 1);
  CHECK(claim.n == 4);
  const double a[] = {0.1, 0.05, 0.02};
  const double v[] = {std::exp(-1.0 / 0.1), std::exp(-1.0 / 0.05), std::exp(-1.0 / 0.02)};
  eb_fit_result fit{};
  CHECK(eb_scaling_fit(a, v, 3, &fit) == EB_OK);
  CHECK(fit.slope == doctest::Approx(1.0));
  CHECK(fit.n_points == 3);
  char* text = nullptr;
  CHECK(eb_fit_summary_json(&fit, &text) == EB_OK);
  CHECK(std::string(text).find("\"n_points\":3") != std::string::npos);
  eb_string_free(text);
  CHECK(eb_scaling_fit(a, v, 2, &fit) == EB_ERR_INVALID_INPUT);
}

TEST_CASE("pulse sequences and dephasing") {
  eb_pulse_sequence* seq = nullptr;
  REQUIRE(eb_uhrig_pulse_times(2, 1.0, &seq) == EB_OK);
  size_t count = 0;
  std::vector<double> times(4);
  CHECK(eb_pulse_sequence_times(seq, times.data(), times.size(), &count) == EB_OK);
  CHECK(times == std::vector<double>{0.0, 0.25, 0.75, 1.0});
  double value = 0.0;
  CHECK(eb_min_separation(seq, &value) == EB_OK);
  CHECK(value == 0.25);
  CHECK(eb_pulse_sequence_total_time(seq, &value) == EB_OK);
  CHECK(value == 1.0);
  eb_vanishing_report report{};
  CHECK(eb_vanishing_order_filter(seq, 1e-12, 0, &report) == EB_OK);
  CHECK(report.order == 3);
  double re = 0.0;
  double im = 0.0;
  CHECK(eb_filter_function(seq, 0.01, 40, &re, &im) == EB_OK);
  CHECK(std::hypot(re, im) > 0.0);
  eb_expsum* f = nullptr;
  CHECK(eb_filter_expsum(seq, &f) == EB_OK);
  CHECK(eb_expsum_size(f) == 4);
  eb_expsum_destroy(f);

  eb_spectral_density* flat = nullptr;
  REQUIRE(eb_density_create(EB_DENSITY_HARD_CUTOFF_FLAT, 1.0, 1.0, nullptr, nullptr, 0, &flat) == EB_OK);
  CHECK(eb_density_value(flat, 0.5, &value) == EB_OK);
  CHECK(value == 1.0);
  eb_quad_result chi2{};
  CHECK(eb_decay_factor(seq, flat, 1e-10, &chi2) == EB_OK);
  eb_pulse_sequence_destroy(seq);
  REQUIRE(eb_uhrig_pulse_times(4, 1.0, &seq) == EB_OK);
  eb_quad_result chi4{};
  CHECK(eb_decay_factor(seq, flat, 1e-10, &chi4) == EB_OK);
  CHECK(chi4.value < chi2.value);
  char* text = nullptr;
  CHECK(eb_pulse_sequence_to_json(seq, &text) == EB_OK);
  eb_pulse_sequence* back = nullptr;
  CHECK(eb_pulse_sequence_from_json(text, &back) == EB_OK);
  eb_string_free(text);
  eb_pulse_sequence_destroy(back);
  eb_pulse_sequence_destroy(seq);

  const double free_times[] = {0.0, 1.0};
  REQUIRE(eb_pulse_sequence_create(free_times, 2, &seq) == EB_OK);
  eb_quad_result chi0{};
  CHECK(eb_decay_factor(seq, flat, 1e-10, &chi0) == EB_OK);
  CHECK(std::abs(chi0.value - (2.0 - 2.0 * std::sin(1.0))) <= 1e-10);
  eb_density_destroy(flat);

  const double omega[] = {0.0, 1.0};
  const double level[] = {1.0, 1.0};
  eb_spectral_density* table = nullptr;
  CHECK(eb_density_create(EB_DENSITY_TABULATED, 1.0, 0.0, omega, level, 2, &table) == EB_OK);
  CHECK(eb_decay_factor(seq, table, 1e-10, &chi0) == EB_OK);
  CHECK(std::abs(chi0.value - (2.0 - 2.0 * std::sin(1.0))) <= 1e-10);
  eb_density_destroy(table);
  CHECK(eb_density_from_json(R"({"kind":"nope"})", &table) == EB_ERR_PARSE);
  eb_pulse_sequence_destroy(seq);

  const double unsorted[] = {0.0, 0.7, 0.3, 1.0};
  CHECK(eb_pulse_sequence_create(unsorted, 4, &seq) == EB_ERR_INVALID_INPUT);
  CHECK(eb_pulse_sequence_from_json("[1,2", &seq) == EB_ERR_PARSE);
}
