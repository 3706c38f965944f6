// Command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expbound/expbound.h"

namespace {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2, kNumeric = 3 };

/// Thrown from subcommand bodies; carries the exit code and the diagnostic.
struct Failure {
  int code;
  std::string message;
};

int exit_code_for(eb_status status) {
  switch (status) {
    case EB_OK: return kOk;
    case EB_ERR_INVALID_INPUT:
    case EB_ERR_UNSUPPORTED:
    case EB_ERR_PARSE:
    case EB_ERR_NULL_ARGUMENT:
    case EB_ERR_BUFFER_TOO_SMALL: return kUsage;
    case EB_ERR_CONVERGENCE:
    case EB_ERR_PRECISION:
    case EB_ERR_NUMERIC:
    case EB_ERR_INTERNAL: return kNumeric;
  }
  return kNumeric;
}

void check(eb_status status, const char* what) {
  if (status == EB_OK) return;
  throw Failure{exit_code_for(status),
                std::string(what) + ": " + eb_status_string(status) + ": " + eb_last_error_message()};
}

struct ExpSumDeleter {
  void operator()(eb_expsum* p) const { eb_expsum_destroy(p); }
};
struct SequenceDeleter {
  void operator()(eb_pulse_sequence* p) const { eb_pulse_sequence_destroy(p); }
};
struct DensityDeleter {
  void operator()(eb_spectral_density* p) const { eb_density_destroy(p); }
};
struct StringDeleter {
  void operator()(char* p) const { eb_string_free(p); }
};
using ExpSumPtr = std::unique_ptr<eb_expsum, ExpSumDeleter>;
using SequencePtr = std::unique_ptr<eb_pulse_sequence, SequenceDeleter>;
using DensityPtr = std::unique_ptr<eb_spectral_density, DensityDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

/// Accepts plain decimals and simple fractions such as "1/9".
double parse_number(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return value;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    std::size_t used_den = 0;
    const double p = std::stod(num, &used);
    const double q = std::stod(den, &used_den);
    if (used != num.size() || used_den != den.size()) throw std::invalid_argument(text);
    return p / q;
  } catch (const std::exception&) {
    throw Failure{kUsage, "not a number: '" + text + "'"};
  }
}

std::vector<double> parse_list(const std::vector<std::string>& items) {
  std::vector<double> values;
  for (const std::string& item : items) {
    std::stringstream stream(item);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) values.push_back(parse_number(token));
    }
  }
  return values;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > 0.0) || count < 1) throw Failure{kUsage, "log grid needs positive bounds and count >= 1"};
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    const double s = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    grid[i] = std::exp(std::log(lo) + s * (std::log(hi) - std::log(lo)));
  }
  return grid;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GlobalOptions {
  std::string format;
  std::string out;
  unsigned digits = 0;
  std::optional<double> tol;
};

/// Writes data to --out or stdout; never mixes with diagnostics.
void emit(const GlobalOptions& global, const std::string& data) {
  if (global.out.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(global.out, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write '" + global.out + "'"};
  out << data;
}

std::string format_or(const GlobalOptions& global, const char* fallback) {
  return global.format.empty() ? fallback : global.format;
}

std::string json_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + fmt(values[i]);
  return out + "]";
}

std::vector<double> sequence_times(const eb_pulse_sequence* sequence) {
  std::size_t count = 0;
  eb_pulse_sequence_times(sequence, nullptr, 0, &count);
  std::vector<double> times(count);
  check(eb_pulse_sequence_times(sequence, times.data(), times.size(), &count), "pulse times");
  return times;
}

// ---------------------------------------------------------------- uhrig

int run_uhrig(const GlobalOptions& global, int n, double total_time) {
  if (n < 1) throw Failure{kUsage, "uhrig: --n must be >= 1"};
  eb_pulse_sequence* raw = nullptr;
  check(eb_uhrig_pulse_times(static_cast<unsigned>(n), total_time, &raw), "uhrig");
  SequencePtr sequence(raw);
  if (format_or(global, "json") == "json") {
    char* text = nullptr;
    check(eb_pulse_sequence_to_json(sequence.get(), &text), "uhrig");
    OwnedString owned(text);
    emit(global, std::string(text) + "\n");
  } else {
    std::string data = "j,t\n";
    const std::vector<double> times = sequence_times(sequence.get());
    for (std::size_t j = 0; j < times.size(); ++j) data += std::to_string(j) + "," + fmt(times[j]) + "\n";
    emit(global, data);
  }
  return kOk;
}

// ---------------------------------------------------------------- verify-multiplicity

int run_verify(const GlobalOptions& global, int n) {
  if (n < 2 || n % 2 != 0) throw Failure{kUsage, "verify-multiplicity: --n must be an even integer >= 2"};
  const double rel_tol = global.tol.value_or(1e-12);
  eb_expsum* raw = nullptr;
  check(eb_uhrig_sum(static_cast<unsigned>(n), &raw), "verify-multiplicity");
  ExpSumPtr sum(raw);
  eb_vanishing_report report{};
  std::vector<double> ratios(128);
  check(eb_vanishing_order(sum.get(), 0.0, rel_tol, global.digits, &report, ratios.data(), ratios.size()),
        "verify-multiplicity");
  ratios.resize(std::min<std::size_t>(report.orders_examined, ratios.size()));
  const unsigned expected = static_cast<unsigned>(n) + 1;
  const bool ok = !report.exceeds_cap && report.order == expected;

  std::string data;
  if (format_or(global, "json") == "json") {
    data = "{\"n\":" + std::to_string(n) + ",\"order\":" + std::to_string(report.order) +
           ",\"expected\":" + std::to_string(expected) + ",\"exceeds_cap\":" +
           (report.exceeds_cap ? "true" : "false") + ",\"digits\":" + std::to_string(report.digits_used) +
           ",\"rel_tol\":" + fmt(rel_tol) + ",\"ratios\":" + json_array(ratios) + "}\n";
  } else {
    data = "m,ratio,vanishes\n";
    for (std::size_t m = 0; m < ratios.size(); ++m) {
      data += std::to_string(m) + "," + fmt(ratios[m]) + "," + (ratios[m] <= rel_tol ? "1" : "0") + "\n";
    }
  }
  emit(global, data);
  std::cerr << "vanishing order " << report.order << " (expected " << expected << ") at "
            << report.digits_used << " digits\n";
  return ok ? kOk : kClaimFailed;
}

// ---------------------------------------------------------------- bounds-scan

int run_bounds_scan(const GlobalOptions& global, const std::string& family, std::vector<double> grid,
                    const std::string& fit_path) {
  const bool taylor = family == "remark25" || family == "taylor";
  const bool stirling = family == "remark26" || family == "stirling";
  if (!taylor && !stirling) throw Failure{kUsage, "bounds-scan: unknown family '" + family + "'"};
  if (grid.empty()) throw Failure{kUsage, "bounds-scan: the a grid is empty"};

  std::vector<eb_claim_result> rows;
  for (double a : grid) {
    eb_claim_result row{};
    check(taylor ? eb_check_taylor_envelope(a, &row) : eb_check_stirling_envelope(a, &row), "bounds-scan");
    rows.push_back(row);
  }
  bool all_pass = true;
  for (const auto& row : rows) all_pass = all_pass && row.passes;

  std::optional<eb_fit_result> fit;
  if (rows.size() >= 3) {
    std::vector<double> a_values;
    std::vector<double> values;
    for (const auto& row : rows) {
      a_values.push_back(row.a);
      values.push_back(row.achieved_max);
    }
    eb_fit_result result{};
    if (eb_scaling_fit(a_values.data(), values.data(), a_values.size(), &result) == EB_OK) {
      fit = result;
    } else {
      std::cerr << "fit skipped: " << eb_last_error_message() << "\n";
    }
  }
  std::string fit_json = "null";
  if (fit) {
    char* text = nullptr;
    check(eb_fit_summary_json(&*fit, &text), "bounds-scan");
    OwnedString owned(text);
    fit_json = text;
  }

  std::string data;
  if (format_or(global, "csv") == "json") {
    data = "{\"family\":\"" + family + "\",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      data += std::string(i ? "," : "") + "{\"a\":" + fmt(rows[i].a) + ",\"n\":" + std::to_string(rows[i].n) +
              ",\"value\":" + fmt(rows[i].achieved_max) + ",\"envelope\":" + fmt(rows[i].envelope) +
              ",\"passes\":" + (rows[i].passes ? "true" : "false") + "}";
    }
    data += "],\"fit\":" + fit_json + "}\n";
  } else {
    data = "a,value,envelope,passes\n";
    for (const auto& row : rows) {
      data += fmt(row.a) + "," + fmt(row.achieved_max) + "," + fmt(row.envelope) + "," +
              (row.passes ? "1" : "0") + "\n";
    }
    std::string fit_target = fit_path;
    if (fit_target.empty() && !global.out.empty()) fit_target = global.out + ".fit.json";
    if (fit_target.empty()) {
      std::cerr << "fit " << fit_json << "\n";
    } else {
      std::ofstream out(fit_target, std::ios::binary);
      if (!out) throw Failure{kUsage, "cannot write '" + fit_target + "'"};
      out << fit_json << "\n";
    }
  }
  emit(global, data);
  if (fit) std::cerr << "fitted c = " << fmt(fit->slope) << ", r2 = " << fmt(fit->r_squared) << "\n";
  return all_pass ? kOk : kClaimFailed;
}

// ---------------------------------------------------------------- chi

SequencePtr load_sequence(const std::string& path) {
  const std::string text = read_file(path);
  eb_pulse_sequence* raw = nullptr;
  check(eb_pulse_sequence_from_json(text.c_str(), &raw), ("sequence file '" + path + "'").c_str());
  return SequencePtr(raw);
}

int run_chi(const GlobalOptions& global, const std::string& sequence_path, const std::string& density_path) {
  SequencePtr sequence = load_sequence(sequence_path);
  const std::string density_text = read_file(density_path);
  eb_spectral_density* raw = nullptr;
  check(eb_density_from_json(density_text.c_str(), &raw), ("density file '" + density_path + "'").c_str());
  DensityPtr density(raw);
  eb_quad_result chi{};
  const eb_status status = eb_decay_factor(sequence.get(), density.get(), global.tol.value_or(1e-10), &chi);
  if (status == EB_ERR_CONVERGENCE) {
    std::cerr << "partial chi " << fmt(chi.value) << " (error " << fmt(chi.error_estimate) << ")\n";
  }
  check(status, "chi");
  if (format_or(global, "json") == "json") {
    emit(global, "{\"chi\":" + fmt(chi.value) + ",\"error_estimate\":" + fmt(chi.error_estimate) +
                     ",\"subintervals\":" + std::to_string(chi.subintervals) + "}\n");
  } else {
    emit(global, "chi,error_estimate\n" + fmt(chi.value) + "," + fmt(chi.error_estimate) + "\n");
  }
  return kOk;
}

// ---------------------------------------------------------------- l1-scan

int run_l1_scan(const GlobalOptions& global, const std::vector<double>& grid, const std::string& policy) {
  if (grid.empty()) throw Failure{kUsage, "l1-scan: the b grid is empty"};
  if (policy != "half" && policy != "full") throw Failure{kUsage, "l1-scan: --policy must be half or full"};
  for (double b : grid) {
    if (!(b > 0.0 && b <= 3.0)) throw Failure{kUsage, "l1-scan: b must lie in (0, 3], got " + fmt(b)};
  }
  struct Row {
    double b, a, l1, implied_c;
  };
  std::vector<Row> rows;
  for (double b : grid) {
    eb_expsum* raw = nullptr;
    check(eb_gap_scaled_sum(b, &raw, nullptr), "l1-scan");
    ExpSumPtr sum(raw);
    const double half = policy == "half" ? b / 18.0 : b / 9.0;
    eb_probe_result probe{};
    check(eb_lower_bound_probe(sum.get(), -half, 2.0 * half, 1.0, 2.0, 0, &probe), "l1-scan");
    rows.push_back({b, 2.0 * half, probe.l1, probe.implied_c});
  }
  std::string data;
  if (format_or(global, "csv") == "json") {
    data = "{\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      data += std::string(i ? "," : "") + "{\"b\":" + fmt(rows[i].b) + ",\"a\":" + fmt(rows[i].a) +
              ",\"l1\":" + fmt(rows[i].l1) + ",\"implied_c\":" + fmt(rows[i].implied_c) + "}";
    }
    data += "]}\n";
  } else {
    data = "b,a,l1,implied_c\n";
    for (const Row& row : rows) {
      data += fmt(row.b) + "," + fmt(row.a) + "," + fmt(row.l1) + "," + fmt(row.implied_c) + "\n";
    }
  }
  emit(global, data);
  return kOk;
}

// ---------------------------------------------------------------- filter

int run_filter(const GlobalOptions& global, const std::string& sequence_path, int uhrig_n, double total_time,
               double omega_min, double omega_max, int points, bool log_spacing) {
  SequencePtr sequence;
  if (!sequence_path.empty()) {
    sequence = load_sequence(sequence_path);
  } else if (uhrig_n >= 1) {
    eb_pulse_sequence* raw = nullptr;
    check(eb_uhrig_pulse_times(static_cast<unsigned>(uhrig_n), total_time, &raw), "filter");
    sequence.reset(raw);
  } else {
    throw Failure{kUsage, "filter: give --sequence FILE or --uhrig N"};
  }
  if (points < 2) throw Failure{kUsage, "filter: --points must be >= 2"};
  if (!(omega_max > omega_min)) throw Failure{kUsage, "filter: need omega-max > omega-min"};
  std::vector<double> grid;
  if (log_spacing) {
    grid = log_grid(omega_min, omega_max, points);
  } else {
    for (int i = 0; i < points; ++i) grid.push_back(omega_min + (omega_max - omega_min) * i / (points - 1));
  }
  const bool json = format_or(global, "csv") == "json";
  std::string data = json ? "{\"omega\":[" : "omega,abs\n";
  std::vector<double> magnitudes;
  for (double omega : grid) {
    double re = 0.0;
    double im = 0.0;
    check(eb_filter_function(sequence.get(), omega, global.digits, &re, &im), "filter");
    magnitudes.push_back(std::hypot(re, im));
  }
  if (json) {
    data = "{\"omega\":" + json_array(grid) + ",\"abs\":" + json_array(magnitudes) + "}\n";
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) data += fmt(grid[i]) + "," + fmt(magnitudes[i]) + "\n";
  }
  emit(global, data);
  return kOk;
}

// ---------------------------------------------------------------- sum / scan

ExpSumPtr build_sum(const std::string& family, int n, double b, const std::string& path) {
  eb_expsum* raw = nullptr;
  if (!path.empty()) {
    const std::string text = read_file(path);
    check(eb_expsum_from_json(text.c_str(), &raw), ("sum file '" + path + "'").c_str());
  } else if (family == "uhrig" || family == "remark25") {
    check(eb_uhrig_sum(static_cast<unsigned>(std::max(n, 0)), &raw), "sum");
  } else if (family == "unit-gap" || family == "remark26") {
    check(eb_unit_gap_sum(static_cast<unsigned>(std::max(n, 0)), &raw), "sum");
  } else if (family == "gap-scaled") {
    check(eb_gap_scaled_sum(b, &raw, nullptr), "sum");
  } else {
    throw Failure{kUsage, "unknown family '" + family + "' (uhrig, unit-gap, gap-scaled)"};
  }
  return ExpSumPtr(raw);
}

int run_sum(const GlobalOptions& global, const std::string& family, int n, double b) {
  ExpSumPtr sum = build_sum(family, n, b, "");
  if (format_or(global, "json") == "json") {
    char* text = nullptr;
    check(eb_expsum_to_json(sum.get(), &text), "sum");
    OwnedString owned(text);
    emit(global, std::string(text) + "\n");
    return kOk;
  }
  const std::size_t size = eb_expsum_size(sum.get());
  std::vector<double> cre(size), cim(size), ere(size), eim(size);
  check(eb_expsum_terms(sum.get(), cre.data(), cim.data(), ere.data(), eim.data(), size), "sum");
  std::string data = "exponent,coefficient_re,coefficient_im\n";
  for (std::size_t j = 0; j < size; ++j) data += fmt(ere[j]) + "," + fmt(cre[j]) + "," + fmt(cim[j]) + "\n";
  emit(global, data);
  return kOk;
}

int run_scan(const GlobalOptions& global, const std::string& family, int n, double b, const std::string& path,
             double from, double to, int points) {
  ExpSumPtr sum = build_sum(family, n, b, path);
  if (points < 2 || !(to > from)) throw Failure{kUsage, "scan: need --points >= 2 and --to > --from"};
  std::string data = "t,re,im,abs\n";
  for (int i = 0; i < points; ++i) {
    const double t = i + 1 == points ? to : from + (to - from) * i / (points - 1);
    double re = 0.0;
    double im = 0.0;
    check(eb_evaluate(sum.get(), t, global.digits, &re, &im), "scan");
    data += fmt(t) + "," + fmt(re) + "," + fmt(im) + "," + fmt(std::hypot(re, im)) + "\n";
  }
  emit(global, data);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential sums with gap conditions: constructions, norms, envelopes, and dephasing integrals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eb_version()));

  GlobalOptions global;
  double tol_value = 0.0;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", global.out, "Write data to PATH instead of stdout");
  app.add_option("--digits", global.digits, "Working precision in decimal digits (0 = double)");
  auto* tol_option = app.add_option("--tol", tol_value, "Tolerance (relative for verify-multiplicity, absolute for chi)");

  int n = -1;
  double total_time = 1.0;
  auto* uhrig = app.add_subcommand("uhrig", "Uhrig pulse times t_j = T sin^2(j pi/(2n+2))");
  uhrig->add_option("--n", n, "Number of pulses")->required();
  uhrig->add_option("--T", total_time, "Total time");

  int verify_n = -1;
  auto* verify = app.add_subcommand("verify-multiplicity", "Vanishing order at 0 of the Uhrig-timed sum");
  verify->add_option("--n", verify_n, "Even order n >= 2")->required();

  std::string family;
  std::vector<std::string> a_grid_text;
  double a_min = 0.0;
  double a_max = 0.0;
  int a_count = 0;
  std::string fit_path;
  auto* bounds = app.add_subcommand("bounds-scan", "Sup norms of the constructions against their envelopes");
  bounds->add_option("--family", family, "remark25 (Taylor envelope) or remark26 (Stirling envelope)")->required();
  bounds->add_option("--a-grid", a_grid_text, "Comma-separated a values (fractions like 1/9 allowed)");
  bounds->add_option("--a-min", a_min, "Log-spaced grid lower end");
  bounds->add_option("--a-max", a_max, "Log-spaced grid upper end");
  bounds->add_option("--count", a_count, "Log-spaced grid size");
  bounds->add_option("--fit", fit_path, "Write the fit summary JSON here");

  std::string sequence_path;
  std::string density_path;
  auto* chi = app.add_subcommand("chi", "Decay factor chi for a pulse sequence and spectral density");
  chi->add_option("--sequence", sequence_path, "Pulse sequence JSON")->required();
  chi->add_option("--density", density_path, "Spectral density JSON")->required();

  std::vector<std::string> b_grid_text;
  std::string policy = "half";
  auto* l1 = app.add_subcommand("l1-scan", "L1 norms and implied constants of the gap-scaled family");
  l1->add_option("--b-grid", b_grid_text, "Comma-separated b values in (0, 3]")->required();
  l1->add_option("--policy", policy, "Interval: half = [-b/18, b/18], full = [-b/9, b/9]");

  int filter_uhrig = 0;
  double omega_min = 0.0;
  double omega_max = 10.0;
  int omega_points = 101;
  bool omega_log = false;
  auto* filter = app.add_subcommand("filter", "|f(omega)| of a pulse sequence over a frequency grid");
  filter->add_option("--sequence", sequence_path, "Pulse sequence JSON");
  filter->add_option("--uhrig", filter_uhrig, "Use the Uhrig sequence with N pulses");
  filter->add_option("--T", total_time, "Total time for --uhrig");
  filter->add_option("--omega-min", omega_min, "Lowest frequency");
  filter->add_option("--omega-max", omega_max, "Highest frequency");
  filter->add_option("--points", omega_points, "Number of frequencies");
  filter->add_flag("--log", omega_log, "Log-spaced frequencies");

  std::string sum_family;
  int sum_n = 2;
  double sum_b = 1.0;
  auto* sum = app.add_subcommand("sum", "Emit a constructed exponential sum");
  sum->add_option("--family", sum_family, "uhrig, unit-gap, or gap-scaled")->required();
  sum->add_option("--n", sum_n, "Even order for uhrig/unit-gap");
  sum->add_option("--b", sum_b, "b in (0, 3] for gap-scaled");

  std::string sum_path;
  double t_from = -1.0;
  double t_to = 1.0;
  int t_points = 101;
  auto* scan = app.add_subcommand("scan", "Tabulate g(t) as t,re,im,abs");
  scan->add_option("--sum", sum_path, "Exponential sum JSON");
  scan->add_option("--family", sum_family, "Constructed family instead of a file");
  scan->add_option("--n", sum_n, "Even order for uhrig/unit-gap");
  scan->add_option("--b", sum_b, "b for gap-scaled");
  scan->add_option("--from", t_from, "First t");
  scan->add_option("--to", t_to, "Last t");
  scan->add_option("--points", t_points, "Number of samples");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (tol_option->count() > 0) global.tol = tol_value;

  try {
    if (*uhrig) return run_uhrig(global, n, total_time);
    if (*verify) return run_verify(global, verify_n);
    if (*bounds) {
      std::vector<double> grid = parse_list(a_grid_text);
      if (grid.empty() && a_count > 0) grid = log_grid(a_min, a_max, a_count);
      return run_bounds_scan(global, family, grid, fit_path);
    }
    if (*chi) return run_chi(global, sequence_path, density_path);
    if (*l1) return run_l1_scan(global, parse_list(b_grid_text), policy);
    if (*filter) {
      return run_filter(global, sequence_path, filter_uhrig, total_time, omega_min, omega_max, omega_points,
                        omega_log);
    }
    if (*sum) return run_sum(global, sum_family, sum_n, sum_b);
    if (*scan) return run_scan(global, sum_family, sum_n, sum_b, sum_path, t_from, t_to, t_points);
  } catch (const Failure& failure) {
    std::cerr << "error: " << failure.message << "\n";
    return failure.code;
  }
  return kUsage;
}
