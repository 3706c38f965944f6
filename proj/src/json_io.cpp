#include "expbound/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "expbound/error.hpp"

namespace expbound {

namespace {

using nlohmann::json;

std::string real_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(values[i]);
  }
  out += ']';
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& error) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + error.what());
  }
}

std::vector<double> real_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  const json& node = doc.at(key);
  if (!node.is_array()) throw Error(ErrorCode::Parse, std::string("field \"") + key + "\" must be an array");
  std::vector<double> values;
  values.reserve(node.size());
  for (const json& item : node) {
    if (!item.is_number()) throw Error(ErrorCode::Parse, std::string("field \"") + key + "\" must hold numbers");
    values.push_back(item.get<double>());
  }
  return values;
}

double real_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number()) {
    throw Error(ErrorCode::Parse, std::string("missing numeric field \"") + key + "\"");
  }
  return doc.at(key).get<double>();
}

}  // namespace

std::string format_real(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::Numeric, "cannot serialise a non-finite number");
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string expsum_to_json(const ExpSum& g) {
  std::vector<double> exp_re;
  std::vector<double> exp_im;
  std::vector<double> coef_re;
  std::vector<double> coef_im;
  for (std::size_t j = 0; j < g.size(); ++j) {
    exp_re.push_back(g.exponents()[j].real());
    exp_im.push_back(g.exponents()[j].imag());
    coef_re.push_back(g.coefficients()[j].real());
    coef_im.push_back(g.coefficients()[j].imag());
  }
  std::string out = "{\"exponents\":" + real_array(exp_re);
  out += ",\"coefficients_re\":" + real_array(coef_re);
  out += ",\"coefficients_im\":" + real_array(coef_im);
  if (!g.has_real_exponents()) out += ",\"exponents_im\":" + real_array(exp_im);
  out += '}';
  return out;
}

ExpSum expsum_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "exponential sum JSON must be an object");
  const std::vector<double> exp_re = real_list(doc, "exponents");
  const std::vector<double> coef_re = real_list(doc, "coefficients_re");
  std::vector<double> coef_im = doc.contains("coefficients_im") ? real_list(doc, "coefficients_im")
                                                               : std::vector<double>(coef_re.size());
  std::vector<double> exp_im = doc.contains("exponents_im") ? real_list(doc, "exponents_im")
                                                           : std::vector<double>(exp_re.size());
  if (coef_im.size() != coef_re.size() || exp_im.size() != exp_re.size()) {
    throw Error(ErrorCode::Parse, "real and imaginary arrays differ in length");
  }
  std::vector<Complex> coefficients;
  std::vector<Complex> exponents;
  for (std::size_t j = 0; j < coef_re.size(); ++j) coefficients.emplace_back(coef_re[j], coef_im[j]);
  for (std::size_t j = 0; j < exp_re.size(); ++j) exponents.emplace_back(exp_re[j], exp_im[j]);
  return ExpSum(std::move(coefficients), std::move(exponents));
}

std::string pulse_sequence_to_json(const PulseSequence& sequence) {
  return "{\"times\":" + real_array(sequence.times()) + ",\"T\":" +
         format_real(sequence.total_time()) + "}";
}

PulseSequence pulse_sequence_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "pulse sequence JSON must be an object");
  std::vector<double> times = real_list(doc, "times");
  if (!doc.contains("T")) return PulseSequence(std::move(times));
  const double total = real_field(doc, "T");
  const bool full = !times.empty() && times.front() == 0.0 && times.back() == total;
  if (full) return PulseSequence(std::move(times));
  times.insert(times.begin(), 0.0);
  times.push_back(total);
  return PulseSequence(std::move(times));
}

std::string spectral_density_to_json(const SpectralDensity& density) {
  std::string out = std::string("{\"kind\":\"") + to_string(density.kind()) + "\"";
  out += ",\"amplitude\":" + format_real(density.amplitude());
  out += ",\"cutoff\":" + format_real(density.cutoff());
  if (density.kind() == DensityKind::Tabulated) {
    out += ",\"table\":[";
    for (std::size_t i = 0; i < density.table().size(); ++i) {
      if (i > 0) out += ',';
      out += '[' + format_real(density.table()[i].first) + ',' +
             format_real(density.table()[i].second) + ']';
    }
    out += ']';
  }
  out += '}';
  return out;
}

SpectralDensity spectral_density_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
    throw Error(ErrorCode::Parse, "density JSON needs a string field \"kind\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  const double amplitude = doc.contains("amplitude") ? real_field(doc, "amplitude") : 1.0;
  if (kind == "hard-cutoff-flat") return SpectralDensity::flat(amplitude, real_field(doc, "cutoff"));
  if (kind == "ohmic-exponential") return SpectralDensity::ohmic(amplitude, real_field(doc, "cutoff"));
  if (kind == "tabulated") {
    if (!doc.contains("table") || !doc.at("table").is_array()) {
      throw Error(ErrorCode::Parse, "tabulated density needs a \"table\" array");
    }
    std::vector<std::pair<double, double>> table;
    for (const json& row : doc.at("table")) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
        throw Error(ErrorCode::Parse, "table rows must be [omega, value] pairs");
      }
      table.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return SpectralDensity::tabulated(std::move(table), amplitude);
  }
  throw Error(ErrorCode::Parse, "unknown density kind \"" + kind + "\"");
}

std::string fit_summary_json(const ScanResult& fit) {
  return "{\"c_est\":" + format_real(fit.fit_slope) + ",\"intercept\":" +
         format_real(fit.fit_intercept) + ",\"r2\":" + format_real(fit.r_squared) +
         ",\"n_points\":" + std::to_string(fit.points.size()) + "}";
}

}  // namespace expbound
