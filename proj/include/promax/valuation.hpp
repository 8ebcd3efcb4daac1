#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "promax/error.hpp"
#include "promax/format.hpp"
#include "promax/golden_section.hpp"

namespace promax {

enum class ValuationFamily { kUniform01, kNormal };

// A buyer's private-valuation distribution. Prices and valuations live in
// [0, 1]. The normal family keeps its untruncated CDF restricted to that
// domain: mass below 0 behaves as "never buys at a positive price" and mass
// above 1 as "always buys", which is exactly what the adoption arithmetic
// needs.
struct ValuationModel {
  ValuationFamily family = ValuationFamily::kUniform01;
  double mu = 0.0;     // normal family only
  double sigma = 0.0;  // normal family only, > 0

  static ValuationModel uniform01() {
    return {ValuationFamily::kUniform01, 0.0, 0.0};
  }

  static ValuationModel normal(double mu, double sigma) {
    if (!(sigma > 0.0)) {
      throw InputError("ValuationModel::normal: sigma must be > 0");
    }
    return {ValuationFamily::kNormal, mu, sigma};
  }
};

// Normal CDF with no domain restriction. Fitting and K-S evaluation may see
// sample points outside [0, 1]; the price-facing cdf() below does not.
inline double normal_cdf(double mu, double sigma, double x) {
  return 0.5 * (1.0 + std::erf((x - mu) / (sigma * std::numbers::sqrt2)));
}

namespace detail {
inline double cdf_unchecked(const ValuationModel& m, double x) {
  if (m.family == ValuationFamily::kUniform01) return std::clamp(x, 0.0, 1.0);
  return normal_cdf(m.mu, m.sigma, x);
}
}  // namespace detail

// F(x) = Pr[valuation <= x] for a price x in [0, 1].
inline double cdf(const ValuationModel& m, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError("cdf: argument outside [0,1]");
  }
  if (m.family == ValuationFamily::kUniform01) return x;
  return normal_cdf(m.mu, m.sigma, x);
}

// Density on [0, 1].
inline double pdf(const ValuationModel& m, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError("pdf: argument outside [0,1]");
  }
  if (m.family == ValuationFamily::kUniform01) return 1.0;
  const double z = (x - m.mu) / m.sigma;
  return std::exp(-0.5 * z * z) /
         (m.sigma * std::sqrt(2.0 * std::numbers::pi));
}

// Optimal myopic price: the maximizer of p * (1 - F(p)) over [0, 1] -- the
// best posted price for a single influenced buyer. Uniform has the closed
// form 1/2; the normal case is solved numerically (the revenue curve is
// unimodal for a normal valuation).
inline double omp(const ValuationModel& m) {
  if (m.family == ValuationFamily::kUniform01) return 0.5;
  auto revenue = [&m](double p) { return p * (1.0 - cdf(m, p)); };
  return golden_section_max(revenue, 0.0, 1.0, 1e-8).first;
}

// Utility a buyer with valuation `true_valuation` realizes when declaring
// `declared` against a posted price: the sale happens iff declared >= price.
inline double buyer_utility(double declared, double true_valuation,
                            double price) {
  return declared >= price ? true_valuation - price : 0.0;
}

struct ReviewSample {
  double price = 0.0;  // currency units, > 0
  int rating = 0;      // 1..5
};

// price * (1 + rating/5) per sample, then min-max normalized into [0, 1].
inline std::vector<double> transform_reviews(
    const std::vector<ReviewSample>& samples) {
  if (samples.empty()) {
    throw InputError("transform_reviews: empty sample list");
  }
  std::vector<double> raw;
  raw.reserve(samples.size());
  for (const ReviewSample& s : samples) {
    if (!(s.price > 0.0)) {
      throw InputError("transform_reviews: price must be positive");
    }
    if (s.rating < 1 || s.rating > 5) {
      throw InputError("transform_reviews: rating must be in 1..5");
    }
    raw.push_back(s.price * (1.0 + s.rating / 5.0));
  }
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const double min = *lo;
  const double range = *hi - *lo;
  if (!(range > 0.0)) {
    throw InputError(
        "transform_reviews: all transformed values equal, range is "
        "degenerate");
  }
  for (double& v : raw) v = (v - min) / range;
  return raw;
}

// Two-sided sup distance between the empirical CDF of `values` and the model
// CDF: D = max_i max((i+1)/n - F(x_(i)), F(x_(i)) - i/n).
inline double ks_statistic(const std::vector<double>& values,
                           const ValuationModel& model) {
  if (values.empty()) throw InputError("ks_statistic: empty value list");
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = detail::cdf_unchecked(model, sorted[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

struct FitReport {
  double mu_hat = 0.0;
  double sigma_hat = 0.0;
  double ks_statistic = 0.0;
  std::size_t sample_count = 0;
};

// Maximum-likelihood normal fit: mu = sample mean, sigma = root mean squared
// deviation (divisor n), plus the K-S distance against the fitted model.
inline FitReport fit_normal(const std::vector<double>& values) {
  if (values.size() < 2) {
    throw InputError("fit_normal: need at least 2 values");
  }
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double variance = 0.0;
  for (double v : values) variance += (v - mean) * (v - mean);
  variance /= n;
  if (!(variance > 0.0)) {
    throw InputError("fit_normal: zero variance in input values");
  }
  FitReport report;
  report.mu_hat = mean;
  report.sigma_hat = std::sqrt(variance);
  report.sample_count = values.size();
  report.ks_statistic =
      ks_statistic(values, ValuationModel::normal(mean, report.sigma_hat));
  return report;
}

inline std::string format_fit_report(const FitReport& r) {
  std::string out;
  out += "mu_hat=" + format_real(r.mu_hat) + "\n";
  out += "sigma_hat=" + format_real(r.sigma_hat) + "\n";
  out += "ks_statistic=" + format_real(r.ks_statistic) + "\n";
  out += "sample_count=" + std::to_string(r.sample_count) + "\n";
  return out;
}

namespace detail {
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}
}  // namespace detail

// Reviews file: CSV with header "price,rating".
inline std::vector<ReviewSample> load_reviews_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("load_reviews_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw InputError("load_reviews_csv: empty file " + path);
  }
  if (line != "price,rating") {
    throw InputError("load_reviews_csv: expected header \"price,rating\" in " +
                     path);
  }
  std::vector<ReviewSample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 2) {
      throw InputError("load_reviews_csv: line " + std::to_string(line_no) +
                       ": expected 2 fields");
    }
    try {
      samples.push_back(
          ReviewSample{std::stod(fields[0]), std::stoi(fields[1])});
    } catch (const std::exception&) {
      throw InputError("load_reviews_csv: line " + std::to_string(line_no) +
                       ": cannot parse \"" + line + "\"");
    }
  }
  return samples;
}

// Pre-normalized valuations: CSV with header "value", one real per line.
inline std::vector<double> load_values_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("load_values_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw InputError("load_values_csv: empty file " + path);
  }
  if (line != "value") {
    throw InputError("load_values_csv: expected header \"value\" in " + path);
  }
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      values.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw InputError("load_values_csv: line " + std::to_string(line_no) +
                       ": cannot parse \"" + line + "\"");
    }
  }
  return values;
}

}  // namespace promax
