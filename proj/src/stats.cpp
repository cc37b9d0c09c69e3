#include "syninfo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace syninfo::stats {

namespace {

// Series expansion of the lower regularized gamma P(a, x), valid for
// x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for the upper regularized gamma
// Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::invalid_argument("regularized_gamma_q: need a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_survival(double x, std::size_t dof) {
  if (dof == 0) {
    throw std::invalid_argument("chi_square_survival: dof must be >= 1");
  }
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * static_cast<double>(dof), 0.5 * x);
}

MoodTestResult mood_median_test(std::span<const double> a,
                                std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("mood_median_test: samples must be non-empty");
  }
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  const std::size_t n = pooled.size();
  const double median = n % 2 == 1
                            ? pooled[n / 2]
                            : 0.5 * (pooled[n / 2 - 1] + pooled[n / 2]);

  MoodTestResult res;
  for (double v : a) {
    if (v > median) ++res.above_a;
    if (v < median) ++res.below_a;
  }
  for (double v : b) {
    if (v > median) ++res.above_b;
    if (v < median) ++res.below_b;
  }

  const double row_a = static_cast<double>(res.above_a + res.below_a);
  const double row_b = static_cast<double>(res.above_b + res.below_b);
  const double col_above = static_cast<double>(res.above_a + res.above_b);
  const double col_below = static_cast<double>(res.below_a + res.below_b);
  const double total = row_a + row_b;
  if (row_a == 0.0 || row_b == 0.0 || col_above == 0.0 || col_below == 0.0) {
    res.degenerate = true;
    res.chi_square = 0.0;
    res.p_value = 1.0;
    return res;
  }

  const double observed[4] = {
      static_cast<double>(res.above_a), static_cast<double>(res.below_a),
      static_cast<double>(res.above_b), static_cast<double>(res.below_b)};
  const double expected[4] = {row_a * col_above / total,
                              row_a * col_below / total,
                              row_b * col_above / total,
                              row_b * col_below / total};
  double chi2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = observed[i] - expected[i];
    chi2 += d * d / expected[i];
  }
  res.chi_square = chi2;
  res.p_value = chi_square_survival(chi2, 1);
  return res;
}

std::string MoodTestResult::to_json_string(int indent) const {
  nlohmann::json j{{"chi_square", chi_square}, {"p_value", p_value},
                   {"above_a", above_a},       {"below_a", below_a},
                   {"above_b", above_b},       {"below_b", below_b},
                   {"degenerate", degenerate}};
  return j.dump(indent);
}

double quantile(std::span<const double> sample, double q) {
  if (sample.empty()) {
    throw std::invalid_argument("quantile: empty sample");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("quantile: q must lie in [0,1]");
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace syninfo::stats
