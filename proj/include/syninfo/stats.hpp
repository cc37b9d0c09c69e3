#ifndef SYNINFO_STATS_HPP
#define SYNINFO_STATS_HPP

#include <cstddef>
#include <span>
#include <string>

namespace syninfo::stats {

/// Upper-tail regularized incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

/// Survival function of the chi-square distribution.
double chi_square_survival(double x, std::size_t dof);

struct MoodTestResult {
  double chi_square = 0.0;
  double p_value = 1.0;
  // 2x2 contingency of counts strictly above / strictly below the pooled
  // median; ties at the median are excluded.
  std::size_t above_a = 0;
  std::size_t below_a = 0;
  std::size_t above_b = 0;
  std::size_t below_b = 0;
  /// Set when the contingency table is unusable (an expected count of
  /// zero, e.g. all values tie at the median); p_value is then 1.
  bool degenerate = false;

  std::string to_json_string(int indent = -1) const;
};

/// Mood's median test: 2x2 contingency of counts above/below the pooled
/// median, plain chi-square with one degree of freedom (no continuity
/// correction), upper-tail p-value.
MoodTestResult mood_median_test(std::span<const double> a,
                                std::span<const double> b);

/// Linear-interpolation quantile of an unsorted sample, q in [0,1].
double quantile(std::span<const double> sample, double q);

}  // namespace syninfo::stats

#endif  // SYNINFO_STATS_HPP
