#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "syninfo/stats.hpp"

using namespace syninfo::stats;

namespace {

/// Independent route to the 1-dof chi-square survival function:
/// P(X > x) = erfc(sqrt(x/2)) for X ~ chi2(1).
double survival_1dof_erfc(double x) { return std::erfc(std::sqrt(0.5 * x)); }

}  // namespace

TEST_CASE("chi-square survival against the erfc route") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 4.0, 10.0, 25.0}) {
    CHECK(std::abs(chi_square_survival(x, 1) - survival_1dof_erfc(x)) <= 1e-12);
  }
  CHECK(chi_square_survival(0.0, 1) == 1.0);
  CHECK_THROWS_AS(chi_square_survival(1.0, 0), std::invalid_argument);
}

TEST_CASE("mood test on identical samples") {
  std::vector<double> a(100), b(100);
  for (int i = 0; i < 100; ++i) a[i] = b[i] = static_cast<double>(i);
  const auto res = mood_median_test(a, b);
  CHECK(res.chi_square == doctest::Approx(0.0));
  CHECK(res.p_value > 0.99);
}

TEST_CASE("mood test on fully separated samples") {
  // Hand-computed table {100,0;0,100}: every expected count is 50, so
  // chi-square = 4 * 50^2/50 = 200.
  std::vector<double> a(100), b(100);
  for (int i = 0; i < 100; ++i) {
    a[i] = static_cast<double>(i);
    b[i] = 1000.0 + i;
  }
  const auto res = mood_median_test(a, b);
  CHECK(res.chi_square == doctest::Approx(200.0).epsilon(1e-12));
  CHECK(res.p_value < 1e-15);
  CHECK(res.below_a == 100);
  CHECK(res.above_b == 100);
}

TEST_CASE("mood test on the 30/20 contingency") {
  // Construct samples realizing the table {30,20;20,30}: pooled median
  // must sit between the two halves.
  std::vector<double> a, b;
  for (int i = 0; i < 30; ++i) a.push_back(10.0 + i * 1e-3);  // above
  for (int i = 0; i < 20; ++i) a.push_back(-10.0 - i * 1e-3); // below
  for (int i = 0; i < 20; ++i) b.push_back(10.0 + i * 1e-3);
  for (int i = 0; i < 30; ++i) b.push_back(-10.0 - i * 1e-3);
  const auto res = mood_median_test(a, b);
  CHECK(res.chi_square == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(res.p_value - survival_1dof_erfc(4.0)) <= 1e-12);
  CHECK(res.p_value == doctest::Approx(0.0455).epsilon(0.01));
}

TEST_CASE("mood test degenerates on constant data") {
  std::vector<double> a(10, 1.0), b(10, 1.0);
  const auto res = mood_median_test(a, b);
  CHECK(res.degenerate);
  CHECK(res.p_value == 1.0);
  CHECK_THROWS_AS(mood_median_test({}, a), std::invalid_argument);
}

TEST_CASE("quantile interpolation") {
  const std::vector<double> v{4.0, 1.0, 3.0, 2.0};
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 4.0);
  CHECK(quantile(v, 0.5) == doctest::Approx(2.5));
  CHECK(quantile(v, 0.25) == doctest::Approx(1.75));
}
