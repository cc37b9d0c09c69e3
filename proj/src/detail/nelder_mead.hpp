#ifndef SYNINFO_DETAIL_NELDER_MEAD_HPP
#define SYNINFO_DETAIL_NELDER_MEAD_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

namespace syninfo::detail {

struct NmResult {
  std::vector<double> x;
  double fval = 0.0;
  std::size_t iterations = 0;
};

/// Nelder-Mead simplex minimization over the unit box [0,1]^d.
/// Candidate points are clipped into the box before evaluation, so the
/// simplex can settle exactly on faces and corners.
inline NmResult nelder_mead_box01(
    const std::function<double(std::span<const double>)>& f,
    std::vector<double> x0, double init_step, std::size_t max_iters,
    double ftol = 1e-12, double xtol = 1e-10) {
  const std::size_t d = x0.size();
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  auto clip = [](std::vector<double>& p) {
    for (double& v : p) v = std::min(1.0, std::max(0.0, v));
  };

  clip(x0);
  std::vector<std::vector<double>> pts(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) {
    double step = init_step;
    if (x0[i] + step > 1.0) step = -init_step;
    pts[i + 1][i] += step;
    clip(pts[i + 1]);
  }
  std::vector<double> fv(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fv[i] = f(pts[i]);

  std::vector<std::size_t> order(d + 1);
  std::vector<double> centroid(d), cand(d);
  std::size_t iter = 0;
  for (; iter < max_iters; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[d];
    const std::size_t second_worst = order[d - 1];

    double fspread = fv[worst] - fv[best];
    double xspread = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double lo = pts[best][i], hi = pts[best][i];
      for (std::size_t k = 0; k <= d; ++k) {
        lo = std::min(lo, pts[k][i]);
        hi = std::max(hi, pts[k][i]);
      }
      xspread = std::max(xspread, hi - lo);
    }
    if (fspread < ftol && xspread < xtol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= d; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < d; ++i) centroid[i] += pts[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    auto move = [&](double coeff) {
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = centroid[i] + coeff * (centroid[i] - pts[worst][i]);
      }
      clip(cand);
      return f(cand);
    };

    const double fr = move(kReflect);
    if (fr < fv[best]) {
      std::vector<double> reflected = cand;
      const double fe = move(kExpand);
      if (fe < fr) {
        pts[worst] = cand;
        fv[worst] = fe;
      } else {
        pts[worst] = std::move(reflected);
        fv[worst] = fr;
      }
    } else if (fr < fv[second_worst]) {
      pts[worst] = cand;
      fv[worst] = fr;
    } else {
      const double fc = move(fr < fv[worst] ? kContract : -kContract);
      if (fc < std::min(fr, fv[worst])) {
        pts[worst] = cand;
        fv[worst] = fc;
      } else {
        for (std::size_t k = 0; k <= d; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < d; ++i) {
            pts[k][i] = pts[best][i] + kShrink * (pts[k][i] - pts[best][i]);
          }
          clip(pts[k]);
          fv[k] = f(pts[k]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    if (fv[k] < fv[best]) best = k;
  }
  return {pts[best], fv[best], iter};
}

}  // namespace syninfo::detail

#endif  // SYNINFO_DETAIL_NELDER_MEAD_HPP
