// Acceptance suite: one line per criterion, hard pass/fail, exit 1 on
// any failure. Never compiled out in Release.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "syninfo/decomposition.hpp"
#include "syninfo/experiments.hpp"
#include "syninfo/oracle.hpp"
#include "syninfo/synergy.hpp"

using namespace syninfo;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

JointPmf xor_triple() {
  const auto bits = JointPmf::uniform({2, 2});
  std::vector<std::size_t> map(4);
  for (std::size_t i = 0; i < 4; ++i) map[i] = (i >> 1) ^ (i & 1);
  return bits.append_deterministic(map, 2);
}

// 1. XOR ground truth: the introductory gate-table quantities plus the
//    numerical synergy estimate, within a minute.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pmf = xor_triple();
  const double mi_1 = mutual_info(pmf, {0}, {2});
  const double mi_2 = mutual_info(pmf, {1}, {2});
  const double mi_12 = mutual_info(pmf, {0, 1}, {2});
  SearchConfig cfg;
  cfg.seed = 20240001;
  const auto est = estimate_synergy(pmf, {0, 1}, {2}, cfg);
  const double secs = seconds_since(t0);
  const bool ok = mi_1 <= 1e-12 && mi_2 <= 1e-12 &&
                  std::abs(mi_12 - 1.0) <= 1e-12 &&
                  std::abs(est.mid - 1.0) <= 0.05 && secs < 60.0;
  report(1, ok,
         "xor gate: I(X1:Y)=" + fmt(mi_1) + " I(X2:Y)=" + fmt(mi_2) +
             " I(X1,X2:Y)=" + fmt(mi_12) + " I_syn mid=" + fmt(est.mid) +
             " (" + fmt(secs) + "s)");
}

// 2. The SRV information bound on random two-input distributions, and
//    its exact value for uniform bits.
void criterion_2() {
  const double exact = srv_upper_bound(JointPmf::uniform({2, 2}), {0, 1});
  std::size_t checked = 0;
  double worst = -1.0;
  SearchConfig cfg;
  for (int s = 0; s < 100; ++s) {
    const std::size_t m = s < 50 ? 2 : 3;
    const auto pmf = JointPmf::random({m, m}, 910000 + s);
    cfg.seed = 910000 + s;
    cfg.srv_cardinality = m;
    const auto res = find_srv(pmf, {0, 1}, cfg);
    if (!res.succeeded) continue;
    ++checked;
    worst = std::max(worst, res.mi_with_x - srv_upper_bound(pmf, {0, 1}));
  }
  const bool ok = exact == 1.0 && worst <= 0.02 && checked > 0;
  report(2, ok,
         "bound: uniform-bits bound=" + fmt(exact) + ", " +
             std::to_string(checked) + "/100 succeeded, worst excess=" +
             fmt(worst) + " (limit 0.02)");
}

// 3. The mod-3 worked example, via exhaustive enumeration.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pmf = JointPmf::uniform({3, 3});
  const auto srvs = oracle::enumerate_srvs(pmf, {0, 1}, 3, 1e-12);
  const double target = std::log2(3.0);
  std::vector<std::vector<std::size_t>> full;
  for (const auto& srv : srvs) {
    if (std::abs(srv.mi_with_x - target) <= 1e-12) full.push_back(srv.map);
  }
  bool ok = full.size() == 2;
  double mi_s1s2 = -1.0, mi_x1 = -1.0, mi_x2 = -1.0;
  if (ok) {
    auto with = pmf;
    for (const auto& m : full) {
      std::vector<std::size_t> lifted(with.size());
      for (std::size_t i = 0; i < with.size(); ++i) {
        lifted[i] = m[with.sub_index(i, {0, 1})];
      }
      with = with.append_deterministic(lifted, 3);
    }
    mi_s1s2 = mutual_info(with, {2}, {3});
    mi_x1 = mutual_info(with, {2, 3}, {0});
    mi_x2 = mutual_info(with, {2, 3}, {1});
    ok = mi_s1s2 <= 1e-12 && std::abs(mi_x1 - target) <= 1e-12 &&
         std::abs(mi_x2 - target) <= 1e-12;
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  report(3, ok,
         "mod-3: " + std::to_string(full.size()) +
             " full-information classes, I(S1:S2)=" + fmt(mi_s1s2) +
             " I(S1,S2:X1)=" + fmt(mi_x1) + " I(S1,S2:X2)=" + fmt(mi_x2) +
             " (" + fmt(secs) + "s)");
}

// 4. The three-bit census and the identity-target synergy of 3 bits.
void criterion_4() {
  const auto census = oracle::three_bit_msrv_census();
  SearchConfig cfg;
  cfg.seed = 20240004;
  const auto bits = JointPmf::uniform({2, 2, 2});
  const auto est = estimate_synergy(bits, {0, 1, 2}, {0, 1, 2}, cfg);
  const bool ok = census.found_three_xors &&
                  census.max_pairwise_mi_selected <= 1e-12 &&
                  census.h_third_xor_given_two <= 1e-12 &&
                  std::abs(census.entropy_three_xors - 2.0) <= 1e-12 &&
                  std::abs(est.mid - 3.0) <= 0.15;
  report(4, ok,
         "census: pairwise-max=" + fmt(census.max_pairwise_mi_selected) +
             " H(3 xors)=" + fmt(census.entropy_three_xors) +
             " H(third|two)=" + fmt(census.h_third_xor_given_two) +
             " I_syn(X->X)=" + fmt(est.mid));
}

// 5 + 6. Basic-property suite and the no-overcount inequality on the
//        same 30 random instances.
void criteria_5_and_6() {
  SearchConfig cfg;
  bool props_ok = true;
  bool overcount_ok = true;
  std::string fail_note;
  double worst_overcount = -1.0;
  for (int s = 0; s < 30; ++s) {
    const std::size_t m = s < 15 ? 2 : 3;
    const auto pmf = JointPmf::random({m, m, m}, 520000 + s);
    cfg.seed = 520000 + s;
    cfg.srv_cardinality = m;

    const auto seq = maximize_ordering(pmf, {0, 1}, {2}, cfg);
    const auto est = synergy_terms(seq.base_pmf, {2}, seq);

    if (est.mid < -1e-9) {
      props_ok = false;
      fail_note += " negativity@" + std::to_string(s);
    }
    if (est.mid > mutual_info(pmf, {0, 1}, {2}) + 0.05) {
      props_ok = false;
      fail_note += " cap@" + std::to_string(s);
    }

    // Reorder invariance: swap the two inputs.
    std::vector<double> swapped(pmf.size());
    for (std::size_t x1 = 0; x1 < m; ++x1) {
      for (std::size_t x2 = 0; x2 < m; ++x2) {
        for (std::size_t y = 0; y < m; ++y) {
          swapped[(x2 * m + x1) * m + y] = pmf.probs()[(x1 * m + x2) * m + y];
        }
      }
    }
    const auto est_swapped =
        estimate_synergy(JointPmf({m, m, m}, swapped), {0, 1}, {2}, cfg);
    if (std::abs(est_swapped.mid - est.mid) > 0.05) {
      props_ok = false;
      fail_note += " reorder@" + std::to_string(s);
    }

    // Zero synergy in a single variable (target = X1).
    const auto est_xi = estimate_synergy(pmf, {0, 1}, {0}, cfg);
    if (est_xi.mid > 0.03) {
      props_ok = false;
      fail_note += " target-xi@" + std::to_string(s);
    }

    // Zero synergy about a single variable: exact zero, empty sequence.
    const auto est_single = estimate_synergy(pmf, {0}, {2}, cfg);
    if (est_single.mid != 0.0 || !est_single.per_srv_terms.empty()) {
      props_ok = false;
      fail_note += " single-input@" + std::to_string(s);
    }

    // No-overcount on the found sequence.
    if (!seq.srv_vars.empty()) {
      double sum = 0.0;
      for (std::size_t v : seq.srv_vars) {
        sum += mutual_info(seq.base_pmf, {v}, {2});
      }
      const double joint = mutual_info(seq.base_pmf, seq.srv_vars, {2});
      worst_overcount = std::max(worst_overcount, sum - joint);
      if (sum > joint + 1e-9) {
        overcount_ok = false;
        fail_note += " overcount@" + std::to_string(s);
      }
    }
  }
  report(5, props_ok,
         "property suite on 30 random instances (m=2,3)" +
             (fail_note.empty() ? std::string() : ":" + fail_note));
  report(6, overcount_ok,
         "no-overcount: worst sum-minus-joint=" + fmt(worst_overcount) +
             " (limit 1e-9)");
}

// 7. Binary impossibility (closed form and numeric) plus the exactly
//    decomposable shared-bit fixture.
void criterion_7() {
  bool ok = true;
  std::string note;
  for (double p_b : {0.6, 0.8}) {
    const auto scan = binary_impossibility_scan(0.5, p_b, 21);
    if (scan.max_line_mi_perp_b > 1e-12) {
      ok = false;
      note += " line@" + fmt(p_b);
    }
    DecompositionConfig cfg;
    cfg.seed = 7007;
    const auto res = decompose(binary_pair_pmf(0.5, p_b), {1}, {0}, cfg);
    if (res.converged) {
      ok = false;
      note += " converged@" + fmt(p_b);
    }
  }
  DecompositionConfig cfg;
  cfg.perp_cardinality = 2;
  cfg.par_cardinality = 2;
  cfg.seed = 7008;
  const auto fixture = JointPmf::uniform({2, 2, 2});
  const auto res = decompose(fixture, {0, 2}, {0, 1}, cfg);
  if (!res.converged || res.residuals.max_residual() > 1e-3) {
    ok = false;
    note += " fixture-max=" + fmt(res.residuals.max_residual());
  }
  report(7, ok,
         "binary impossibility + shared-bit fixture (max residual=" +
             fmt(res.residuals.max_residual()) + ")" + note);
}

// 8. Wyner implication on constructed fixtures meeting the premises.
void criterion_8() {
  bool ok = true;
  std::string note;

  // Shared uniform bit.
  {
    const auto pmf = JointPmf::uniform({2, 2, 2});
    const auto rep = wyner_condition_check(pmf, {0, 1}, {0, 2}, {0});
    if (!rep.applicable || !rep.conclusions_hold) {
      ok = false;
      note += " uniform-bit";
    }
  }
  // Non-uniform shared three-valued W with differing side cardinalities.
  {
    auto w = JointPmf({3}, {0.5, 0.2, 0.3});
    ConditionalPmf x;
    x.given_cardinalities = {3};
    x.target_cardinalities = {2};
    x.table = {0.7, 0.3, 0.7, 0.3, 0.7, 0.3};  // X independent of W
    auto pmf = w.append_variable(x);
    ConditionalPmf y;
    y.given_cardinalities = {3, 2};
    y.target_cardinalities = {4};
    y.table.assign(6 * 4, 0.25);  // Y independent of (W, X)
    pmf = pmf.append_variable(y);
    const auto rep = wyner_condition_check(pmf, {0, 1}, {0, 2}, {0});
    if (!rep.applicable || !rep.conclusions_hold) {
      ok = false;
      note += " nonuniform-w";
    }
  }
  // W a deterministic relabeling of the shared part.
  {
    auto pmf = JointPmf::uniform({2, 2, 2});
    std::vector<std::size_t> copy_w(8);
    for (std::size_t i = 0; i < 8; ++i) copy_w[i] = 1 - ((i >> 2) & 1);
    pmf = pmf.append_deterministic(copy_w, 2);  // var 3 = relabeled W
    const auto rep = wyner_condition_check(pmf, {0, 1}, {0, 2}, {3});
    if (!rep.applicable || !rep.conclusions_hold) {
      ok = false;
      note += " relabeled-w";
    }
  }
  report(8, ok, "wyner implication on three exact fixtures" + note);
}

// 9. Success-rate and efficiency trends at desk scale.
void criterion_9() {
  SearchConfig cfg;
  const std::vector<std::size_t> states{2, 3, 4};
  const auto f2 = experiments::run_fig2(30, states, 92001, cfg);
  const auto f3 = experiments::run_fig3(30, states, 92001, cfg);
  bool ok = f2.rows[0].success_rate < f2.rows[2].success_rate;
  std::string note = "success(2)=" + fmt(f2.rows[0].success_rate) +
                     " success(4)=" + fmt(f2.rows[2].success_rate);
  double max_ratio = 0.0;
  for (const auto& list : f3.per_state_trials) {
    for (const auto& t : list) {
      if (t.succeeded) max_ratio = std::max(max_ratio, t.efficiency);
    }
  }
  if (max_ratio > 1.02) ok = false;
  if (!(f3.rows[2].median <= f3.rows[0].median + 1e-12)) ok = false;
  note += " max-ratio=" + fmt(max_ratio) +
          " ratio-median(2)=" + fmt(f3.rows[0].median) +
          " ratio-median(4)=" + fmt(f3.rows[2].median);
  report(9, ok, "desk-scale trends: " + note);
}

// 10. Perturbation-resilience direction with Mood's test.
void criterion_10() {
  SearchConfig cfg;
  const auto rep = experiments::run_fig4(60, 0.1, 3, 92010, cfg);
  const auto& random_local = rep.arms[0];
  const auto& srv_local = rep.arms[1];
  const auto& random_nonlocal = rep.arms[2];
  const auto& srv_nonlocal = rep.arms[3];
  const bool ok = srv_local.median < random_local.median &&
                  rep.local_test.p_value < 0.01 &&
                  srv_nonlocal.median < random_nonlocal.median;
  report(10, ok,
         "resilience: local medians srv=" + fmt(srv_local.median) +
             " random=" + fmt(random_local.median) +
             " p=" + fmt(rep.local_test.p_value) +
             "; nonlocal srv=" + fmt(srv_nonlocal.median) +
             " random=" + fmt(random_nonlocal.median));
}

// 11. The chi-square oracle for Mood's test.
void criterion_11() {
  std::vector<double> a, b;
  for (int i = 0; i < 30; ++i) a.push_back(10.0 + i * 1e-3);
  for (int i = 0; i < 20; ++i) a.push_back(-10.0 - i * 1e-3);
  for (int i = 0; i < 20; ++i) b.push_back(10.0 + i * 1e-3);
  for (int i = 0; i < 30; ++i) b.push_back(-10.0 - i * 1e-3);
  const auto res = stats::mood_median_test(a, b);
  const double independent_p = std::erfc(std::sqrt(0.5 * res.chi_square));
  const bool ok = std::abs(res.chi_square - 4.0) <= 1e-9 &&
                  std::abs(res.p_value - independent_p) <= 1e-4 &&
                  std::abs(res.p_value - 0.0455) <= 1e-3;
  report(11, ok,
         "mood {30,20;20,30}: chi2=" + fmt(res.chi_square) +
             " p=" + fmt(res.p_value) + " (erfc route " + fmt(independent_p) +
             ")");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criteria_5_and_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d/11 criteria passed (%.1fs total)\n", 11 - g_failures,
              seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
