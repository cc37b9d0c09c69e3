#include "syninfo/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "detail/parallel.hpp"
#include "json.hpp"
#include "syninfo/synergy.hpp"

namespace syninfo::experiments {

namespace {

constexpr std::uint64_t kGenTag = 1;
constexpr std::uint64_t kLocalTag = 2;
constexpr std::uint64_t kNonlocalTag = 3;
constexpr std::uint64_t kSrvLocalTag = 4;
constexpr std::uint64_t kSrvNonlocalTag = 5;
constexpr double kNonlocalMarginalTol = 0.01;

void append_csv_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

nlohmann::json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

/// Shared trial runner for the SRV success/efficiency experiments: one
/// random Pr(X1,X2,Y) per trial, one SRV search over (X1,X2).
std::vector<std::vector<SrvTrial>> run_srv_trials(
    std::size_t trials, const std::vector<std::size_t>& states,
    std::uint64_t seed, const SearchConfig& search) {
  std::vector<std::vector<SrvTrial>> out(states.size());
  for (std::size_t si = 0; si < states.size(); ++si) {
    const std::size_t m = states[si];
    if (m < 2) {
      throw std::invalid_argument("experiments: state count must be >= 2");
    }
    out[si].resize(trials);
    detail::parallel_for(trials, [&, si, m](std::size_t t) {
      const std::uint64_t st = subseed(seed, (si << 32) + t);
      const JointPmf pmf =
          JointPmf::random({m, m, m}, subseed(st, kGenTag));
      SearchConfig cfg = search;
      cfg.srv_cardinality = m;
      cfg.seed = st;
      const SrvResult res = find_srv(pmf, {0, 1}, cfg);
      SrvTrial& rec = out[si][t];
      rec.trial = t;
      rec.succeeded = res.succeeded;
      rec.relative_error = res.relative_error;
      rec.mi_with_x = res.mi_with_x;
      rec.upper_bound = srv_upper_bound(pmf, {0, 1});
      rec.efficiency =
          rec.upper_bound > 1e-12 ? rec.mi_with_x / rec.upper_bound : 0.0;
    });
  }
  return out;
}

SrvExperimentReport aggregate_srv_experiment(
    const char* name, bool use_efficiency, std::size_t trials,
    const std::vector<std::size_t>& states, std::uint64_t seed,
    const SearchConfig& search,
    std::vector<std::vector<SrvTrial>> per_state_trials, double runtime) {
  SrvExperimentReport rep;
  rep.name = name;
  rep.trials = trials;
  rep.states = states;
  rep.seed = seed;
  rep.search = search;
  rep.per_state_trials = std::move(per_state_trials);
  rep.runtime_seconds = runtime;
  for (std::size_t si = 0; si < states.size(); ++si) {
    SrvExperimentRow row;
    row.states = states[si];
    row.trials = trials;
    std::vector<double> values;
    std::size_t successes = 0;
    for (const SrvTrial& t : rep.per_state_trials[si]) {
      if (!t.succeeded) continue;
      ++successes;
      values.push_back(use_efficiency ? t.efficiency : t.relative_error);
    }
    row.success_rate =
        trials ? static_cast<double>(successes) / static_cast<double>(trials)
               : 0.0;
    if (!values.empty()) {
      row.q25 = stats::quantile(values, 0.25);
      row.median = stats::quantile(values, 0.5);
      row.q75 = stats::quantile(values, 0.75);
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace

SrvExperimentReport run_fig2(std::size_t trials,
                             const std::vector<std::size_t>& states,
                             std::uint64_t seed, const SearchConfig& search) {
  if (trials == 0) {
    throw std::invalid_argument("run_fig2: trials must be positive");
  }
  const auto start = std::chrono::steady_clock::now();
  auto data = run_srv_trials(trials, states, seed, search);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return aggregate_srv_experiment("fig2", false, trials, states, seed, search,
                                  std::move(data), secs);
}

SrvExperimentReport run_fig3(std::size_t trials,
                             const std::vector<std::size_t>& states,
                             std::uint64_t seed, const SearchConfig& search) {
  if (trials == 0) {
    throw std::invalid_argument("run_fig3: trials must be positive");
  }
  const auto start = std::chrono::steady_clock::now();
  auto data = run_srv_trials(trials, states, seed, search);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return aggregate_srv_experiment("fig3", true, trials, states, seed, search,
                                  std::move(data), secs);
}

std::string SrvExperimentReport::to_json_string(int indent) const {
  nlohmann::json per_state = nlohmann::json::array();
  for (const auto& list : per_state_trials) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SrvTrial& t : list) {
      arr.push_back({{"trial", t.trial},
                     {"succeeded", t.succeeded},
                     {"relative_error", finite_or_null(t.relative_error)},
                     {"mi_with_x", t.mi_with_x},
                     {"upper_bound", t.upper_bound},
                     {"efficiency", t.efficiency}});
    }
    per_state.push_back(arr);
  }
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"states", r.states},
                         {"trials", r.trials},
                         {"success_rate", r.success_rate},
                         {"q25", r.q25},
                         {"median", r.median},
                         {"q75", r.q75}});
  }
  nlohmann::json j{
      {"name", name},
      {"trials", trials},
      {"states", states},
      {"seed", seed},
      {"search", nlohmann::json::parse(search.to_json_string())},
      {"rows", rows_json},
      {"per_state_trials", per_state},
      {"runtime_seconds", runtime_seconds}};
  return j.dump(indent);
}

std::string SrvExperimentReport::to_csv() const {
  const char* metric = name == "fig3" ? "ratio" : "err";
  std::string out = "states,trials,success_rate,";
  out += metric;
  out += "_q25,";
  out += metric;
  out += "_median,";
  out += metric;
  out += "_q75\n";
  for (const auto& r : rows) {
    out += std::to_string(r.states) + "," + std::to_string(r.trials) + ",";
    append_csv_double(out, r.success_rate);
    out += ",";
    append_csv_double(out, r.q25);
    out += ",";
    append_csv_double(out, r.median);
    out += ",";
    append_csv_double(out, r.q75);
    out += "\n";
  }
  return out;
}

Fig4Report run_fig4(std::size_t trials, double norm, std::size_t states,
                    std::uint64_t seed, const SearchConfig& search) {
  if (trials == 0) {
    throw std::invalid_argument("run_fig4: trials must be positive");
  }
  if (norm < 0.0) {
    throw std::invalid_argument("run_fig4: norm must be >= 0");
  }
  if (states < 2) {
    throw std::invalid_argument("run_fig4: states must be >= 2");
  }
  const auto start = std::chrono::steady_clock::now();

  struct TrialImpacts {
    double random_local = -1.0;  // negative marks "unusable"
    double random_nonlocal = -1.0;
    double srv_local = -1.0;
    double srv_nonlocal = -1.0;
  };
  std::vector<TrialImpacts> per_trial(trials);

  const std::size_t m = states;
  detail::parallel_for(trials, [&](std::size_t t) {
    const std::uint64_t st = subseed(seed, t);
    TrialImpacts& rec = per_trial[t];

    // The random relation: Y is the third variable of a random joint.
    const JointPmf pmf = JointPmf::random({m, m, m}, subseed(st, kGenTag));
    // Perturb the same input variable in every arm of this trial.
    const std::size_t var = Rng(subseed(st, 17)).raw() % 2;

    auto impact = [](const JointPmf& before, const JointPmf& after) {
      const Bits i0 = mutual_info(before, {0, 1}, {2});
      if (i0 < 1e-9) return -1.0;
      return std::abs(mutual_info(after, {0, 1}, {2}) - i0) / i0;
    };

    rec.random_local =
        impact(pmf, perturb_local(pmf, var, norm, subseed(st, kLocalTag)).pmf);
    try {
      rec.random_nonlocal =
          impact(pmf, perturb_nonlocal(pmf, 0, 1, norm,
                                       subseed(st, kNonlocalTag),
                                       kNonlocalMarginalTol)
                          .pmf);
    } catch (const ConvergenceError&) {
      // No admissible marginal-preserving direction: drop the sample.
    }

    // The synergistic relation: same inputs, Y constrained to be an SRV.
    SearchConfig cfg = search;
    cfg.srv_cardinality = m;
    cfg.seed = st;
    const JointPmf inputs_only = pmf.marginal({0, 1});
    const SrvResult srv = find_srv(inputs_only, {0, 1}, cfg);
    if (!srv.succeeded) return;
    const JointPmf with_srv = inputs_only.append_variable(srv.cond);
    rec.srv_local = impact(
        with_srv, perturb_local(with_srv, var, norm, subseed(st, kSrvLocalTag)).pmf);
    try {
      rec.srv_nonlocal =
          impact(with_srv, perturb_nonlocal(with_srv, 0, 1, norm,
                                            subseed(st, kSrvNonlocalTag),
                                            kNonlocalMarginalTol)
                               .pmf);
    } catch (const ConvergenceError&) {
    }
  });

  Fig4Report rep;
  rep.trials = trials;
  rep.norm = norm;
  rep.states = states;
  rep.seed = seed;
  rep.search = search;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  rep.runtime_seconds = secs;

  auto collect = [&](const char* pert, const char* rel,
                     auto member) {
    Fig4Arm arm;
    arm.perturbation = pert;
    arm.relation = rel;
    for (const TrialImpacts& rec : per_trial) {
      const double v = rec.*member;
      if (v >= 0.0) arm.impacts.push_back(v);
    }
    arm.trials = arm.impacts.size();
    if (!arm.impacts.empty()) {
      arm.q25 = stats::quantile(arm.impacts, 0.25);
      arm.median = stats::quantile(arm.impacts, 0.5);
      arm.q75 = stats::quantile(arm.impacts, 0.75);
    }
    return arm;
  };
  rep.arms.push_back(collect("local", "random", &TrialImpacts::random_local));
  rep.arms.push_back(collect("local", "srv", &TrialImpacts::srv_local));
  rep.arms.push_back(
      collect("nonlocal", "random", &TrialImpacts::random_nonlocal));
  rep.arms.push_back(collect("nonlocal", "srv", &TrialImpacts::srv_nonlocal));

  auto test_or_degenerate = [](const std::vector<double>& a,
                               const std::vector<double>& b) {
    if (a.empty() || b.empty()) {
      stats::MoodTestResult res;
      res.degenerate = true;
      return res;
    }
    return stats::mood_median_test(a, b);
  };
  rep.local_test = test_or_degenerate(rep.arms[0].impacts, rep.arms[1].impacts);
  rep.nonlocal_test =
      test_or_degenerate(rep.arms[2].impacts, rep.arms[3].impacts);
  return rep;
}

std::string Fig4Report::to_json_string(int indent) const {
  nlohmann::json arms_json = nlohmann::json::array();
  for (const auto& a : arms) {
    arms_json.push_back({{"perturbation", a.perturbation},
                         {"relation", a.relation},
                         {"trials", a.trials},
                         {"q25", a.q25},
                         {"median", a.median},
                         {"q75", a.q75},
                         {"impacts", a.impacts}});
  }
  nlohmann::json j{
      {"name", "fig4"},
      {"trials", trials},
      {"norm", norm},
      {"states", states},
      {"seed", seed},
      {"search", nlohmann::json::parse(search.to_json_string())},
      {"arms", arms_json},
      {"local_test", nlohmann::json::parse(local_test.to_json_string())},
      {"nonlocal_test", nlohmann::json::parse(nonlocal_test.to_json_string())},
      {"runtime_seconds", runtime_seconds}};
  return j.dump(indent);
}

std::string Fig4Report::to_csv() const {
  std::string out =
      "perturbation,relation,trials,impact_q25,impact_median,impact_q75,"
      "chi_square,p_value\n";
  for (const auto& a : arms) {
    const auto& test = a.perturbation == "local" ? local_test : nonlocal_test;
    out += a.perturbation + "," + a.relation + "," + std::to_string(a.trials) +
           ",";
    append_csv_double(out, a.q25);
    out += ",";
    append_csv_double(out, a.median);
    out += ",";
    append_csv_double(out, a.q75);
    out += ",";
    append_csv_double(out, test.chi_square);
    out += ",";
    append_csv_double(out, test.p_value);
    out += "\n";
  }
  return out;
}

}  // namespace syninfo::experiments
