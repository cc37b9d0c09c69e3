#ifndef SYNINFO_EXPERIMENTS_HPP
#define SYNINFO_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "syninfo/srv_search.hpp"
#include "syninfo/stats.hpp"

namespace syninfo::experiments {

/// One SRV-search trial on a randomly generated Pr(X1, X2, Y).
struct SrvTrial {
  std::uint64_t trial = 0;
  bool succeeded = false;
  double relative_error = 0.0;  // infinite when I(S:X) ~ 0
  double mi_with_x = 0.0;
  double upper_bound = 0.0;
  double efficiency = 0.0;  // mi_with_x / upper_bound
};

/// Aggregate per state count. `q25/median/q75` summarize the relative
/// error among successes for the success-rate experiment, and the
/// efficiency ratio among successes for the efficiency experiment.
struct SrvExperimentRow {
  std::size_t states = 0;
  std::size_t trials = 0;
  double success_rate = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
};

struct SrvExperimentReport {
  std::string name;  // "fig2" or "fig3"
  std::size_t trials = 0;
  std::vector<std::size_t> states;
  std::uint64_t seed = 0;
  SearchConfig search;
  std::vector<SrvExperimentRow> rows;
  std::vector<std::vector<SrvTrial>> per_state_trials;
  double runtime_seconds = 0.0;

  std::string to_json_string(int indent = -1) const;
  std::string to_csv() const;
};

/// Success rate and accuracy of finding a single SRV as a function of
/// the state count (CSV: states,trials,success_rate,err_q25,err_median,
/// err_q75).
SrvExperimentReport run_fig2(std::size_t trials,
                             const std::vector<std::size_t>& states,
                             std::uint64_t seed, const SearchConfig& search);

/// Efficiency I(S:X) / upper bound of a single found SRV (CSV: states,
/// trials,success_rate,ratio_q25,ratio_median,ratio_q75).
SrvExperimentReport run_fig3(std::size_t trials,
                             const std::vector<std::size_t>& states,
                             std::uint64_t seed, const SearchConfig& search);

struct Fig4Arm {
  std::string perturbation;  // "local" or "nonlocal"
  std::string relation;      // "random" or "srv"
  std::size_t trials = 0;    // usable samples
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  std::vector<double> impacts;
};

struct Fig4Report {
  std::size_t trials = 0;
  double norm = 0.0;
  std::size_t states = 0;
  std::uint64_t seed = 0;
  SearchConfig search;
  std::vector<Fig4Arm> arms;  // random/srv x local/nonlocal
  stats::MoodTestResult local_test;     // random vs SRV, local arm
  stats::MoodTestResult nonlocal_test;  // random vs SRV, non-local arm
  double runtime_seconds = 0.0;

  std::string to_json_string(int indent = -1) const;
  std::string to_csv() const;
};

/// Perturbation resilience: relative change of I(X1,X2 : Y) under local
/// and non-local perturbations, for randomly generated Y versus Y
/// constrained to be an SRV of the inputs (CSV: perturbation,relation,
/// trials,impact_q25,impact_median,impact_q75,chi_square,p_value).
Fig4Report run_fig4(std::size_t trials, double norm, std::size_t states,
                    std::uint64_t seed, const SearchConfig& search);

}  // namespace syninfo::experiments

#endif  // SYNINFO_EXPERIMENTS_HPP
