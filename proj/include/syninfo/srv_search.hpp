#ifndef SYNINFO_SRV_SEARCH_HPP
#define SYNINFO_SRV_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syninfo/info_measures.hpp"
#include "syninfo/joint_pmf.hpp"

namespace syninfo {

/// Settings for the numerical SRV search.
struct SearchConfig {
  /// State count of the searched variable S; 0 means "match the largest
  /// input cardinality".
  std::size_t srv_cardinality = 0;
  /// Penalty weight for the leakage and independence constraints.
  double penalty_weight = 100.0;
  std::size_t num_restarts = 10;
  /// Simplex iterations per restart.
  std::size_t max_iters = 2000;
  /// An SRV counts as found when its relative error is below this.
  double success_threshold = 0.10;
  /// Ceiling on I(S_k : S_1..S_{k-1}) for accepting a sequence member.
  double independence_tol = 0.01;
  /// The sequence stops once the best new SRV gains less than this.
  double stop_gain = 0.01;
  std::uint64_t seed = 0;

  void validate() const;
  static SearchConfig from_json_string(const std::string& text);
  std::string to_json_string(int indent = -1) const;
};

/// One numerically found SRV: its conditional distribution given the
/// inputs and the quantities that define success.
struct SrvResult {
  ConditionalPmf cond;  // Pr(S | X), rows over joint input states
  Bits mi_with_x = 0.0;
  std::vector<Bits> leakage;  // I(S : X_i), one per input
  Bits mi_with_prior_srvs = 0.0;
  /// Sum of leakages divided by mi_with_x; infinite when mi_with_x ~ 0.
  double relative_error = 0.0;
  bool succeeded = false;
};

/// An ordered, mutually independence-constrained SRV sequence together
/// with the input distribution extended by the found SRVs.
struct OsrvSequence {
  std::vector<SrvResult> srvs;
  JointPmf base_pmf;
  VarSet input_vars;
  VarSet srv_vars;  // positions of the appended SRVs within base_pmf
};

/// Search for a single SRV of the `inputs` variables of `pmf` by
/// penalized simplex optimization over the stick-breaking parameters of
/// Pr(S|X). Returns the best candidate over all restarts scored by
/// I(S:X) - lambda * sum_i I(S:X_i); deterministic given the seed.
/// A single input yields a failed result with mi_with_x = 0.
SrvResult find_srv(const JointPmf& pmf, const VarSet& inputs,
                   const SearchConfig& config);

/// Iteratively build an orthogonalized SRV sequence: each successive SRV
/// is optimized with an added independence penalty against all prior
/// SRVs and appended to the joint. Stops when the best new candidate
/// gains less than stop_gain, fails the success threshold, or exceeds
/// the independence tolerance.
OsrvSequence find_osrv_sequence(const JointPmf& pmf, const VarSet& inputs,
                                const SearchConfig& config);

/// Rerun find_osrv_sequence from num_restarts different starting points
/// and keep the sequence with the highest synergy estimate about
/// `target` (midpoint estimate, ties broken by lowest restart index).
/// Restart 0 reuses the configured seed, so num_restarts = 1 is
/// identical to find_osrv_sequence.
OsrvSequence maximize_ordering(const JointPmf& pmf, const VarSet& inputs,
                               const VarSet& target,
                               const SearchConfig& config);

namespace detail {
/// find_srv against an explicit set of already-appended prior SRVs.
SrvResult find_srv_with_priors(const JointPmf& pmf, const VarSet& inputs,
                               const VarSet& priors,
                               const SearchConfig& config);

}  // namespace detail

}  // namespace syninfo

#endif  // SYNINFO_SRV_SEARCH_HPP
