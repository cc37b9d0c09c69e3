#ifndef SYNINFO_SYNERGY_HPP
#define SYNINFO_SYNERGY_HPP

#include "syninfo/srv_search.hpp"

namespace syninfo {

struct PerSrvTerm {
  Bits mi_with_target = 0.0;
  Bits leakage_sum = 0.0;
  Bits leakage_max = 0.0;
};

/// Lower/upper/midpoint estimate of the synergistic information in a
/// target about a set of inputs, summed over an OSRV sequence.
struct SynergyEstimate {
  Bits lower = 0.0;
  Bits upper = 0.0;
  Bits mid = 0.0;
  /// (upper - lower) / mid: the spread induced by treating the per-input
  /// leakage corrections as independent (sum) versus redundant (max).
  double relative_error = 0.0;
  std::vector<PerSrvTerm> per_srv_terms;

  std::string to_json_string(int indent = -1) const;
};

/// Score an existing OSRV sequence against a target: per SRV the term is
/// I(S_i : target) with the leakage corrections subtracted (sum form for
/// the lower bound, max form for the upper bound), clamped at zero.
SynergyEstimate synergy_terms(const JointPmf& pmf_with_srvs,
                              const VarSet& target, const OsrvSequence& seq);

/// Full pipeline: maximize_ordering followed by synergy_terms. A single
/// input variable yields the exact zero estimate (empty sequence).
SynergyEstimate estimate_synergy(const JointPmf& pmf, const VarSet& inputs,
                                 const VarSet& target,
                                 const SearchConfig& config);

/// Theoretical cap on I(S : X) for any SRV S of the inputs:
/// H(inputs) - max_i H(X_i).
Bits srv_upper_bound(const JointPmf& pmf, const VarSet& inputs);

/// Whole-minus-sum baseline: I(inputs : target) - sum_i I(X_i : target).
/// May be negative when the inputs are correlated.
Bits whole_minus_sum(const JointPmf& pmf, const VarSet& inputs,
                     const VarSet& target);

}  // namespace syninfo

#endif  // SYNINFO_SYNERGY_HPP
