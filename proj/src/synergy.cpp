#include "syninfo/synergy.hpp"

#include <cmath>

#include "json.hpp"

namespace syninfo {

std::string SynergyEstimate::to_json_string(int indent) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : per_srv_terms) {
    terms.push_back({{"mi_with_target", t.mi_with_target},
                     {"leakage_sum", t.leakage_sum},
                     {"leakage_max", t.leakage_max}});
  }
  nlohmann::json j{{"lower", lower},
                   {"upper", upper},
                   {"mid", mid},
                   {"relative_error", relative_error},
                   {"per_srv_terms", terms}};
  return j.dump(indent);
}

SynergyEstimate synergy_terms(const JointPmf& pmf_with_srvs,
                              const VarSet& target, const OsrvSequence& seq) {
  const VarSet tgt =
      normalize_vars(target, pmf_with_srvs.num_vars(), "synergy target");
  if (tgt.empty()) {
    throw std::invalid_argument("synergy_terms: empty target");
  }
  if (pmf_with_srvs.cardinalities() != seq.base_pmf.cardinalities()) {
    throw std::invalid_argument(
        "synergy_terms: distribution does not match the sequence");
  }
  for (std::size_t s : seq.srv_vars) {
    if (s >= pmf_with_srvs.num_vars() || !disjoint({s}, tgt)) {
      throw std::invalid_argument(
          "synergy_terms: SRV variables clash with the target");
    }
  }

  SynergyEstimate est;
  for (std::size_t k = 0; k < seq.srv_vars.size(); ++k) {
    const VarSet s{seq.srv_vars[k]};
    PerSrvTerm term;
    term.mi_with_target = mutual_info(pmf_with_srvs, s, tgt);
    term.leakage_max = 0.0;
    for (std::size_t j : seq.input_vars) {
      const Bits leak = mutual_info(pmf_with_srvs, s, {j});
      term.leakage_sum += leak;
      term.leakage_max = std::max(term.leakage_max, leak);
    }
    est.per_srv_terms.push_back(term);
    // A leaky SRV cannot contribute negative synergy: clamp at zero.
    est.lower += std::max(0.0, term.mi_with_target - term.leakage_sum);
    est.upper += std::max(0.0, term.mi_with_target - term.leakage_max);
  }
  est.mid = 0.5 * (est.lower + est.upper);
  est.relative_error = est.mid > 1e-12 ? (est.upper - est.lower) / est.mid : 0.0;
  return est;
}

SynergyEstimate estimate_synergy(const JointPmf& pmf, const VarSet& inputs,
                                 const VarSet& target,
                                 const SearchConfig& config) {
  const VarSet in = normalize_vars(inputs, pmf.num_vars(), "synergy inputs");
  if (in.empty()) {
    throw std::invalid_argument("estimate_synergy: empty input set");
  }
  if (in.size() < 2) {
    SynergyEstimate zero;  // sigma(X1) is empty, synergy is exactly zero
    return zero;
  }
  const OsrvSequence best = maximize_ordering(pmf, in, target, config);
  return synergy_terms(best.base_pmf, target, best);
}

Bits srv_upper_bound(const JointPmf& pmf, const VarSet& inputs) {
  const VarSet in = normalize_vars(inputs, pmf.num_vars(), "bound inputs");
  if (in.empty()) {
    throw std::invalid_argument("srv_upper_bound: empty input set");
  }
  Bits max_h = 0.0;
  for (std::size_t v : in) {
    max_h = std::max(max_h, entropy(pmf, {v}));
  }
  return entropy(pmf, in) - max_h;
}

Bits whole_minus_sum(const JointPmf& pmf, const VarSet& inputs,
                     const VarSet& target) {
  const VarSet in = normalize_vars(inputs, pmf.num_vars(), "wms inputs");
  Bits total = mutual_info(pmf, in, target);
  for (std::size_t v : in) {
    total -= mutual_info(pmf, {v}, target);
  }
  return total;
}

}  // namespace syninfo
