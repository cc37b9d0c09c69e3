#ifndef SYNINFO_ORACLE_HPP
#define SYNINFO_ORACLE_HPP

#include <string>
#include <vector>

#include "syninfo/info_measures.hpp"
#include "syninfo/joint_pmf.hpp"

namespace syninfo::oracle {

/// A deterministic candidate SRV: joint input state -> output state.
/// Maps are canonical: output labels appear in first-occurrence order
/// over the lexicographic input states, so each map represents its whole
/// relabeling class.
struct DeterministicSrv {
  std::vector<std::size_t> map;
  std::size_t out_cardinality = 0;  // number of labels actually used
  Bits mi_with_x = 0.0;
  std::vector<Bits> leakages;
};

/// Exhaustively enumerate every deterministic map from the joint input
/// states to at most `out_cardinality` output states whose per-input
/// leakages are all <= leak_tol and whose I(S:X) exceeds leak_tol,
/// deduplicated up to output relabeling. Throws EnumerationBudgetError
/// when out_cardinality^(joint states) exceeds `budget`.
std::vector<DeterministicSrv> enumerate_srvs(const JointPmf& pmf,
                                             const VarSet& inputs,
                                             std::size_t out_cardinality,
                                             double leak_tol,
                                             std::size_t budget = 10'000'000);

/// Synergy-clique diagnostics for a group of variable sets: the
/// (n-1 -> 1) split informations, the pairwise MI matrix, and for
/// groups of three the corrected-identity residuals.
struct CliqueReport {
  std::vector<Bits> split_mi;             // I(rest : group_k) per k
  std::vector<std::vector<Bits>> pairwise;
  bool pairwise_zero = false;             // all pairwise <= 1e-9
  double split_spread = 0.0;              // max - min of split_mi
  /// For n = 3: |split(k) - (split(2) + correction)| per k in {0,1}.
  std::vector<double> corrected_residuals;

  std::string to_json_string(int indent = -1) const;
};

CliqueReport verify_clique(const JointPmf& pmf,
                           const std::vector<VarSet>& groups);

/// Census of the deterministic binary SRVs of three i.i.d. uniform bits:
/// enumerates all zero-leakage classes, locates the three pairwise XOR
/// maps, and grows a maximal pairwise-independent selection from them.
struct CensusReport {
  std::vector<DeterministicSrv> classes;
  std::vector<std::size_t> selected;  // indices into `classes`
  bool found_three_xors = false;
  double max_pairwise_mi_selected = 0.0;
  Bits joint_entropy_selected = 0.0;
  Bits entropy_three_xors = 0.0;
  Bits h_third_xor_given_two = 0.0;

  std::string to_json_string(int indent = -1) const;
};

CensusReport three_bit_msrv_census(std::size_t budget = 10'000'000);

}  // namespace syninfo::oracle

#endif  // SYNINFO_ORACLE_HPP
