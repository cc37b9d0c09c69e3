#ifndef SYNINFO_JOINT_PMF_HPP
#define SYNINFO_JOINT_PMF_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "syninfo/common.hpp"

namespace syninfo {

/// Conditional distribution table: one row per joint state of the
/// conditioning variables, each row a distribution over the joint states
/// of the target variables. Rows sum to 1 within 1e-9.
struct ConditionalPmf {
  std::vector<std::size_t> given_cardinalities;
  std::vector<std::size_t> target_cardinalities;
  std::vector<double> table;  // row-major: [given_index * row_size + target_index]

  std::size_t num_rows() const;
  std::size_t row_size() const;
  std::span<const double> row(std::size_t r) const;
  void validate() const;
};

/// Dense joint probability mass function over n discrete variables.
///
/// Probabilities are stored row-major with the LAST variable fastest,
/// one entry per joint state. Entries are non-negative and sum to 1
/// within 1e-9. Values are immutable after construction; every
/// operation returns a new JointPmf.
class JointPmf {
 public:
  JointPmf(std::vector<std::size_t> cardinalities, std::vector<double> probs);

  /// Uniform distribution: every joint state gets 1/size.
  static JointPmf uniform(const std::vector<std::size_t>& cardinalities);

  /// Random distribution: independent uniform weights per joint state,
  /// normalized. Deterministic for a fixed seed.
  static JointPmf random(const std::vector<std::size_t>& cardinalities,
                         std::uint64_t seed);

  /// Decode the nested stick-breaking parameterization: size-1 numbers
  /// on [0,1], laid out along the chain Pr(X1), Pr(X2|X1), Pr(X3|X1,X2), ...
  /// Parameter j of a block is the conditional probability of state j
  /// given the states before it were not taken.
  static JointPmf from_params(const std::vector<std::size_t>& cardinalities,
                              const std::vector<double>& params);

  /// Encode back to hypercube parameters. Degenerate (zero-mass)
  /// conditional rows are emitted as the parameters of a uniform row;
  /// they carry no probability so the decode round-trips regardless.
  std::vector<double> to_params() const;

  std::size_t num_vars() const { return cards_.size(); }
  std::size_t size() const { return probs_.size(); }
  const std::vector<std::size_t>& cardinalities() const { return cards_; }
  const std::vector<double>& probs() const { return probs_; }

  /// Sum out all variables not in `keep`; the result keeps variables in
  /// ascending original index order.
  JointPmf marginal(const VarSet& keep) const;

  /// Pr(target | given). Rows with zero conditioning mass are filled
  /// with the uniform distribution.
  ConditionalPmf condition(const VarSet& target, const VarSet& given) const;

  /// Append a new variable distributed per `cond`, whose conditioning
  /// variables are all current variables in order. The new variable
  /// becomes the last index.
  JointPmf append_variable(const ConditionalPmf& cond) const;

  /// Append a new variable whose conditional given the whole joint state
  /// depends only on the variables in `inputs`. `cond` has one row per
  /// joint state of `inputs` (ascending index order).
  JointPmf append_from_inputs(const VarSet& inputs,
                              const ConditionalPmf& cond) const;

  /// Append a deterministic variable: state = map[joint state index].
  /// The map must be total; the appended variable C has H(C | X) = 0.
  JointPmf append_deterministic(const std::vector<std::size_t>& map,
                                std::size_t out_cardinality) const;

  /// Mixed-radix helpers (last variable fastest).
  std::size_t state_to_index(std::span<const std::size_t> state) const;
  std::vector<std::size_t> index_to_state(std::size_t index) const;
  /// Joint sub-index of `vars` (ascending order) within full state `index`.
  std::size_t sub_index(std::size_t index, const VarSet& vars) const;

  bool operator==(const JointPmf& other) const = default;

  // --- serialization -----------------------------------------------------

  /// {"cardinalities":[...],"probs":[...]}, probs row-major (last
  /// variable fastest). Round-trips bit-exactly.
  std::string to_json_string(int indent = -1) const;
  static JointPmf from_json_string(const std::string& text);

  /// One row per joint state: state indices then the probability,
  /// printed with 17 significant digits so doubles round-trip exactly.
  std::string to_csv() const;
  static JointPmf from_csv(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static JointPmf load(const std::filesystem::path& path);

 private:
  std::vector<std::size_t> cards_;
  std::vector<std::size_t> strides_;
  std::vector<double> probs_;

  void check_invariants() const;
};

struct PerturbResult {
  JointPmf pmf;
  /// Euclidean length actually realized in parameter space after the
  /// perturbed point is clipped back into the unit hypercube.
  double realized_norm = 0.0;
};

/// Move the stick-breaking parameters of Pr(X_var) by a random vector of
/// length `norm` while keeping Pr(all others | X_var) unchanged.
PerturbResult perturb_local(const JointPmf& pmf, std::size_t var, double norm,
                            std::uint64_t seed);

/// Perturb the parameters of Pr(X_b | X_a) by a vector of length `norm`
/// while keeping Pr(X_a) exactly and Pr(X_b) within total-variation `tol`
/// of the originals, and Pr(rest | X_a, X_b) unchanged. Retries random
/// directions, then falls back to alternating renormalization; throws
/// ConvergenceError when no admissible perturbation is found.
PerturbResult perturb_nonlocal(const JointPmf& pmf, std::size_t var_a,
                               std::size_t var_b, double norm,
                               std::uint64_t seed, double tol);

namespace detail {
/// Stick-breaking over a single distribution of `card` states.
void decode_dist(std::span<const double> params, std::span<double> out);
void encode_dist(std::span<const double> dist, std::span<double> out_params);
}  // namespace detail

}  // namespace syninfo

#endif  // SYNINFO_JOINT_PMF_HPP
