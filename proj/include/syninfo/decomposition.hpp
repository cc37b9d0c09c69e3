#ifndef SYNINFO_DECOMPOSITION_HPP
#define SYNINFO_DECOMPOSITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "syninfo/info_measures.hpp"
#include "syninfo/joint_pmf.hpp"

namespace syninfo {

struct DecompositionConfig {
  /// Cardinalities of the two parts; 0 means "joint cardinality of B".
  std::size_t perp_cardinality = 0;
  std::size_t par_cardinality = 0;
  std::size_t num_restarts = 20;
  std::size_t max_iters = 3000;
  /// A decomposition counts as converged when every residual is below
  /// this, in bits.
  double tol = 1e-3;
  std::uint64_t seed = 0;

  void validate() const;
  static DecompositionConfig from_json_string(const std::string& text);
};

/// Residuals of the five decomposition conditions plus the implied
/// independence of the two parts, all in bits.
struct DecompositionResiduals {
  double sufficiency = 0.0;      // |I(Bperp,Bpar : B) - H(B)|
  double orthogonality = 0.0;    // |I(Bperp : A)|
  double parallelism = 0.0;      // |I(Bpar : A) - I(B : A)|
  double non_spuriousness = 0.0; // |I(Bpar : A | B)|
  double parsimony = 0.0;        // |I(Bpar : B) - I(B : A)|
  double independence = 0.0;     // |I(Bperp : Bpar)|

  double max_residual() const;
  std::string to_json_string(int indent = -1) const;
};

struct DecompositionResult {
  ConditionalPmf perp_cond;      // Pr(Bperp | A,B)
  ConditionalPmf parallel_cond;  // Pr(Bpar  | A,B)
  /// Joint conditional Pr(Bperp,Bpar | A,B) actually optimized;
  /// row-major with Bpar fastest.
  ConditionalPmf pair_cond;
  DecompositionResiduals residuals;
  bool converged = false;
  /// Input distribution with Bperp and Bpar appended as the last two
  /// variables.
  JointPmf augmented;

  std::string to_json_string(int indent = -1) const;
};

/// Numerically search for an orthogonal decomposition of B with respect
/// to A by minimizing the sum of squared condition residuals over the
/// parameters of Pr(Bperp,Bpar | A,B). `converged` is a tolerance
/// statement, never a proof of exactness; `converged == false` is
/// inconclusive except where impossibility is proven analytically.
DecompositionResult decompose(const JointPmf& pmf, const VarSet& b,
                              const VarSet& a,
                              const DecompositionConfig& config);

/// Measure all six residuals for candidate parts already present in the
/// distribution. `a` and `b` may share variables.
DecompositionResiduals verify_decomposition(const JointPmf& pmf,
                                            const VarSet& a, const VarSet& b,
                                            const VarSet& b_perp,
                                            const VarSet& b_parallel);

/// The analytically solvable binary family: Pr(A=1) = p_a,
/// Pr(B=x | A=x) = p_b, Pr(Bperp=x | B=x) = p_c^x.
struct BinaryScanPoint {
  double p_c0 = 0.0;
  double p_c1 = 0.0;
  Bits mi_perp_a = 0.0;
  Bits mi_perp_b = 0.0;
};

struct BinaryScanReport {
  double p_a = 0.0;
  double p_b = 0.0;
  std::size_t grid_size = 0;
  std::vector<BinaryScanPoint> grid;
  /// Sweep along the constraint line p_c1 = 1 - p_c0.
  std::vector<BinaryScanPoint> line;
  double max_line_mi_perp_a = 0.0;
  double max_line_mi_perp_b = 0.0;
  /// Whenever I(Bperp:A) <= 1e-9 on the grid, I(Bperp:B) <= 1e-9 too.
  bool orthogonality_implies_no_info = true;
  std::size_t num_orthogonal_points = 0;
  double max_mi_b_when_orthogonal = 0.0;

  std::string to_json_string(int indent = -1) const;
};

/// Evaluate I(Bperp:A) and I(Bperp:B) across a (p_c0, p_c1) grid and
/// along the line p_c1 = 1 - p_c0, confirming the closed-form claims of
/// the binary impossibility argument.
BinaryScanReport binary_impossibility_scan(double p_a, double p_b,
                                           std::size_t grid_size);

/// Joint over (A, B) for the binary family above.
JointPmf binary_pair_pmf(double p_a, double p_b);
/// Joint over (A, B, Bperp) for the binary family above.
JointPmf binary_channel_pmf(double p_a, double p_b, double p_c0, double p_c1);

/// Wyner-style common-variable check: if I(W:A,B) = I(A:B) and
/// I(A:B|W) = 0 hold within premise_tol, then W behaves as a parallel
/// part and the three derived conditions must hold within
/// conclusion_tol. Failed premises yield applicable = false, not an
/// error.
struct WynerReport {
  double premise_common_gap = 0.0;  // |I(W:A,B) - I(A:B)|
  double premise_markov = 0.0;      // I(A:B|W)
  bool applicable = false;
  double non_spuriousness = 0.0;    // I(W:A|B)
  double parallelism_gap = 0.0;     // |I(A:W) - I(A:B)|
  double parsimony_gap = 0.0;       // |I(B:W) - I(A:B)|
  bool conclusions_hold = false;
  double premise_tol = 0.0;
  double conclusion_tol = 0.0;

  std::string to_json_string(int indent = -1) const;
};

WynerReport wyner_condition_check(const JointPmf& pmf, const VarSet& a,
                                  const VarSet& b, const VarSet& w,
                                  double premise_tol = 1e-9,
                                  double conclusion_tol = 1e-6);

}  // namespace syninfo

#endif  // SYNINFO_DECOMPOSITION_HPP
