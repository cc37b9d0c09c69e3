#ifndef SYNINFO_INFO_MEASURES_HPP
#define SYNINFO_INFO_MEASURES_HPP

#include "syninfo/joint_pmf.hpp"

namespace syninfo {

/// Shannon entropy H(vars) in bits, with 0 log 0 = 0.
Bits entropy(const JointPmf& pmf, const VarSet& vars);

/// H(target | given) = H(target, given) - H(given). An empty `given`
/// reduces to plain entropy.
Bits cond_entropy(const JointPmf& pmf, const VarSet& target,
                  const VarSet& given);

/// I(a : b) = H(a) + H(b) - H(a,b), clamped at the -1e-9 numerical floor.
/// Sets must be disjoint.
Bits mutual_info(const JointPmf& pmf, const VarSet& a, const VarSet& b);

/// I(a : b | c) = I(a : b,c) - I(a : c). An empty `c` reduces to
/// mutual_info. Sets must be pairwise disjoint.
Bits cond_mutual_info(const JointPmf& pmf, const VarSet& a, const VarSet& b,
                      const VarSet& c);

namespace detail {
/// Entropy of a raw probability vector.
Bits entropy_of(std::span<const double> probs);
/// Clamp tiny negative values from floating-point cancellation to zero;
/// anything below the -1e-9 floor indicates an internal inconsistency.
Bits clamp_mi(Bits value);
}  // namespace detail

}  // namespace syninfo

#endif  // SYNINFO_INFO_MEASURES_HPP
