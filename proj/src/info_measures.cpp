#include "syninfo/info_measures.hpp"

#include <cmath>

namespace syninfo {

namespace detail {

Bits entropy_of(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

Bits clamp_mi(Bits value) {
  if (value < -1e-9) {
    throw std::logic_error(
        "information measure below the -1e-9 floor: inconsistent inputs");
  }
  return value < 0.0 ? 0.0 : value;
}

}  // namespace detail

namespace {

VarSet merged(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Bits entropy(const JointPmf& pmf, const VarSet& vars) {
  if (vars.empty()) {
    throw std::invalid_argument("entropy: empty variable set");
  }
  return detail::entropy_of(pmf.marginal(vars).probs());
}

Bits cond_entropy(const JointPmf& pmf, const VarSet& target,
                  const VarSet& given) {
  if (target.empty()) {
    throw std::invalid_argument("cond_entropy: empty target set");
  }
  if (!disjoint(target, given)) {
    throw std::invalid_argument("cond_entropy: sets overlap");
  }
  if (given.empty()) return entropy(pmf, target);
  return entropy(pmf, merged(target, given)) - entropy(pmf, given);
}

Bits mutual_info(const JointPmf& pmf, const VarSet& a, const VarSet& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("mutual_info: empty variable set");
  }
  if (!disjoint(a, b)) {
    throw std::invalid_argument("mutual_info: sets overlap");
  }
  return detail::clamp_mi(entropy(pmf, a) + entropy(pmf, b) -
                          entropy(pmf, merged(a, b)));
}

Bits cond_mutual_info(const JointPmf& pmf, const VarSet& a, const VarSet& b,
                      const VarSet& c) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("cond_mutual_info: empty variable set");
  }
  if (!disjoint(a, b) || !disjoint(a, c) || !disjoint(b, c)) {
    throw std::invalid_argument("cond_mutual_info: sets overlap");
  }
  if (c.empty()) return mutual_info(pmf, a, b);
  const Bits h_ac = entropy(pmf, merged(a, c));
  const Bits h_bc = entropy(pmf, merged(b, c));
  const Bits h_c = entropy(pmf, c);
  const Bits h_abc = entropy(pmf, merged(merged(a, b), c));
  return detail::clamp_mi(h_ac + h_bc - h_c - h_abc);
}

}  // namespace syninfo
