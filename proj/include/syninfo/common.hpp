#ifndef SYNINFO_COMMON_HPP
#define SYNINFO_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace syninfo {

/// Information quantities are doubles in units of bits (log base 2).
using Bits = double;

/// A set of variable positions within a JointPmf. Helpers normalize
/// (sort + deduplicate-check) before use.
using VarSet = std::vector<std::size_t>;

/// Raised when an iterative routine exhausts its retry/iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a brute-force enumeration would exceed its candidate budget.
class EnumerationBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a stream of independent sub-seeds from a master seed.
inline std::uint64_t subseed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

/// Deterministic RNG wrapper. Doubles are produced from the raw 64-bit
/// stream so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller on the deterministic uniform stream.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Sort, bounds-check and reject duplicates. `n` is the number of
/// variables in the distribution the set indexes into.
inline VarSet normalize_vars(VarSet vars, std::size_t n,
                             const char* what = "variable set") {
  std::sort(vars.begin(), vars.end());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] >= n) {
      throw std::invalid_argument(std::string(what) +
                                  ": index out of range");
    }
    if (i > 0 && vars[i] == vars[i - 1]) {
      throw std::invalid_argument(std::string(what) + ": duplicate index");
    }
  }
  return vars;
}

inline bool disjoint(const VarSet& a, const VarSet& b) {
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (x == y) return false;
    }
  }
  return true;
}

}  // namespace syninfo

#endif  // SYNINFO_COMMON_HPP
