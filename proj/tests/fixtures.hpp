#ifndef SYNINFO_TESTS_FIXTURES_HPP
#define SYNINFO_TESTS_FIXTURES_HPP

#include <vector>

#include "syninfo/joint_pmf.hpp"

namespace fixtures {

/// Uniform two-bit inputs with Y = X1 xor X2 appended (the classic gate
/// table: four joint states of probability 1/4 each).
inline syninfo::JointPmf xor_triple() {
  const auto bits = syninfo::JointPmf::uniform({2, 2});
  std::vector<std::size_t> map(4);
  for (std::size_t i = 0; i < 4; ++i) map[i] = (i >> 1) ^ (i & 1);
  return bits.append_deterministic(map, 2);
}

/// Uniform pair of 3-valued inputs with the two modular functions
/// S1 = (2 - X1 + X2) mod 3 and S2 = (X1 + X2) mod 3 appended.
inline syninfo::JointPmf mod3_with_msrvs() {
  auto pmf = syninfo::JointPmf::uniform({3, 3});
  std::vector<std::size_t> s1(9), s2(9);
  for (std::size_t i = 0; i < 9; ++i) {
    const std::size_t x1 = i / 3, x2 = i % 3;
    s1[i] = (2 + 3 - x1 + x2) % 3;
    s2[i] = (x1 + x2) % 3;
  }
  pmf = pmf.append_deterministic(s1, 3);
  std::vector<std::size_t> s2_lift(27);
  for (std::size_t i = 0; i < 27; ++i) s2_lift[i] = s2[i / 3];
  return pmf.append_deterministic(s2_lift, 3);
}

/// Three independent uniform bits (W, X, Y).
inline syninfo::JointPmf wxy_bits() {
  return syninfo::JointPmf::uniform({2, 2, 2});
}

/// (W, X, Y) independent bits with copies of Y and W appended, i.e. an
/// exact orthogonal decomposition of B = (W,Y) w.r.t. A = (W,X):
/// variable 3 = Bperp (copy of Y), variable 4 = Bpar (copy of W).
inline syninfo::JointPmf wxy_with_parts() {
  auto pmf = wxy_bits();
  std::vector<std::size_t> copy_y(8), copy_w(16);
  for (std::size_t i = 0; i < 8; ++i) copy_y[i] = i & 1;
  auto with_perp = pmf.append_deterministic(copy_y, 2);
  for (std::size_t i = 0; i < 16; ++i) copy_w[i] = (i >> 3) & 1;
  return with_perp.append_deterministic(copy_w, 2);
}

/// Three i.i.d. uniform bits with the three pairwise XORs appended as
/// variables 3, 4, 5 (X1^X2, X2^X3, X1^X3).
inline syninfo::JointPmf three_bits_with_xors() {
  auto pmf = syninfo::JointPmf::uniform({2, 2, 2});
  auto bit = [](std::size_t state, std::size_t v) {
    return (state >> (2 - v)) & 1;
  };
  const std::size_t pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (const auto& p : pairs) {
    std::vector<std::size_t> map(pmf.size());
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      const std::size_t cube = pmf.sub_index(i, {0, 1, 2});
      map[i] = bit(cube, p[0]) ^ bit(cube, p[1]);
    }
    pmf = pmf.append_deterministic(map, 2);
  }
  return pmf;
}

}  // namespace fixtures

#endif  // SYNINFO_TESTS_FIXTURES_HPP
