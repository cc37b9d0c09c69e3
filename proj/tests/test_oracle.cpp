#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "syninfo/info_measures.hpp"
#include "syninfo/oracle.hpp"

using namespace syninfo;
using oracle::enumerate_srvs;

TEST_CASE("two uniform bits admit exactly the parity class") {
  const auto bits = JointPmf::uniform({2, 2});
  const auto srvs = enumerate_srvs(bits, {0, 1}, 2, 1e-12);
  REQUIRE(srvs.size() == 1);
  CHECK(srvs[0].map == std::vector<std::size_t>{0, 1, 1, 0});
  CHECK(srvs[0].mi_with_x == doctest::Approx(1.0).epsilon(1e-12));
  for (double l : srvs[0].leakages) CHECK(l <= 1e-12);
}

TEST_CASE("uniform 3-valued pair contains the two modular functions") {
  const auto pmf = JointPmf::uniform({3, 3});
  const auto srvs = enumerate_srvs(pmf, {0, 1}, 3, 1e-12);
  REQUIRE(!srvs.empty());

  auto canonical_of = [](const std::vector<std::size_t>& map) {
    std::vector<std::size_t> relabel(3, 3), out(map.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (relabel[map[i]] == 3) relabel[map[i]] = next++;
      out[i] = relabel[map[i]];
    }
    return out;
  };
  std::vector<std::size_t> s1(9), s2(9);
  for (std::size_t i = 0; i < 9; ++i) {
    s1[i] = (2 + 3 - i / 3 + i % 3) % 3;
    s2[i] = (i / 3 + i % 3) % 3;
  }
  std::size_t hits = 0;
  std::size_t full_mi_classes = 0;
  for (const auto& srv : srvs) {
    if (srv.map == canonical_of(s1) || srv.map == canonical_of(s2)) ++hits;
    if (srv.mi_with_x >= std::log2(3.0) - 1e-12) ++full_mi_classes;
    CHECK(srv.mi_with_x <= std::log2(3.0) + 1e-12);  // the analytic cap
  }
  CHECK(hits == 2);
  // The full-information classes are exactly the two Latin squares.
  CHECK(full_mi_classes == 2);
}

TEST_CASE("a single input admits no SRV") {
  const auto pmf = JointPmf::uniform({4});
  CHECK(enumerate_srvs(pmf, {0}, 4, 1e-12).empty());
}

TEST_CASE("enumeration budget guard") {
  const auto pmf = JointPmf::uniform({4, 4});
  CHECK_THROWS_AS(enumerate_srvs(pmf, {0, 1}, 4, 1e-12, 1000),
                  EnumerationBudgetError);
}

TEST_CASE("enumeration is invariant under input relabeling") {
  // Swapping the two inputs of an asymmetric distribution must produce
  // the same class count and the same sorted MI values.
  std::vector<double> probs{0.30, 0.10, 0.10, 0.15, 0.15, 0.20};
  const JointPmf pmf({2, 3}, probs);
  std::vector<double> swapped(6);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 3; ++y) swapped[y * 2 + x] = probs[x * 3 + y];
  }
  const JointPmf pmf_swapped({3, 2}, swapped);

  const auto a = enumerate_srvs(pmf, {0, 1}, 2, 1e-9);
  const auto b = enumerate_srvs(pmf_swapped, {0, 1}, 2, 1e-9);
  REQUIRE(a.size() == b.size());
  std::vector<double> mi_a, mi_b;
  for (const auto& s : a) mi_a.push_back(s.mi_with_x);
  for (const auto& s : b) mi_b.push_back(s.mi_with_x);
  std::sort(mi_a.begin(), mi_a.end());
  std::sort(mi_b.begin(), mi_b.end());
  for (std::size_t i = 0; i < mi_a.size(); ++i) {
    CHECK(std::abs(mi_a[i] - mi_b[i]) <= 1e-12);
  }
}

TEST_CASE("clique identities on the pairwise XOR triple") {
  const auto pmf = fixtures::three_bits_with_xors();  // XOR vars: 3, 4, 5
  const auto rep = oracle::verify_clique(pmf, {{3}, {4}, {5}});
  CHECK(rep.pairwise_zero);
  for (const auto& row : rep.pairwise) {
    for (double mi : row) CHECK(mi <= 1e-12);
  }
  for (double d : rep.split_mi) {
    CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(rep.split_spread <= 1e-9);
  for (double r : rep.corrected_residuals) CHECK(r <= 1e-9);
}

TEST_CASE("clique identities on the mod-3 pair against an input") {
  const auto pmf = fixtures::mod3_with_msrvs();  // S1 = 2, S2 = 3
  const auto rep = oracle::verify_clique(pmf, {{2}, {3}, {0}});
  CHECK(rep.pairwise_zero);
  for (double d : rep.split_mi) {
    CHECK(d == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  }
  const auto rep2 = oracle::verify_clique(pmf, {{2}, {3}, {1}});
  for (double d : rep2.split_mi) {
    CHECK(d == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("corrected identity with nonzero pairwise information") {
  // S1 = U^V, S2 = (V^W, U^V), S3 = copy of V^W over three i.i.d. bits:
  // d = I(S1,S2:S3) = 1, I(S3:S2) = 1, I(S1:S3) = 0, and the corrected
  // value d + I(S3:S2) - I(S1:S3) = 2 equals I(S1,S3:S2) = H(S2).
  auto pmf = JointPmf::uniform({2, 2, 2});
  auto bit = [](std::size_t s, std::size_t v) { return (s >> (2 - v)) & 1; };
  auto lift = [&pmf](const std::vector<std::size_t>& base) {
    std::vector<std::size_t> out(pmf.size());
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      out[i] = base[pmf.sub_index(i, {0, 1, 2})];
    }
    return out;
  };
  std::vector<std::size_t> uv(8), vw(8);
  for (std::size_t i = 0; i < 8; ++i) {
    uv[i] = bit(i, 0) ^ bit(i, 1);
    vw[i] = bit(i, 1) ^ bit(i, 2);
  }
  pmf = pmf.append_deterministic(lift(uv), 2);  // var 3 = S1
  pmf = pmf.append_deterministic(lift(vw), 2);  // var 4 = S2 first half
  pmf = pmf.append_deterministic(lift(uv), 2);  // var 5 = S2 second half
  pmf = pmf.append_deterministic(lift(vw), 2);  // var 6 = S3 (copy of V^W)

  const std::vector<VarSet> groups{{3}, {4, 5}, {6}};
  const auto rep = oracle::verify_clique(pmf, groups);
  CHECK_FALSE(rep.pairwise_zero);
  const double d = rep.split_mi[2];
  CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
  // Corrected identity for the middle split.
  const double expected =
      d + rep.pairwise[1][2] - rep.pairwise[0][2];
  CHECK(rep.split_mi[1] == doctest::Approx(expected).epsilon(1e-9));
  CHECK(rep.corrected_residuals[1] <= 1e-9);
}

TEST_CASE("three-bit census") {
  const auto rep = oracle::three_bit_msrv_census();
  CHECK(rep.found_three_xors);
  CHECK(rep.selected.size() >= 4);
  CHECK(rep.max_pairwise_mi_selected <= 1e-12);
  CHECK(rep.joint_entropy_selected == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(rep.entropy_three_xors == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.h_third_xor_given_two <= 1e-12);
  // Every enumerated class obeys the entropy cap for three uniform bits.
  for (const auto& c : rep.classes) {
    CHECK(c.mi_with_x <= 2.0 + 1e-12);
  }
}
