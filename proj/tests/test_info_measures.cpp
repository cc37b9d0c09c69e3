#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "syninfo/info_measures.hpp"

using namespace syninfo;

namespace {

/// Independent oracle for H(target | given): the explicit double sum
/// -sum_g Pr(g) sum_t Pr(t|g) log2 Pr(t|g).
double cond_entropy_double_sum(const JointPmf& pmf, const VarSet& target,
                               const VarSet& given) {
  const auto g = pmf.marginal(given);
  const auto cond = pmf.condition(target, given);
  double h = 0.0;
  for (std::size_t r = 0; r < cond.num_rows(); ++r) {
    const double pg = g.probs()[r];
    if (pg <= 0.0) continue;
    double row = 0.0;
    for (double p : cond.row(r)) {
      if (p > 0.0) row -= p * std::log2(p);
    }
    h += pg * row;
  }
  return h;
}

}  // namespace

TEST_CASE("entropy basics") {
  CHECK(entropy(JointPmf::uniform({2}), {0}) == 1.0);
  CHECK(entropy(JointPmf::uniform({3}), {0}) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  const auto deterministic = JointPmf({2}, {1.0, 0.0});
  CHECK(entropy(deterministic, {0}) == 0.0);
  CHECK_THROWS_AS(entropy(deterministic, {}), std::invalid_argument);
}

TEST_CASE("conditional entropy") {
  const auto xor_pmf = fixtures::xor_triple();
  CHECK(cond_entropy(xor_pmf, {2}, {0, 1}) == 0.0);
  CHECK(cond_entropy(xor_pmf, {2}, {}) ==
        entropy(xor_pmf, {2}));
  CHECK(cond_entropy(JointPmf::uniform({2, 2}), {1}, {0}) ==
        doctest::Approx(1.0).epsilon(1e-15));

  for (int s = 0; s < 5; ++s) {
    const auto pmf = JointPmf::random({3, 2, 2}, 100 + s);
    CHECK(std::abs(cond_entropy(pmf, {2}, {0, 1}) -
                   cond_entropy_double_sum(pmf, {2}, {0, 1})) <= 1e-12);
  }
}

TEST_CASE("mutual information on the gate table") {
  const auto xor_pmf = fixtures::xor_triple();
  CHECK(std::abs(mutual_info(xor_pmf, {0}, {2})) <= 1e-12);
  CHECK(std::abs(mutual_info(xor_pmf, {1}, {2})) <= 1e-12);
  CHECK(mutual_info(xor_pmf, {0, 1}, {2}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mutual information on the mod-3 construction") {
  const auto pmf = fixtures::mod3_with_msrvs();  // vars: X1 X2 S1 S2
  CHECK(std::abs(mutual_info(pmf, {2}, {3})) <= 1e-12);
  CHECK(mutual_info(pmf, {2}, {0, 1}) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(mutual_info(pmf, {3}, {0, 1}) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("copy has mutual information equal to its entropy") {
  const auto pmf = JointPmf::random({3, 2}, 5);
  std::vector<std::size_t> copy(pmf.size());
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    copy[i] = pmf.sub_index(i, {0});
  }
  const auto joint = pmf.append_deterministic(copy, 3);
  CHECK(mutual_info(joint, {0}, {2}) ==
        doctest::Approx(entropy(joint, {0})).epsilon(1e-12));
}

TEST_CASE("conditional mutual information") {
  const auto xor_pmf = fixtures::xor_triple();
  CHECK(cond_mutual_info(xor_pmf, {1}, {2}, {0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const auto pmf = JointPmf::random({2, 3}, 8);
  CHECK(cond_mutual_info(pmf, {0}, {1}, {}) ==
        doctest::Approx(mutual_info(pmf, {0}, {1})).epsilon(1e-15));

  // Brute-force check on the 9-state mod-3 table: I(S2 : X2 | X1).
  const auto mod3 = fixtures::mod3_with_msrvs();
  double direct = 0.0;
  {
    // sum over (x1, x2, s2) of p log [ p(x1) p(x1,x2,s2) /
    //                                 (p(x1,x2) p(x1,s2)) ]
    const auto joint = mod3.marginal({0, 1, 3});
    const auto x1 = mod3.marginal({0});
    const auto x1x2 = mod3.marginal({0, 1});
    const auto x1s2 = mod3.marginal({0, 3});
    for (std::size_t i = 0; i < joint.size(); ++i) {
      const double p = joint.probs()[i];
      if (p <= 0.0) continue;
      const auto st = joint.index_to_state(i);
      const double num = x1.probs()[st[0]] * p;
      const double den =
          x1x2.probs()[st[0] * 3 + st[1]] * x1s2.probs()[st[0] * 3 + st[2]];
      direct += p * std::log2(num / den);
    }
  }
  CHECK(direct == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(cond_mutual_info(mod3, {3}, {1}, {0}) ==
        doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("chain rule and symmetry on random distributions") {
  for (int s = 0; s < 8; ++s) {
    const auto pmf = JointPmf::random({2, 3, 2}, 2000 + s);
    const double lhs = mutual_info(pmf, {0}, {1, 2});
    const double rhs =
        mutual_info(pmf, {0}, {2}) + cond_mutual_info(pmf, {0}, {1}, {2});
    CHECK(std::abs(lhs - rhs) <= 1e-10);
    CHECK(std::abs(mutual_info(pmf, {0}, {1}) - mutual_info(pmf, {1}, {0})) <=
          1e-12);
    CHECK(mutual_info(pmf, {0}, {1}) >= 0.0);
    CHECK(entropy(pmf, {0, 1, 2}) >= 0.0);
  }
}

TEST_CASE("appending a function of b cannot add information about a") {
  for (int s = 0; s < 5; ++s) {
    const auto pmf = JointPmf::random({2, 2, 2}, 3000 + s);
    std::vector<std::size_t> f(pmf.size());
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      f[i] = pmf.sub_index(i, {1, 2}) % 2;
    }
    const auto joint = pmf.append_deterministic(f, 2);
    const double before = mutual_info(joint, {0}, {1, 2});
    const double after = mutual_info(joint, {0}, {1, 2, 3});
    CHECK(after <= before + 1e-10);
  }
}

TEST_CASE("overlapping sets are rejected") {
  const auto pmf = JointPmf::uniform({2, 2});
  CHECK_THROWS_AS(mutual_info(pmf, {0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(cond_mutual_info(pmf, {0}, {1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(cond_entropy(pmf, {0}, {0}), std::invalid_argument);
}
