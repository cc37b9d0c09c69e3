#include <cmath>

#include "doctest.h"
#include "syninfo/experiments.hpp"

using namespace syninfo;
using namespace syninfo::experiments;

TEST_CASE("fig2 smoke run is deterministic") {
  SearchConfig search;
  search.num_restarts = 4;
  search.max_iters = 600;
  const auto a = run_fig2(4, {2}, 1234, search);
  const auto b = run_fig2(4, {2}, 1234, search);
  REQUIRE(a.rows.size() == 1);
  CHECK(a.rows[0].states == 2);
  CHECK(a.rows[0].success_rate >= 0.0);
  CHECK(a.rows[0].success_rate <= 1.0);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.rows[0].q25 <= a.rows[0].median);
  CHECK(a.rows[0].median <= a.rows[0].q75);
}

TEST_CASE("fig3 reuses the same trials with the efficiency metric") {
  SearchConfig search;
  search.num_restarts = 4;
  search.max_iters = 600;
  const auto f2 = run_fig2(4, {2}, 99, search);
  const auto f3 = run_fig3(4, {2}, 99, search);
  CHECK(f2.rows[0].success_rate == f3.rows[0].success_rate);
  for (const auto& trial : f3.per_state_trials[0]) {
    if (trial.succeeded) {
      CHECK(trial.efficiency <= 1.02);
      CHECK(trial.efficiency >= 0.0);
    }
  }
  CHECK(f3.to_csv().find("ratio_median") != std::string::npos);
  CHECK(f2.to_csv().find("err_median") != std::string::npos);
}

TEST_CASE("fig4 with zero norm is degenerate") {
  SearchConfig search;
  search.num_restarts = 3;
  search.max_iters = 500;
  const auto rep = run_fig4(6, 0.0, 2, 5, search);
  for (const auto& arm : rep.arms) {
    for (double v : arm.impacts) CHECK(v == 0.0);
  }
  CHECK(rep.local_test.p_value == 1.0);
  CHECK(rep.local_test.degenerate);
}

TEST_CASE("fig4 report carries four arms and valid csv") {
  SearchConfig search;
  search.num_restarts = 3;
  search.max_iters = 500;
  const auto rep = run_fig4(5, 0.1, 2, 7, search);
  REQUIRE(rep.arms.size() == 4);
  CHECK(rep.arms[0].perturbation == "local");
  CHECK(rep.arms[1].relation == "srv");
  const auto csv = rep.to_csv();
  CHECK(csv.find("perturbation,relation,trials") != std::string::npos);
  CHECK(rep.local_test.p_value >= 0.0);
  CHECK(rep.local_test.p_value <= 1.0);
}

TEST_CASE("experiment validation") {
  SearchConfig search;
  CHECK_THROWS_AS(run_fig2(0, {2}, 1, search), std::invalid_argument);
  CHECK_THROWS_AS(run_fig2(3, {1}, 1, search), std::invalid_argument);
  CHECK_THROWS_AS(run_fig4(3, -0.5, 2, 1, search), std::invalid_argument);
}
