#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syninfo/decomposition.hpp"
#include "syninfo/experiments.hpp"
#include "syninfo/oracle.hpp"
#include "syninfo/synergy.hpp"

namespace py = pybind11;
using namespace syninfo;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Synergistic information measures over discrete joint distributions";

  py::register_exception<ConvergenceError>(m, "ConvergenceError");
  py::register_exception<EnumerationBudgetError>(m, "EnumerationBudgetError");

  py::class_<ConditionalPmf>(m, "ConditionalPmf")
      .def(py::init([](std::vector<std::size_t> given,
                       std::vector<std::size_t> target,
                       std::vector<double> table) {
             ConditionalPmf c{std::move(given), std::move(target),
                              std::move(table)};
             c.validate();
             return c;
           }),
           py::arg("given_cardinalities"), py::arg("target_cardinalities"),
           py::arg("table"))
      .def_readonly("given_cardinalities", &ConditionalPmf::given_cardinalities)
      .def_readonly("target_cardinalities",
                    &ConditionalPmf::target_cardinalities)
      .def_readonly("table", &ConditionalPmf::table);

  py::class_<JointPmf>(m, "JointPmf")
      .def(py::init<std::vector<std::size_t>, std::vector<double>>(),
           py::arg("cardinalities"), py::arg("probs"))
      .def_static("uniform", &JointPmf::uniform, py::arg("cardinalities"))
      .def_static("random", &JointPmf::random, py::arg("cardinalities"),
                  py::arg("seed"))
      .def_static("from_params", &JointPmf::from_params,
                  py::arg("cardinalities"), py::arg("params"))
      .def("to_params", &JointPmf::to_params)
      .def_property_readonly("cardinalities", &JointPmf::cardinalities)
      .def_property_readonly("probs", &JointPmf::probs)
      .def("num_vars", &JointPmf::num_vars)
      .def("marginal", &JointPmf::marginal, py::arg("keep"))
      .def("condition", &JointPmf::condition, py::arg("target"),
           py::arg("given"))
      .def("append_variable", &JointPmf::append_variable, py::arg("cond"))
      .def("append_from_inputs", &JointPmf::append_from_inputs,
           py::arg("inputs"), py::arg("cond"))
      .def("append_deterministic", &JointPmf::append_deterministic,
           py::arg("map"), py::arg("out_cardinality"))
      .def("to_json", &JointPmf::to_json_string, py::arg("indent") = -1)
      .def_static("from_json", &JointPmf::from_json_string, py::arg("text"))
      .def("to_csv", &JointPmf::to_csv)
      .def_static("from_csv", &JointPmf::from_csv, py::arg("text"))
      .def("__eq__", [](const JointPmf& a, const JointPmf& b) { return a == b; });

  m.def("perturb_local",
        [](const JointPmf& pmf, std::size_t var, double norm,
           std::uint64_t seed) {
          auto r = perturb_local(pmf, var, norm, seed);
          return py::make_tuple(r.pmf, r.realized_norm);
        },
        py::arg("pmf"), py::arg("var"), py::arg("norm"), py::arg("seed"));
  m.def("perturb_nonlocal",
        [](const JointPmf& pmf, std::size_t var_a, std::size_t var_b,
           double norm, std::uint64_t seed, double tol) {
          auto r = perturb_nonlocal(pmf, var_a, var_b, norm, seed, tol);
          return py::make_tuple(r.pmf, r.realized_norm);
        },
        py::arg("pmf"), py::arg("var_a"), py::arg("var_b"), py::arg("norm"),
        py::arg("seed"), py::arg("tol") = 0.01);

  m.def("entropy", &entropy, py::arg("pmf"), py::arg("vars"));
  m.def("cond_entropy", &cond_entropy, py::arg("pmf"), py::arg("target"),
        py::arg("given"));
  m.def("mutual_info", &mutual_info, py::arg("pmf"), py::arg("a"),
        py::arg("b"));
  m.def("cond_mutual_info", &cond_mutual_info, py::arg("pmf"), py::arg("a"),
        py::arg("b"), py::arg("c"));

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("srv_cardinality", &SearchConfig::srv_cardinality)
      .def_readwrite("penalty_weight", &SearchConfig::penalty_weight)
      .def_readwrite("num_restarts", &SearchConfig::num_restarts)
      .def_readwrite("max_iters", &SearchConfig::max_iters)
      .def_readwrite("success_threshold", &SearchConfig::success_threshold)
      .def_readwrite("independence_tol", &SearchConfig::independence_tol)
      .def_readwrite("stop_gain", &SearchConfig::stop_gain)
      .def_readwrite("seed", &SearchConfig::seed)
      .def("to_json", &SearchConfig::to_json_string, py::arg("indent") = -1)
      .def_static("from_json", &SearchConfig::from_json_string,
                  py::arg("text"));

  py::class_<SrvResult>(m, "SrvResult")
      .def_readonly("cond", &SrvResult::cond)
      .def_readonly("mi_with_x", &SrvResult::mi_with_x)
      .def_readonly("leakage", &SrvResult::leakage)
      .def_readonly("mi_with_prior_srvs", &SrvResult::mi_with_prior_srvs)
      .def_readonly("relative_error", &SrvResult::relative_error)
      .def_readonly("succeeded", &SrvResult::succeeded);

  py::class_<OsrvSequence>(m, "OsrvSequence")
      .def_readonly("srvs", &OsrvSequence::srvs)
      .def_readonly("base_pmf", &OsrvSequence::base_pmf)
      .def_readonly("input_vars", &OsrvSequence::input_vars)
      .def_readonly("srv_vars", &OsrvSequence::srv_vars);

  m.def("find_srv", &find_srv, py::arg("pmf"), py::arg("inputs"),
        py::arg("config") = SearchConfig{});
  m.def("find_osrv_sequence", &find_osrv_sequence, py::arg("pmf"),
        py::arg("inputs"), py::arg("config") = SearchConfig{});
  m.def("maximize_ordering", &maximize_ordering, py::arg("pmf"),
        py::arg("inputs"), py::arg("target"),
        py::arg("config") = SearchConfig{});

  py::class_<PerSrvTerm>(m, "PerSrvTerm")
      .def_readonly("mi_with_target", &PerSrvTerm::mi_with_target)
      .def_readonly("leakage_sum", &PerSrvTerm::leakage_sum)
      .def_readonly("leakage_max", &PerSrvTerm::leakage_max);

  py::class_<SynergyEstimate>(m, "SynergyEstimate")
      .def_readonly("lower", &SynergyEstimate::lower)
      .def_readonly("upper", &SynergyEstimate::upper)
      .def_readonly("mid", &SynergyEstimate::mid)
      .def_readonly("relative_error", &SynergyEstimate::relative_error)
      .def_readonly("per_srv_terms", &SynergyEstimate::per_srv_terms)
      .def("to_json", &SynergyEstimate::to_json_string, py::arg("indent") = -1);

  m.def("synergy_terms", &synergy_terms, py::arg("pmf_with_srvs"),
        py::arg("target"), py::arg("sequence"));
  m.def("estimate_synergy", &estimate_synergy, py::arg("pmf"),
        py::arg("inputs"), py::arg("target"),
        py::arg("config") = SearchConfig{});
  m.def("srv_upper_bound", &srv_upper_bound, py::arg("pmf"), py::arg("inputs"));
  m.def("whole_minus_sum", &whole_minus_sum, py::arg("pmf"), py::arg("inputs"),
        py::arg("target"));

  py::class_<DecompositionConfig>(m, "DecompositionConfig")
      .def(py::init<>())
      .def_readwrite("perp_cardinality", &DecompositionConfig::perp_cardinality)
      .def_readwrite("par_cardinality", &DecompositionConfig::par_cardinality)
      .def_readwrite("num_restarts", &DecompositionConfig::num_restarts)
      .def_readwrite("max_iters", &DecompositionConfig::max_iters)
      .def_readwrite("tol", &DecompositionConfig::tol)
      .def_readwrite("seed", &DecompositionConfig::seed);

  py::class_<DecompositionResiduals>(m, "DecompositionResiduals")
      .def_readonly("sufficiency", &DecompositionResiduals::sufficiency)
      .def_readonly("orthogonality", &DecompositionResiduals::orthogonality)
      .def_readonly("parallelism", &DecompositionResiduals::parallelism)
      .def_readonly("non_spuriousness",
                    &DecompositionResiduals::non_spuriousness)
      .def_readonly("parsimony", &DecompositionResiduals::parsimony)
      .def_readonly("independence", &DecompositionResiduals::independence)
      .def("max_residual", &DecompositionResiduals::max_residual)
      .def("to_json", &DecompositionResiduals::to_json_string,
           py::arg("indent") = -1);

  py::class_<DecompositionResult>(m, "DecompositionResult")
      .def_readonly("perp_cond", &DecompositionResult::perp_cond)
      .def_readonly("parallel_cond", &DecompositionResult::parallel_cond)
      .def_readonly("residuals", &DecompositionResult::residuals)
      .def_readonly("converged", &DecompositionResult::converged)
      .def_readonly("augmented", &DecompositionResult::augmented)
      .def("to_json", &DecompositionResult::to_json_string,
           py::arg("indent") = -1);

  m.def("decompose", &decompose, py::arg("pmf"), py::arg("b"), py::arg("a"),
        py::arg("config") = DecompositionConfig{});
  m.def("verify_decomposition", &verify_decomposition, py::arg("pmf"),
        py::arg("a"), py::arg("b"), py::arg("b_perp"), py::arg("b_parallel"));
  m.def("binary_impossibility_scan",
        [](double p_a, double p_b, std::size_t grid) {
          return binary_impossibility_scan(p_a, p_b, grid).to_json_string(-1);
        },
        py::arg("p_a"), py::arg("p_b"), py::arg("grid_size") = 21);
  m.def("binary_pair_pmf", &binary_pair_pmf, py::arg("p_a"), py::arg("p_b"));
  m.def("binary_channel_pmf", &binary_channel_pmf, py::arg("p_a"),
        py::arg("p_b"), py::arg("p_c0"), py::arg("p_c1"));
  m.def("wyner_condition_check",
        [](const JointPmf& pmf, const VarSet& a, const VarSet& b,
           const VarSet& w, double premise_tol, double conclusion_tol) {
          return wyner_condition_check(pmf, a, b, w, premise_tol,
                                       conclusion_tol)
              .to_json_string(-1);
        },
        py::arg("pmf"), py::arg("a"), py::arg("b"), py::arg("w"),
        py::arg("premise_tol") = 1e-9, py::arg("conclusion_tol") = 1e-6);

  py::class_<stats::MoodTestResult>(m, "MoodTestResult")
      .def_readonly("chi_square", &stats::MoodTestResult::chi_square)
      .def_readonly("p_value", &stats::MoodTestResult::p_value)
      .def_readonly("degenerate", &stats::MoodTestResult::degenerate);
  m.def("mood_median_test",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return stats::mood_median_test(a, b);
        },
        py::arg("a"), py::arg("b"));
  m.def("chi_square_survival", &stats::chi_square_survival, py::arg("x"),
        py::arg("dof"));

  py::class_<oracle::DeterministicSrv>(m, "DeterministicSrv")
      .def_readonly("map", &oracle::DeterministicSrv::map)
      .def_readonly("out_cardinality", &oracle::DeterministicSrv::out_cardinality)
      .def_readonly("mi_with_x", &oracle::DeterministicSrv::mi_with_x)
      .def_readonly("leakages", &oracle::DeterministicSrv::leakages);
  m.def("enumerate_srvs", &oracle::enumerate_srvs, py::arg("pmf"),
        py::arg("inputs"), py::arg("out_cardinality"), py::arg("leak_tol"),
        py::arg("budget") = 10'000'000);
  m.def("three_bit_msrv_census",
        [](std::size_t budget) {
          return oracle::three_bit_msrv_census(budget).to_json_string(-1);
        },
        py::arg("budget") = 10'000'000);

  m.def("run_fig2",
        [](std::size_t trials, const std::vector<std::size_t>& states,
           std::uint64_t seed, const SearchConfig& cfg) {
          return experiments::run_fig2(trials, states, seed, cfg)
              .to_json_string(-1);
        },
        py::arg("trials"), py::arg("states"), py::arg("seed"),
        py::arg("config") = SearchConfig{});
  m.def("run_fig3",
        [](std::size_t trials, const std::vector<std::size_t>& states,
           std::uint64_t seed, const SearchConfig& cfg) {
          return experiments::run_fig3(trials, states, seed, cfg)
              .to_json_string(-1);
        },
        py::arg("trials"), py::arg("states"), py::arg("seed"),
        py::arg("config") = SearchConfig{});
  m.def("run_fig4",
        [](std::size_t trials, double norm, std::size_t states,
           std::uint64_t seed, const SearchConfig& cfg) {
          return experiments::run_fig4(trials, norm, states, seed, cfg)
              .to_json_string(-1);
        },
        py::arg("trials"), py::arg("norm"), py::arg("states"), py::arg("seed"),
        py::arg("config") = SearchConfig{});
}
