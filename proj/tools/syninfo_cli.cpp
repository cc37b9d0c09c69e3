#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syninfo/decomposition.hpp"
#include "syninfo/experiments.hpp"
#include "syninfo/oracle.hpp"
#include "syninfo/synergy.hpp"

namespace {

using namespace syninfo;

/// Bad argument content (as opposed to bad flags, which CLI11 catches).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VarSet parse_indices(const std::string& text) {
  VarSet out;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(cell, &pos);
      if (pos != cell.size()) throw std::invalid_argument(cell);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("not a variable index list: '" + text + "'");
    }
  }
  if (out.empty()) {
    throw UsageError("empty variable index list");
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, sep)) parts.push_back(cell);
  return parts;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Search-config flags shared by the SRV-driven subcommands. A --config
/// file is loaded first; explicitly passed flags override it.
struct SearchOptions {
  std::string config_path;
  SearchConfig flags;
  CLI::Option* o_srv_states = nullptr;
  CLI::Option* o_lambda = nullptr;
  CLI::Option* o_restarts = nullptr;
  CLI::Option* o_max_iters = nullptr;
  CLI::Option* o_success = nullptr;
  CLI::Option* o_indep = nullptr;
  CLI::Option* o_stop = nullptr;
  CLI::Option* o_seed = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "JSON file with search settings");
    o_srv_states = cmd->add_option("--srv-states", flags.srv_cardinality,
                                   "SRV state count (0 = match inputs)");
    o_lambda = cmd->add_option("--lambda", flags.penalty_weight,
                               "constraint penalty weight");
    o_restarts =
        cmd->add_option("--restarts", flags.num_restarts, "search restarts");
    o_max_iters = cmd->add_option("--max-iters", flags.max_iters,
                                  "simplex iterations per restart");
    o_success = cmd->add_option("--success-threshold", flags.success_threshold,
                                "relative error below which an SRV counts");
    o_indep = cmd->add_option("--independence-tol", flags.independence_tol,
                              "max I(S_k : prior SRVs)");
    o_stop = cmd->add_option("--stop-gain", flags.stop_gain,
                             "minimum I(S:X) for extending the sequence");
    o_seed = cmd->add_option("--seed", flags.seed, "random seed");
  }

  SearchConfig build() const {
    SearchConfig cfg;
    if (!config_path.empty()) {
      cfg = SearchConfig::from_json_string(read_file(config_path));
    }
    if (o_srv_states->count()) cfg.srv_cardinality = flags.srv_cardinality;
    if (o_lambda->count()) cfg.penalty_weight = flags.penalty_weight;
    if (o_restarts->count()) cfg.num_restarts = flags.num_restarts;
    if (o_max_iters->count()) cfg.max_iters = flags.max_iters;
    if (o_success->count()) cfg.success_threshold = flags.success_threshold;
    if (o_indep->count()) cfg.independence_tol = flags.independence_tol;
    if (o_stop->count()) cfg.stop_gain = flags.stop_gain;
    if (o_seed->count()) cfg.seed = flags.seed;
    cfg.validate();
    return cfg;
  }
};

nlohmann::json srv_result_json(const SrvResult& res) {
  nlohmann::json cond{{"given_cardinalities", res.cond.given_cardinalities},
                      {"srv_cardinality", res.cond.target_cardinalities},
                      {"table", res.cond.table}};
  return nlohmann::json{
      {"mi_with_x", res.mi_with_x},
      {"leakage", res.leakage},
      {"mi_with_prior_srvs", res.mi_with_prior_srvs},
      {"relative_error", std::isfinite(res.relative_error)
                             ? nlohmann::json(res.relative_error)
                             : nlohmann::json(nullptr)},
      {"succeeded", res.succeeded},
      {"cond", cond}};
}

int run_gen(std::size_t vars, std::size_t states, std::uint64_t seed,
            const std::string& out, const std::string& format) {
  const JointPmf pmf =
      JointPmf::random(std::vector<std::size_t>(vars, states), seed);
  write_output(format == "csv" ? pmf.to_csv() : pmf.to_json_string(2), out);
  return 0;
}

struct MeasureRequest {
  std::string kind;
  std::string args;
};

int run_measure(const std::string& in, const std::vector<MeasureRequest>& reqs,
                const std::string& out, const std::string& format) {
  const JointPmf pmf = JointPmf::load(in);
  nlohmann::json results = nlohmann::json::array();
  std::string text;
  std::string csv = "measure,args,value\n";
  for (const auto& req : reqs) {
    const auto parts = split(req.args, ':');
    double value = 0.0;
    if (req.kind == "entropy") {
      if (parts.size() != 1) throw UsageError("--entropy expects VARS");
      value = entropy(pmf, parse_indices(parts[0]));
    } else if (req.kind == "cond-entropy") {
      if (parts.size() != 2) throw UsageError("--cond-entropy expects T:G");
      value = cond_entropy(pmf, parse_indices(parts[0]),
                           parse_indices(parts[1]));
    } else if (req.kind == "mi") {
      if (parts.size() != 2) throw UsageError("--mi expects A:B");
      value = mutual_info(pmf, parse_indices(parts[0]),
                          parse_indices(parts[1]));
    } else if (req.kind == "cmi") {
      if (parts.size() != 3) throw UsageError("--cmi expects A:B:C");
      value = cond_mutual_info(pmf, parse_indices(parts[0]),
                               parse_indices(parts[1]),
                               parse_indices(parts[2]));
    } else {
      throw UsageError("unknown measure: " + req.kind);
    }
    results.push_back(
        {{"measure", req.kind}, {"args", req.args}, {"value", value}});
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    text += req.kind + " " + req.args + " " + buf + "\n";
    csv += req.kind + ",\"" + req.args + "\"," + buf + "\n";
  }
  if (format == "json") {
    write_output(results.dump(2), out);
  } else if (format == "csv") {
    write_output(csv, out);
  } else {
    write_output(text, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synergistic information toolkit for discrete distributions"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random joint distribution");
  std::size_t gen_vars = 2, gen_states = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_out, gen_format = "json";
  gen->add_option("--vars", gen_vars, "number of variables")
      ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  gen->add_option("--states", gen_states, "states per variable")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_option("--format", gen_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // measure
  auto* measure = app.add_subcommand("measure", "information measures");
  std::string measure_in, measure_out, measure_format = "text";
  std::vector<std::string> m_entropy, m_cond, m_mi, m_cmi;
  measure->add_option("--in", measure_in, "distribution file")->required();
  measure->add_option("--entropy", m_entropy, "H(VARS), e.g. 0,1");
  measure->add_option("--cond-entropy", m_cond, "H(T|G), e.g. 2:0,1");
  measure->add_option("--mi", m_mi, "I(A:B), e.g. 0,1:2");
  measure->add_option("--cmi", m_cmi, "I(A:B|C), e.g. 0:1:2");
  measure->add_option("--out", measure_out, "output file (default stdout)");
  measure->add_option("--format", measure_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // find-srv
  auto* findsrv = app.add_subcommand("find-srv", "search for a single SRV");
  std::string fs_in, fs_inputs, fs_out, fs_append_out;
  SearchOptions fs_opts;
  findsrv->add_option("--in", fs_in, "distribution file")->required();
  findsrv->add_option("--inputs", fs_inputs, "input variables, e.g. 0,1")
      ->required();
  findsrv->add_option("--out", fs_out, "result JSON (default stdout)");
  findsrv->add_option("--append-out", fs_append_out,
                      "write the distribution with the SRV appended");
  fs_opts.attach(findsrv);

  // synergy
  auto* synergy_cmd =
      app.add_subcommand("synergy", "estimate synergistic information");
  std::string sy_in, sy_inputs, sy_target, sy_out;
  SearchOptions sy_opts;
  synergy_cmd->add_option("--in", sy_in, "distribution file")->required();
  synergy_cmd->add_option("--inputs", sy_inputs, "input variables")->required();
  synergy_cmd
      ->add_option("--target", sy_target,
                   "target variables, or 'append-redundant' to append a "
                   "deterministic function of the inputs first")
      ->required();
  synergy_cmd->add_option("--out", sy_out, "result JSON (default stdout)");
  sy_opts.attach(synergy_cmd);

  // decompose
  auto* dec = app.add_subcommand("decompose", "orthogonal decomposition");
  std::string dc_in, dc_b, dc_a, dc_out, dc_config;
  DecompositionConfig dc_cfg;
  dec->add_option("--in", dc_in, "distribution file")->required();
  dec->add_option("--config", dc_config, "JSON file with solver settings");
  dec->add_option("--b", dc_b, "variables forming B")->required();
  dec->add_option("--a", dc_a, "variables forming A")->required();
  dec->add_option("--perp-states", dc_cfg.perp_cardinality,
                  "cardinality of the orthogonal part (0 = |B|)");
  dec->add_option("--par-states", dc_cfg.par_cardinality,
                  "cardinality of the parallel part (0 = |B|)");
  dec->add_option("--restarts", dc_cfg.num_restarts, "solver restarts");
  dec->add_option("--max-iters", dc_cfg.max_iters, "simplex iterations");
  dec->add_option("--tol", dc_cfg.tol, "convergence tolerance in bits");
  dec->add_option("--seed", dc_cfg.seed, "random seed");
  dec->add_option("--out", dc_out, "result JSON (default stdout)");

  // fig2 / fig3
  auto* fig2 = app.add_subcommand("fig2", "SRV success-rate experiment");
  auto* fig3 = app.add_subcommand("fig3", "SRV efficiency experiment");
  struct FigOpts {
    std::size_t trials = 30;
    std::string states = "2,3,4";
    std::string out, format = "csv";
    SearchOptions search;
  };
  FigOpts f2, f3;
  for (auto [cmd, opts] : {std::pair{fig2, &f2}, std::pair{fig3, &f3}}) {
    cmd->add_option("--trials", opts->trials, "trials per state count")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    cmd->add_option("--states", opts->states, "state counts, e.g. 2,3,4");
    cmd->add_option("--out", opts->out, "output file (default stdout)");
    cmd->add_option("--format", opts->format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    opts->search.attach(cmd);
  }

  // fig4
  auto* fig4 = app.add_subcommand("fig4", "perturbation-resilience experiment");
  std::size_t f4_trials = 30, f4_states = 3;
  double f4_norm = 0.1;
  std::string f4_out, f4_format = "csv";
  SearchOptions f4_search;
  fig4->add_option("--trials", f4_trials, "number of random distributions")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  fig4->add_option("--norm", f4_norm, "perturbation norm");
  fig4->add_option("--states", f4_states, "states per variable");
  fig4->add_option("--out", f4_out, "output file (default stdout)");
  fig4->add_option("--format", f4_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  f4_search.attach(fig4);

  // oracle-census
  auto* census = app.add_subcommand(
      "oracle-census", "brute-force census of the three-bit SRV classes");
  std::size_t census_budget = 10'000'000;
  std::string census_out;
  census->add_option("--budget", census_budget, "max candidate maps");
  census->add_option("--out", census_out, "output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return run_gen(gen_vars, gen_states, gen_seed, gen_out, gen_format);
    }
    if (measure->parsed()) {
      std::vector<MeasureRequest> reqs;
      for (const auto& s : m_entropy) reqs.push_back({"entropy", s});
      for (const auto& s : m_cond) reqs.push_back({"cond-entropy", s});
      for (const auto& s : m_mi) reqs.push_back({"mi", s});
      for (const auto& s : m_cmi) reqs.push_back({"cmi", s});
      if (reqs.empty()) throw UsageError("measure: no measure requested");
      return run_measure(measure_in, reqs, measure_out, measure_format);
    }
    if (findsrv->parsed()) {
      const JointPmf pmf = JointPmf::load(fs_in);
      const VarSet inputs = parse_indices(fs_inputs);
      const SearchConfig cfg = fs_opts.build();
      const SrvResult res = find_srv(pmf, inputs, cfg);
      write_output(srv_result_json(res).dump(2), fs_out);
      if (!fs_append_out.empty()) {
        pmf.append_from_inputs(normalize_vars(inputs, pmf.num_vars()), res.cond)
            .save(fs_append_out);
      }
      return 0;
    }
    if (synergy_cmd->parsed()) {
      JointPmf pmf = JointPmf::load(sy_in);
      const VarSet inputs = parse_indices(sy_inputs);
      const SearchConfig cfg = sy_opts.build();
      VarSet target;
      if (sy_target == "append-redundant") {
        // Append C = (joint input state index) mod m, a deterministic
        // function of the inputs with I(inputs : C) = H(C).
        const VarSet in = normalize_vars(inputs, pmf.num_vars());
        std::size_t m = 0;
        for (std::size_t v : in) m = std::max(m, pmf.cardinalities()[v]);
        std::vector<std::size_t> map(pmf.size());
        for (std::size_t i = 0; i < pmf.size(); ++i) {
          map[i] = pmf.sub_index(i, in) % m;
        }
        pmf = pmf.append_deterministic(map, m);
        target = {pmf.num_vars() - 1};
      } else {
        target = parse_indices(sy_target);
      }
      const SynergyEstimate est = estimate_synergy(pmf, inputs, target, cfg);
      nlohmann::json j = nlohmann::json::parse(est.to_json_string());
      j["inputs"] = inputs;
      j["target"] = target;
      j["whole_minus_sum"] = whole_minus_sum(pmf, inputs, target);
      write_output(j.dump(2), sy_out);
      return 0;
    }
    if (dec->parsed()) {
      const JointPmf pmf = JointPmf::load(dc_in);
      DecompositionConfig cfg = dc_cfg;
      if (!dc_config.empty()) {
        // Explicit flags still win over the file.
        cfg = DecompositionConfig::from_json_string(read_file(dc_config));
        if (dec->count("--perp-states")) cfg.perp_cardinality = dc_cfg.perp_cardinality;
        if (dec->count("--par-states")) cfg.par_cardinality = dc_cfg.par_cardinality;
        if (dec->count("--restarts")) cfg.num_restarts = dc_cfg.num_restarts;
        if (dec->count("--max-iters")) cfg.max_iters = dc_cfg.max_iters;
        if (dec->count("--tol")) cfg.tol = dc_cfg.tol;
        if (dec->count("--seed")) cfg.seed = dc_cfg.seed;
      }
      const DecompositionResult res =
          decompose(pmf, parse_indices(dc_b), parse_indices(dc_a), cfg);
      write_output(res.to_json_string(2), dc_out);
      return 0;
    }
    auto run_fig23 = [&](FigOpts& o, bool efficiency) {
      std::vector<std::size_t> states;
      for (std::size_t v : parse_indices(o.states)) states.push_back(v);
      const SearchConfig cfg = o.search.build();
      const auto rep =
          efficiency
              ? experiments::run_fig3(o.trials, states, cfg.seed, cfg)
              : experiments::run_fig2(o.trials, states, cfg.seed, cfg);
      write_output(o.format == "json" ? rep.to_json_string(2) : rep.to_csv(),
                   o.out);
      return 0;
    };
    if (fig2->parsed()) return run_fig23(f2, false);
    if (fig3->parsed()) return run_fig23(f3, true);
    if (fig4->parsed()) {
      const SearchConfig cfg = f4_search.build();
      const auto rep =
          experiments::run_fig4(f4_trials, f4_norm, f4_states, cfg.seed, cfg);
      write_output(f4_format == "json" ? rep.to_json_string(2) : rep.to_csv(),
                   f4_out);
      return 0;
    }
    if (census->parsed()) {
      const auto rep = oracle::three_bit_msrv_census(census_budget);
      write_output(rep.to_json_string(2), census_out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
