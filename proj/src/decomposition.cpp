#include "syninfo/decomposition.hpp"

#include <cmath>
#include <limits>

#include "detail/nelder_mead.hpp"
#include "json.hpp"

namespace syninfo {

namespace {

VarSet merged_unique(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The decomposition identities relate sets that may share variables
// (A and B overlap in the exactly-decomposable fixtures), so these local
// variants merge-with-dedup instead of requiring disjointness.
Bits mi_overlap(const JointPmf& pmf, const VarSet& a, const VarSet& b) {
  return detail::clamp_mi(entropy(pmf, a) + entropy(pmf, b) -
                          entropy(pmf, merged_unique(a, b)));
}

Bits cmi_overlap(const JointPmf& pmf, const VarSet& a, const VarSet& b,
                 const VarSet& c) {
  const Bits h_ac = entropy(pmf, merged_unique(a, c));
  const Bits h_bc = entropy(pmf, merged_unique(b, c));
  const Bits h_c = entropy(pmf, c);
  const Bits h_abc = entropy(pmf, merged_unique(merged_unique(a, b), c));
  return detail::clamp_mi(h_ac + h_bc - h_c - h_abc);
}

double entropy_accum(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

/// Residual evaluation over the reduced alphabet (a_state, b_state,
/// perp, par). Everything the six conditions need is a marginal entropy
/// of this 4-dimensional table.
class DecompObjective {
 public:
  DecompObjective(const JointPmf& pmf, const VarSet& a, const VarSet& b,
                  std::size_t cp, std::size_t cl)
      : cp_(cp), cl_(cl) {
    const VarSet ab = merged_unique(a, b);
    rows_ = 1;
    for (std::size_t v : ab) rows_ *= pmf.cardinalities()[v];
    ja_ = 1;
    for (std::size_t v : a) ja_ *= pmf.cardinalities()[v];
    jb_ = 1;
    for (std::size_t v : b) jb_ *= pmf.cardinalities()[v];

    p_row_.assign(rows_, 0.0);
    a_of_row_.assign(rows_, 0);
    b_of_row_.assign(rows_, 0);
    const auto& probs = pmf.probs();
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const std::size_t r = pmf.sub_index(i, ab);
      p_row_[r] += probs[i];
      a_of_row_[r] = pmf.sub_index(i, a);
      b_of_row_[r] = pmf.sub_index(i, b);
    }

    std::vector<double> pa(ja_, 0.0), pb(jb_, 0.0), pab(ja_ * jb_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      pa[a_of_row_[r]] += p_row_[r];
      pb[b_of_row_[r]] += p_row_[r];
      pab[a_of_row_[r] * jb_ + b_of_row_[r]] += p_row_[r];
    }
    h_a_ = entropy_accum(pa);
    h_b_ = entropy_accum(pb);
    mi_ab_ = std::max(0.0, h_a_ + h_b_ - entropy_accum(pab));
  }

  std::size_t dim() const { return rows_ * (cp_ * cl_ - 1); }
  std::size_t rows() const { return rows_; }
  std::size_t pair_card() const { return cp_ * cl_; }
  double h_b() const { return h_b_; }
  double mi_ab() const { return mi_ab_; }

  void decode(std::span<const double> params, std::vector<double>& table) const {
    const std::size_t w = cp_ * cl_;
    table.resize(rows_ * w);
    for (std::size_t r = 0; r < rows_; ++r) {
      detail::decode_dist({params.data() + r * (w - 1), w - 1},
                          {table.data() + r * w, w});
    }
  }

  DecompositionResiduals residuals(const std::vector<double>& table) const {
    const std::size_t w = cp_ * cl_;
    // Accumulate the joints the six conditions need.
    std::vector<double> p_uv(w, 0.0);
    std::vector<double> p_u(cp_, 0.0), p_v(cl_, 0.0);
    std::vector<double> p_ua(cp_ * ja_, 0.0), p_va(cl_ * ja_, 0.0);
    std::vector<double> p_vb(cl_ * jb_, 0.0);
    std::vector<double> p_uvb(w * jb_, 0.0);
    std::vector<double> p_vab(cl_ * ja_ * jb_, 0.0);
    std::vector<double> p_ab(ja_ * jb_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const double pr = p_row_[r];
      if (pr == 0.0) continue;
      const std::size_t ai = a_of_row_[r];
      const std::size_t bi = b_of_row_[r];
      p_ab[ai * jb_ + bi] += pr;
      for (std::size_t u = 0; u < cp_; ++u) {
        for (std::size_t v = 0; v < cl_; ++v) {
          const double q = pr * table[r * w + u * cl_ + v];
          if (q == 0.0) continue;
          p_uv[u * cl_ + v] += q;
          p_u[u] += q;
          p_v[v] += q;
          p_ua[u * ja_ + ai] += q;
          p_va[v * ja_ + ai] += q;
          p_vb[v * jb_ + bi] += q;
          p_uvb[(u * cl_ + v) * jb_ + bi] += q;
          p_vab[(v * ja_ + ai) * jb_ + bi] += q;
        }
      }
    }

    const double h_uv = entropy_accum(p_uv);
    const double h_u = entropy_accum(p_u);
    const double h_v = entropy_accum(p_v);
    const double h_ua = entropy_accum(p_ua);
    const double h_va = entropy_accum(p_va);
    const double h_vb = entropy_accum(p_vb);
    const double h_uvb = entropy_accum(p_uvb);
    const double h_vab = entropy_accum(p_vab);
    const double h_ab = entropy_accum(p_ab);

    const double mi_uv_b = std::max(0.0, h_uv + h_b_ - h_uvb);
    const double mi_u_a = std::max(0.0, h_u + h_a_ - h_ua);
    const double mi_v_a = std::max(0.0, h_v + h_a_ - h_va);
    const double mi_v_a_given_b = std::max(0.0, h_vb + h_ab - h_b_ - h_vab);
    const double mi_v_b = std::max(0.0, h_v + h_b_ - h_vb);
    const double mi_u_v = std::max(0.0, h_u + h_v - h_uv);

    DecompositionResiduals res;
    res.sufficiency = std::abs(mi_uv_b - h_b_);
    res.orthogonality = mi_u_a;
    res.parallelism = std::abs(mi_v_a - mi_ab_);
    res.non_spuriousness = mi_v_a_given_b;
    res.parsimony = std::abs(mi_v_b - mi_ab_);
    res.independence = mi_u_v;
    return res;
  }

  double objective(const DecompositionResiduals& r) const {
    // Equal weights on all six conditions, independence included to
    // guide the search toward candidates satisfying the implied
    // constraint as well.
    return r.sufficiency * r.sufficiency + r.orthogonality * r.orthogonality +
           r.parallelism * r.parallelism +
           r.non_spuriousness * r.non_spuriousness +
           r.parsimony * r.parsimony + r.independence * r.independence;
  }

 private:
  std::size_t cp_, cl_;
  std::size_t rows_ = 0, ja_ = 0, jb_ = 0;
  std::vector<double> p_row_;
  std::vector<std::size_t> a_of_row_, b_of_row_;
  double h_a_ = 0.0, h_b_ = 0.0, mi_ab_ = 0.0;
};

std::vector<double> uniform_rows(std::size_t rows, std::size_t card) {
  std::vector<double> params(rows * (card - 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j + 1 < card; ++j) {
      params[r * (card - 1) + j] = 1.0 / static_cast<double>(card - j);
    }
  }
  return params;
}

std::vector<double> snap_rows(const std::vector<double>& table,
                              std::size_t rows, std::size_t card) {
  std::vector<double> params(rows * (card - 1), 0.0);
  std::vector<double> row(card);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < card; ++s) {
      if (table[r * card + s] > table[r * card + best]) best = s;
    }
    std::fill(row.begin(), row.end(), 0.0);
    row[best] = 1.0;
    detail::encode_dist(row, {params.data() + r * (card - 1), card - 1});
  }
  return params;
}

std::vector<std::size_t> assignment_of(const std::vector<double>& table,
                                       std::size_t rows, std::size_t card) {
  std::vector<std::size_t> assign(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < card; ++s) {
      if (table[r * card + s] > table[r * card + best]) best = s;
    }
    assign[r] = best;
  }
  return assign;
}

std::vector<double> params_of_assignment(const std::vector<std::size_t>& assign,
                                         std::size_t card) {
  std::vector<double> params(assign.size() * (card - 1), 0.0);
  std::vector<double> row(card);
  for (std::size_t r = 0; r < assign.size(); ++r) {
    std::fill(row.begin(), row.end(), 0.0);
    row[assign[r]] = 1.0;
    detail::encode_dist(row, {params.data() + r * (card - 1), card - 1});
  }
  return params;
}

/// Greedy sweeps over deterministic pair assignments: change one row's
/// symbol at a time whenever it lowers the residual objective. Exact
/// decompositions sit at such corners, and the discrete landscape is
/// small enough to search exhaustively row by row.
std::vector<std::size_t> icm_refine(const DecompObjective& obj,
                                    std::vector<std::size_t> assign) {
  const std::size_t card = obj.pair_card();
  std::vector<double> table;
  auto value = [&](const std::vector<std::size_t>& a) {
    obj.decode(params_of_assignment(a, card), table);
    return obj.objective(obj.residuals(table));
  };
  double best = value(assign);
  for (int sweep = 0; sweep < 50; ++sweep) {
    bool improved = false;
    for (std::size_t r = 0; r < assign.size(); ++r) {
      const std::size_t original = assign[r];
      std::size_t best_symbol = original;
      for (std::size_t s = 0; s < card; ++s) {
        if (s == original) continue;
        assign[r] = s;
        const double v = value(assign);
        if (v < best) {
          best = v;
          best_symbol = s;
          improved = true;
        }
      }
      assign[r] = best_symbol;
    }
    if (!improved) break;
  }
  return assign;
}

}  // namespace

void DecompositionConfig::validate() const {
  if (perp_cardinality == 1 || par_cardinality == 1) {
    throw std::invalid_argument(
        "DecompositionConfig: part cardinalities must be 0 or >= 2");
  }
  if (num_restarts == 0 || max_iters == 0) {
    throw std::invalid_argument(
        "DecompositionConfig: restarts and iterations must be positive");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("DecompositionConfig: tol must be positive");
  }
}

DecompositionConfig DecompositionConfig::from_json_string(
    const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  DecompositionConfig c;
  if (j.contains("perp_cardinality")) c.perp_cardinality = j["perp_cardinality"];
  if (j.contains("par_cardinality")) c.par_cardinality = j["par_cardinality"];
  if (j.contains("num_restarts")) c.num_restarts = j["num_restarts"];
  if (j.contains("max_iters")) c.max_iters = j["max_iters"];
  if (j.contains("tol")) c.tol = j["tol"];
  if (j.contains("seed")) c.seed = j["seed"];
  c.validate();
  return c;
}

double DecompositionResiduals::max_residual() const {
  return std::max({sufficiency, orthogonality, parallelism, non_spuriousness,
                   parsimony, independence});
}

std::string DecompositionResiduals::to_json_string(int indent) const {
  nlohmann::json j{{"sufficiency", sufficiency},
                   {"orthogonality", orthogonality},
                   {"parallelism", parallelism},
                   {"non_spuriousness", non_spuriousness},
                   {"parsimony", parsimony},
                   {"independence", independence}};
  return j.dump(indent);
}

std::string DecompositionResult::to_json_string(int indent) const {
  nlohmann::json j{
      {"residuals", nlohmann::json::parse(residuals.to_json_string())},
      {"converged", converged},
      {"perp_cond", perp_cond.table},
      {"parallel_cond", parallel_cond.table},
      {"perp_cardinality", perp_cond.target_cardinalities[0]},
      {"par_cardinality", parallel_cond.target_cardinalities[0]}};
  return j.dump(indent);
}

DecompositionResult decompose(const JointPmf& pmf, const VarSet& b,
                              const VarSet& a,
                              const DecompositionConfig& config) {
  config.validate();
  const VarSet av = normalize_vars(a, pmf.num_vars(), "decompose a");
  const VarSet bv = normalize_vars(b, pmf.num_vars(), "decompose b");
  if (av.empty() || bv.empty()) {
    throw std::invalid_argument("decompose: empty variable set");
  }

  std::size_t jb = 1;
  for (std::size_t v : bv) jb *= pmf.cardinalities()[v];
  const std::size_t cp =
      config.perp_cardinality ? config.perp_cardinality : jb;
  const std::size_t cl = config.par_cardinality ? config.par_cardinality : jb;

  const DecompObjective obj(pmf, av, bv, cp, cl);
  const std::size_t rows = obj.rows();
  const std::size_t w = obj.pair_card();

  auto f = [&obj](std::span<const double> params) {
    thread_local std::vector<double> table;
    obj.decode(params, table);
    return obj.objective(obj.residuals(table));
  };

  std::vector<double> best_params;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<double> table;
  auto consider = [&](const std::vector<double>& params) {
    obj.decode(params, table);
    const double v = obj.objective(obj.residuals(table));
    if (v < best_val) {
      best_val = v;
      best_params = params;
    }
  };

  for (std::size_t r = 0; r < config.num_restarts; ++r) {
    std::vector<double> x0;
    if (r == 0) {
      x0 = uniform_rows(rows, w);
    } else {
      Rng rng(subseed(config.seed, 0x0DEC + r));
      x0.resize(obj.dim());
      for (double& u : x0) u = rng.uniform();
    }
    auto nm = detail::nelder_mead_box01(f, std::move(x0), 0.15,
                                        config.max_iters, 1e-18, 1e-12);
    consider(nm.x);
    obj.decode(nm.x, table);
    consider(snap_rows(table, rows, w));
    // Discrete refinement from the rounded candidate: exact
    // decompositions are deterministic assignments.
    consider(params_of_assignment(
        icm_refine(obj, assignment_of(table, rows, w)), w));
    // Residuals far below tolerance: further restarts cannot change the
    // converged verdict.
    if (best_val < 1e-12 * config.tol * config.tol) break;
  }
  // Purely discrete restarts are cheap and catch corners the continuous
  // search walks past.
  for (std::size_t r = 0; r < 4 && best_val >= 1e-12 * config.tol * config.tol;
       ++r) {
    Rng rng(subseed(config.seed, 0x1CE0 + r));
    std::vector<std::size_t> assign(rows);
    for (auto& a : assign) a = rng.raw() % w;
    consider(params_of_assignment(icm_refine(obj, std::move(assign)), w));
  }

  DecompositionResult result{.perp_cond = {},
                             .parallel_cond = {},
                             .pair_cond = {},
                             .residuals = {},
                             .converged = false,
                             .augmented = pmf};
  obj.decode(best_params, table);
  result.residuals = obj.residuals(table);
  result.converged = result.residuals.max_residual() <= config.tol;

  const VarSet ab = merged_unique(av, bv);
  std::vector<std::size_t> given_cards;
  for (std::size_t v : ab) given_cards.push_back(pmf.cardinalities()[v]);

  result.pair_cond.given_cardinalities = given_cards;
  result.pair_cond.target_cardinalities = {cp, cl};
  result.pair_cond.table = table;

  result.perp_cond.given_cardinalities = given_cards;
  result.perp_cond.target_cardinalities = {cp};
  result.perp_cond.table.assign(rows * cp, 0.0);
  result.parallel_cond.given_cardinalities = given_cards;
  result.parallel_cond.target_cardinalities = {cl};
  result.parallel_cond.table.assign(rows * cl, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t u = 0; u < cp; ++u) {
      for (std::size_t v = 0; v < cl; ++v) {
        const double q = table[r * w + u * cl + v];
        result.perp_cond.table[r * cp + u] += q;
        result.parallel_cond.table[r * cl + v] += q;
      }
    }
  }

  // Append the pair to the input distribution: Bperp then Bpar.
  {
    ConditionalPmf perp = result.perp_cond;
    JointPmf aug = pmf.append_from_inputs(ab, perp);
    // Pr(Bpar | everything incl. Bperp) from the pair conditional.
    ConditionalPmf par;
    par.given_cardinalities = aug.cardinalities();
    par.target_cardinalities = {cl};
    par.table.assign(aug.size() * cl, 0.0);
    for (std::size_t i = 0; i < aug.size(); ++i) {
      const std::size_t r = aug.sub_index(i, ab);
      const std::size_t u = i % cp;  // Bperp is the last variable of aug
      double row_mass = 0.0;
      for (std::size_t v = 0; v < cl; ++v) row_mass += table[r * w + u * cl + v];
      for (std::size_t v = 0; v < cl; ++v) {
        par.table[i * cl + v] = row_mass > 0.0
                                    ? table[r * w + u * cl + v] / row_mass
                                    : 1.0 / static_cast<double>(cl);
      }
    }
    result.augmented = aug.append_variable(par);
  }
  return result;
}

DecompositionResiduals verify_decomposition(const JointPmf& pmf,
                                            const VarSet& a, const VarSet& b,
                                            const VarSet& b_perp,
                                            const VarSet& b_parallel) {
  const VarSet av = normalize_vars(a, pmf.num_vars(), "verify a");
  const VarSet bv = normalize_vars(b, pmf.num_vars(), "verify b");
  const VarSet pv = normalize_vars(b_perp, pmf.num_vars(), "verify b_perp");
  const VarSet lv =
      normalize_vars(b_parallel, pmf.num_vars(), "verify b_parallel");
  if (av.empty() || bv.empty() || pv.empty() || lv.empty()) {
    throw std::invalid_argument("verify_decomposition: empty variable set");
  }
  if (!disjoint(pv, lv) || !disjoint(pv, av) || !disjoint(pv, bv) ||
      !disjoint(lv, av) || !disjoint(lv, bv)) {
    throw std::invalid_argument(
        "verify_decomposition: parts must be distinct from A, B and "
        "each other");
  }

  const Bits h_b = entropy(pmf, bv);
  const Bits mi_ab = mi_overlap(pmf, av, bv);

  DecompositionResiduals res;
  res.sufficiency = std::abs(mi_overlap(pmf, merged_unique(pv, lv), bv) - h_b);
  res.orthogonality = mi_overlap(pmf, pv, av);
  res.parallelism = std::abs(mi_overlap(pmf, lv, av) - mi_ab);
  res.non_spuriousness = cmi_overlap(pmf, lv, av, bv);
  res.parsimony = std::abs(mi_overlap(pmf, lv, bv) - mi_ab);
  res.independence = mi_overlap(pmf, pv, lv);
  return res;
}

JointPmf binary_pair_pmf(double p_a, double p_b) {
  if (!(p_a > 0.0 && p_a < 1.0) || !(p_b >= 0.0 && p_b <= 1.0)) {
    throw std::invalid_argument("binary_pair_pmf: p_a in (0,1), p_b in [0,1]");
  }
  const double pa[2] = {1.0 - p_a, p_a};
  std::vector<double> probs(4);
  for (std::size_t av = 0; av < 2; ++av) {
    for (std::size_t bv = 0; bv < 2; ++bv) {
      probs[av * 2 + bv] = pa[av] * (av == bv ? p_b : 1.0 - p_b);
    }
  }
  return JointPmf({2, 2}, std::move(probs));
}

JointPmf binary_channel_pmf(double p_a, double p_b, double p_c0, double p_c1) {
  const JointPmf ab = binary_pair_pmf(p_a, p_b);
  const double pc[2] = {p_c0, p_c1};
  std::vector<double> probs(8);
  for (std::size_t av = 0; av < 2; ++av) {
    for (std::size_t bv = 0; bv < 2; ++bv) {
      for (std::size_t cv = 0; cv < 2; ++cv) {
        const double cond = cv == bv ? pc[bv] : 1.0 - pc[bv];
        probs[(av * 2 + bv) * 2 + cv] = ab.probs()[av * 2 + bv] * cond;
      }
    }
  }
  return JointPmf({2, 2, 2}, std::move(probs));
}

BinaryScanReport binary_impossibility_scan(double p_a, double p_b,
                                           std::size_t grid_size) {
  if (!(p_a > 0.0 && p_a < 1.0) || !(p_b > 0.0 && p_b < 1.0)) {
    throw std::invalid_argument(
        "binary_impossibility_scan: p_a and p_b must lie in (0,1)");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("binary_impossibility_scan: grid_size >= 2");
  }

  BinaryScanReport report;
  report.p_a = p_a;
  report.p_b = p_b;
  report.grid_size = grid_size;

  auto at = [grid_size](std::size_t i) {
    return static_cast<double>(i) / static_cast<double>(grid_size - 1);
  };
  auto eval = [&](double c0, double c1) {
    const JointPmf j = binary_channel_pmf(p_a, p_b, c0, c1);
    BinaryScanPoint pt;
    pt.p_c0 = c0;
    pt.p_c1 = c1;
    pt.mi_perp_a = mutual_info(j, {2}, {0});
    pt.mi_perp_b = mutual_info(j, {2}, {1});
    return pt;
  };

  for (std::size_t i = 0; i < grid_size; ++i) {
    for (std::size_t k = 0; k < grid_size; ++k) {
      const BinaryScanPoint pt = eval(at(i), at(k));
      if (pt.mi_perp_a <= 1e-9) {
        ++report.num_orthogonal_points;
        report.max_mi_b_when_orthogonal =
            std::max(report.max_mi_b_when_orthogonal, pt.mi_perp_b);
        if (pt.mi_perp_b > 1e-9) report.orthogonality_implies_no_info = false;
      }
      report.grid.push_back(pt);
    }
  }
  for (std::size_t i = 0; i < grid_size; ++i) {
    const BinaryScanPoint pt = eval(at(i), 1.0 - at(i));
    report.max_line_mi_perp_a = std::max(report.max_line_mi_perp_a, pt.mi_perp_a);
    report.max_line_mi_perp_b = std::max(report.max_line_mi_perp_b, pt.mi_perp_b);
    report.line.push_back(pt);
  }
  return report;
}

std::string BinaryScanReport::to_json_string(int indent) const {
  auto points = [](const std::vector<BinaryScanPoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) {
      arr.push_back({{"p_c0", p.p_c0},
                     {"p_c1", p.p_c1},
                     {"mi_perp_a", p.mi_perp_a},
                     {"mi_perp_b", p.mi_perp_b}});
    }
    return arr;
  };
  nlohmann::json j{
      {"p_a", p_a},
      {"p_b", p_b},
      {"grid_size", grid_size},
      {"grid", points(grid)},
      {"line", points(line)},
      {"max_line_mi_perp_a", max_line_mi_perp_a},
      {"max_line_mi_perp_b", max_line_mi_perp_b},
      {"orthogonality_implies_no_info", orthogonality_implies_no_info},
      {"num_orthogonal_points", num_orthogonal_points},
      {"max_mi_b_when_orthogonal", max_mi_b_when_orthogonal}};
  return j.dump(indent);
}

WynerReport wyner_condition_check(const JointPmf& pmf, const VarSet& a,
                                  const VarSet& b, const VarSet& w,
                                  double premise_tol, double conclusion_tol) {
  const VarSet av = normalize_vars(a, pmf.num_vars(), "wyner a");
  const VarSet bv = normalize_vars(b, pmf.num_vars(), "wyner b");
  const VarSet wv = normalize_vars(w, pmf.num_vars(), "wyner w");
  if (av.empty() || bv.empty() || wv.empty()) {
    throw std::invalid_argument("wyner_condition_check: empty variable set");
  }

  const Bits mi_ab = mi_overlap(pmf, av, bv);

  WynerReport rep;
  rep.premise_tol = premise_tol;
  rep.conclusion_tol = conclusion_tol;
  rep.premise_common_gap =
      std::abs(mi_overlap(pmf, wv, merged_unique(av, bv)) - mi_ab);
  rep.premise_markov = cmi_overlap(pmf, av, bv, wv);
  rep.applicable = rep.premise_common_gap <= premise_tol &&
                   rep.premise_markov <= premise_tol;

  rep.non_spuriousness = cmi_overlap(pmf, wv, av, bv);
  rep.parallelism_gap = std::abs(mi_overlap(pmf, av, wv) - mi_ab);
  rep.parsimony_gap = std::abs(mi_overlap(pmf, bv, wv) - mi_ab);
  rep.conclusions_hold = rep.applicable &&
                         rep.non_spuriousness <= conclusion_tol &&
                         rep.parallelism_gap <= conclusion_tol &&
                         rep.parsimony_gap <= conclusion_tol;
  return rep;
}

std::string WynerReport::to_json_string(int indent) const {
  nlohmann::json j{{"premise_common_gap", premise_common_gap},
                   {"premise_markov", premise_markov},
                   {"applicable", applicable},
                   {"non_spuriousness", non_spuriousness},
                   {"parallelism_gap", parallelism_gap},
                   {"parsimony_gap", parsimony_gap},
                   {"conclusions_hold", conclusions_hold},
                   {"premise_tol", premise_tol},
                   {"conclusion_tol", conclusion_tol}};
  return j.dump(indent);
}

}  // namespace syninfo
