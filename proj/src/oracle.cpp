#include "syninfo/oracle.hpp"

#include <cmath>

#include "json.hpp"

namespace syninfo::oracle {

namespace {

double entropy_accum(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

/// A map is canonical when each output label first appears in order:
/// scanning inputs lexicographically, a new label must equal the count
/// of distinct labels seen so far.
bool is_canonical(const std::vector<std::size_t>& map) {
  std::size_t next = 0;
  for (std::size_t s : map) {
    if (s > next) return false;
    if (s == next) ++next;
  }
  return true;
}

std::vector<std::size_t> canonicalize(const std::vector<std::size_t>& map,
                                      std::size_t out_card) {
  std::vector<std::size_t> relabel(out_card, out_card);
  std::vector<std::size_t> out(map.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (relabel[map[i]] == out_card) relabel[map[i]] = next++;
    out[i] = relabel[map[i]];
  }
  return out;
}

}  // namespace

std::vector<DeterministicSrv> enumerate_srvs(const JointPmf& pmf,
                                             const VarSet& inputs,
                                             std::size_t out_cardinality,
                                             double leak_tol,
                                             std::size_t budget) {
  const VarSet in = normalize_vars(inputs, pmf.num_vars(), "enumerate inputs");
  if (in.empty()) {
    throw std::invalid_argument("enumerate_srvs: empty input set");
  }
  if (out_cardinality < 2) {
    throw std::invalid_argument("enumerate_srvs: out_cardinality must be >= 2");
  }

  const JointPmf marg = pmf.marginal(in);
  const std::size_t jx = marg.size();

  double total = 1.0;
  for (std::size_t i = 0; i < jx; ++i) {
    total *= static_cast<double>(out_cardinality);
    if (total > static_cast<double>(budget)) {
      throw EnumerationBudgetError(
          "enumerate_srvs: " + std::to_string(out_cardinality) + "^" +
          std::to_string(jx) + " candidate maps exceed the budget of " +
          std::to_string(budget));
    }
  }

  std::vector<DeterministicSrv> found;
  if (in.size() < 2) return found;  // sigma of a single variable is empty

  const auto& p_x = marg.probs();
  const std::size_t ni = in.size();
  std::vector<std::vector<std::size_t>> value_of(ni,
                                                 std::vector<std::size_t>(jx));
  std::vector<std::vector<double>> p_xi(ni);
  std::vector<double> h_xi(ni);
  for (std::size_t i = 0; i < ni; ++i) {
    p_xi[i].assign(marg.cardinalities()[i], 0.0);
  }
  for (std::size_t x = 0; x < jx; ++x) {
    const auto state = marg.index_to_state(x);
    for (std::size_t i = 0; i < ni; ++i) {
      value_of[i][x] = state[i];
      p_xi[i][state[i]] += p_x[x];
    }
  }
  for (std::size_t i = 0; i < ni; ++i) h_xi[i] = entropy_accum(p_xi[i]);

  std::vector<std::size_t> map(jx, 0);
  std::vector<double> p_s(out_cardinality);
  std::vector<double> joint;
  while (true) {
    if (is_canonical(map)) {
      std::fill(p_s.begin(), p_s.end(), 0.0);
      for (std::size_t x = 0; x < jx; ++x) p_s[map[x]] += p_x[x];
      const double mi_x = entropy_accum(p_s);  // H(S|X) = 0 for a map
      if (mi_x > leak_tol) {
        bool ok = true;
        std::vector<Bits> leaks(ni);
        for (std::size_t i = 0; i < ni && ok; ++i) {
          joint.assign(p_xi[i].size() * out_cardinality, 0.0);
          for (std::size_t x = 0; x < jx; ++x) {
            joint[value_of[i][x] * out_cardinality + map[x]] += p_x[x];
          }
          const double leak =
              std::max(0.0, h_xi[i] + mi_x - entropy_accum(joint));
          leaks[i] = leak;
          ok = leak <= leak_tol;
        }
        if (ok) {
          DeterministicSrv srv;
          srv.map = map;
          srv.out_cardinality = *std::max_element(map.begin(), map.end()) + 1;
          srv.mi_with_x = mi_x;
          srv.leakages = std::move(leaks);
          found.push_back(std::move(srv));
        }
      }
    }
    // Odometer increment, last digit fastest.
    std::size_t pos = jx;
    while (pos-- > 0) {
      if (++map[pos] < out_cardinality) break;
      map[pos] = 0;
      if (pos == 0) return found;
    }
  }
}

CliqueReport verify_clique(const JointPmf& pmf,
                           const std::vector<VarSet>& groups) {
  if (groups.size() < 2) {
    throw std::invalid_argument("verify_clique: need at least two groups");
  }
  std::vector<VarSet> gs;
  for (const auto& g : groups) {
    gs.push_back(normalize_vars(g, pmf.num_vars(), "clique group"));
  }
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (!disjoint(gs[i], gs[j])) {
        throw std::invalid_argument("verify_clique: groups overlap");
      }
    }
  }

  CliqueReport rep;
  const std::size_t n = gs.size();
  for (std::size_t k = 0; k < n; ++k) {
    VarSet rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) rest.insert(rest.end(), gs[j].begin(), gs[j].end());
    }
    rep.split_mi.push_back(mutual_info(pmf, rest, gs[k]));
  }
  rep.pairwise.assign(n, std::vector<Bits>(n, 0.0));
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Bits mi = mutual_info(pmf, gs[i], gs[j]);
      rep.pairwise[i][j] = rep.pairwise[j][i] = mi;
      if (mi > 1e-9) all_zero = false;
    }
  }
  rep.pairwise_zero = all_zero;
  const auto [lo, hi] =
      std::minmax_element(rep.split_mi.begin(), rep.split_mi.end());
  rep.split_spread = *hi - *lo;

  if (n == 3) {
    const Bits d = rep.split_mi[2];  // I(G1,G2 : G3)
    rep.corrected_residuals = {
        std::abs(rep.split_mi[0] - (d + rep.pairwise[0][2] - rep.pairwise[1][2])),
        std::abs(rep.split_mi[1] - (d + rep.pairwise[1][2] - rep.pairwise[0][2]))};
  }
  return rep;
}

std::string CliqueReport::to_json_string(int indent) const {
  nlohmann::json j{{"split_mi", split_mi},
                   {"pairwise", pairwise},
                   {"pairwise_zero", pairwise_zero},
                   {"split_spread", split_spread},
                   {"corrected_residuals", corrected_residuals}};
  return j.dump(indent);
}

CensusReport three_bit_msrv_census(std::size_t budget) {
  const JointPmf bits = JointPmf::uniform({2, 2, 2});
  const VarSet inputs{0, 1, 2};

  CensusReport rep;
  rep.classes = enumerate_srvs(bits, inputs, 2, 1e-9, budget);

  // Canonical maps of the three pairwise XORs over (x0, x1, x2),
  // index = x0*4 + x1*2 + x2.
  auto xor_map = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> map(8);
    for (std::size_t i = 0; i < 8; ++i) {
      const std::size_t va = (i >> (2 - a)) & 1;
      const std::size_t vb = (i >> (2 - b)) & 1;
      map[i] = va ^ vb;
    }
    return canonicalize(map, 2);
  };
  const std::vector<std::vector<std::size_t>> xors{xor_map(0, 1), xor_map(1, 2),
                                                   xor_map(0, 2)};

  auto find_class = [&](const std::vector<std::size_t>& m) {
    for (std::size_t k = 0; k < rep.classes.size(); ++k) {
      if (rep.classes[k].map == m) return k;
    }
    return rep.classes.size();
  };

  std::vector<std::size_t> xor_idx;
  for (const auto& m : xors) {
    const std::size_t k = find_class(m);
    if (k < rep.classes.size()) xor_idx.push_back(k);
  }
  rep.found_three_xors = xor_idx.size() == 3;

  // Pairwise MI between two deterministic maps on the uniform cube.
  auto pair_mi = [&](const std::vector<std::size_t>& f,
                     const std::vector<std::size_t>& g) {
    const std::size_t cf = *std::max_element(f.begin(), f.end()) + 1;
    const std::size_t cg = *std::max_element(g.begin(), g.end()) + 1;
    std::vector<double> joint(cf * cg, 0.0), pf(cf, 0.0), pg(cg, 0.0);
    for (std::size_t i = 0; i < 8; ++i) {
      joint[f[i] * cg + g[i]] += 0.125;
      pf[f[i]] += 0.125;
      pg[g[i]] += 0.125;
    }
    return std::max(0.0, entropy_accum(pf) + entropy_accum(pg) -
                             entropy_accum(joint));
  };

  // Grow a pairwise-independent selection starting from the XORs.
  rep.selected = xor_idx;
  for (std::size_t k = 0; k < rep.classes.size(); ++k) {
    if (std::find(rep.selected.begin(), rep.selected.end(), k) !=
        rep.selected.end()) {
      continue;
    }
    bool independent = true;
    for (std::size_t s : rep.selected) {
      if (pair_mi(rep.classes[k].map, rep.classes[s].map) > 1e-12) {
        independent = false;
        break;
      }
    }
    if (independent) rep.selected.push_back(k);
  }
  for (std::size_t i = 0; i < rep.selected.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.selected.size(); ++j) {
      rep.max_pairwise_mi_selected =
          std::max(rep.max_pairwise_mi_selected,
                   pair_mi(rep.classes[rep.selected[i]].map,
                           rep.classes[rep.selected[j]].map));
    }
  }

  // Joint entropy of the selected SRVs and the pairwise-XOR identities.
  JointPmf with_selected = bits;
  for (std::size_t s : rep.selected) {
    std::vector<std::size_t> lifted(with_selected.size());
    for (std::size_t i = 0; i < with_selected.size(); ++i) {
      lifted[i] = rep.classes[s].map[with_selected.sub_index(i, inputs)];
    }
    with_selected = with_selected.append_deterministic(
        lifted, rep.classes[s].out_cardinality);
  }
  VarSet selected_vars;
  for (std::size_t k = 0; k < rep.selected.size(); ++k) {
    selected_vars.push_back(3 + k);
  }
  if (!selected_vars.empty()) {
    rep.joint_entropy_selected = entropy(with_selected, selected_vars);
  }

  if (rep.found_three_xors) {
    JointPmf with_xors = bits;
    for (const auto& m : xors) {
      std::vector<std::size_t> lifted(with_xors.size());
      for (std::size_t i = 0; i < with_xors.size(); ++i) {
        lifted[i] = m[with_xors.sub_index(i, inputs)];
      }
      with_xors = with_xors.append_deterministic(lifted, 2);
    }
    rep.entropy_three_xors = entropy(with_xors, {3, 4, 5});
    rep.h_third_xor_given_two = cond_entropy(with_xors, {5}, {3, 4});
  }
  return rep;
}

std::string CensusReport::to_json_string(int indent) const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : this->classes) {
    classes.push_back({{"map", c.map},
                       {"out_cardinality", c.out_cardinality},
                       {"mi_with_x", c.mi_with_x},
                       {"leakages", c.leakages}});
  }
  nlohmann::json j{{"classes", classes},
                   {"selected", selected},
                   {"found_three_xors", found_three_xors},
                   {"max_pairwise_mi_selected", max_pairwise_mi_selected},
                   {"joint_entropy_selected", joint_entropy_selected},
                   {"entropy_three_xors", entropy_three_xors},
                   {"h_third_xor_given_two", h_third_xor_given_two}};
  return j.dump(indent);
}

}  // namespace syninfo::oracle
