#include "syninfo/joint_pmf.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace syninfo {

namespace {

constexpr double kSumTol = 1e-9;

std::vector<std::size_t> make_strides(const std::vector<std::size_t>& cards) {
  std::vector<std::size_t> strides(cards.size());
  std::size_t s = 1;
  for (std::size_t i = cards.size(); i-- > 0;) {
    strides[i] = s;
    s *= cards[i];
  }
  return strides;
}

void check_cardinalities(const std::vector<std::size_t>& cards) {
  if (cards.empty()) {
    throw std::invalid_argument("JointPmf: cardinality list is empty");
  }
  for (std::size_t c : cards) {
    if (c < 2) {
      throw std::invalid_argument("JointPmf: every cardinality must be >= 2");
    }
  }
}

std::size_t total_size(const std::vector<std::size_t>& cards) {
  std::size_t n = 1;
  for (std::size_t c : cards) {
    if (c != 0 && n > std::numeric_limits<std::size_t>::max() / c) {
      throw std::invalid_argument("JointPmf: joint table overflows size_t");
    }
    n *= c;
  }
  return n;
}

void format_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

// --- ConditionalPmf --------------------------------------------------------

std::size_t ConditionalPmf::num_rows() const {
  std::size_t n = 1;
  for (std::size_t c : given_cardinalities) n *= c;
  return n;
}

std::size_t ConditionalPmf::row_size() const {
  std::size_t n = 1;
  for (std::size_t c : target_cardinalities) n *= c;
  return n;
}

std::span<const double> ConditionalPmf::row(std::size_t r) const {
  const std::size_t w = row_size();
  return {table.data() + r * w, w};
}

void ConditionalPmf::validate() const {
  if (target_cardinalities.empty()) {
    throw std::invalid_argument("ConditionalPmf: no target variables");
  }
  const std::size_t rows = num_rows();
  const std::size_t w = row_size();
  if (table.size() != rows * w) {
    throw std::invalid_argument("ConditionalPmf: table size mismatch");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t j = 0; j < w; ++j) {
      const double p = table[r * w + j];
      if (!(p >= 0.0)) {
        throw std::invalid_argument("ConditionalPmf: negative entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
      throw std::invalid_argument("ConditionalPmf: row does not sum to 1");
    }
  }
}

// --- stick-breaking ---------------------------------------------------------

namespace detail {

void decode_dist(std::span<const double> params, std::span<double> out) {
  const std::size_t m = out.size();
  double remaining = 1.0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const double u = params[j];
    out[j] = remaining * u;
    remaining *= (1.0 - u);
  }
  out[m - 1] = remaining;
}

void encode_dist(std::span<const double> dist, std::span<double> out_params) {
  const std::size_t m = dist.size();
  double remaining = 1.0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    double u;
    if (remaining <= 1e-15) {
      // Remaining mass exhausted: parameters are unidentifiable, emit the
      // values that decode to a uniform split of (zero) residual mass.
      u = 1.0 / static_cast<double>(m - j);
    } else {
      u = dist[j] / remaining;
      u = std::min(1.0, std::max(0.0, u));
    }
    out_params[j] = u;
    remaining *= (1.0 - u);
  }
}

}  // namespace detail

// --- JointPmf ---------------------------------------------------------------

JointPmf::JointPmf(std::vector<std::size_t> cardinalities,
                   std::vector<double> probs)
    : cards_(std::move(cardinalities)),
      strides_(),
      probs_(std::move(probs)) {
  check_cardinalities(cards_);
  strides_ = make_strides(cards_);
  check_invariants();
}

void JointPmf::check_invariants() const {
  if (probs_.size() != total_size(cards_)) {
    throw std::invalid_argument(
        "JointPmf: probs size does not match cardinalities");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("JointPmf: negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument("JointPmf: probabilities do not sum to 1");
  }
}

JointPmf JointPmf::uniform(const std::vector<std::size_t>& cardinalities) {
  check_cardinalities(cardinalities);
  const std::size_t n = total_size(cardinalities);
  return JointPmf(cardinalities,
                  std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointPmf JointPmf::random(const std::vector<std::size_t>& cardinalities,
                          std::uint64_t seed) {
  check_cardinalities(cardinalities);
  const std::size_t n = total_size(cardinalities);
  Rng rng(seed);
  // Independent uniform weights per joint state, normalized. The states
  // are exchangeable, so each marginal entry has mean 1/cardinality.
  std::vector<double> probs(n);
  double sum = 0.0;
  for (double& p : probs) {
    p = rng.uniform();
    sum += p;
  }
  for (double& p : probs) p /= sum;
  return JointPmf(cardinalities, std::move(probs));
}

JointPmf JointPmf::from_params(const std::vector<std::size_t>& cardinalities,
                               const std::vector<double>& params) {
  check_cardinalities(cardinalities);
  const std::size_t n = total_size(cardinalities);
  if (params.size() != n - 1) {
    throw std::invalid_argument("from_params: expected size-1 parameters");
  }
  for (double u : params) {
    if (!(u >= 0.0 && u <= 1.0)) {
      throw std::invalid_argument("from_params: parameter outside [0,1]");
    }
  }

  // Walk the chain Pr(X1), Pr(X2|X1), ...: prefix masses get split by one
  // stick-breaking block per conditioning state.
  std::vector<double> masses{1.0};
  std::size_t offset = 0;
  for (std::size_t v = 0; v < cardinalities.size(); ++v) {
    const std::size_t m = cardinalities[v];
    std::vector<double> next(masses.size() * m);
    std::vector<double> row(m);
    for (std::size_t prefix = 0; prefix < masses.size(); ++prefix) {
      detail::decode_dist({params.data() + offset, m - 1}, row);
      offset += m - 1;
      for (std::size_t j = 0; j < m; ++j) {
        next[prefix * m + j] = masses[prefix] * row[j];
      }
    }
    masses.swap(next);
  }
  return JointPmf(cardinalities, std::move(masses));
}

std::vector<double> JointPmf::to_params() const {
  std::vector<double> params(size() - 1);
  // Row masses for progressively longer prefixes of the variable chain.
  std::vector<double> masses = probs_;
  std::vector<std::vector<double>> levels;  // levels[v] = masses over first v+1 vars
  levels.resize(cards_.size());
  levels[cards_.size() - 1] = masses;
  for (std::size_t v = cards_.size(); v-- > 1;) {
    const std::size_t m = cards_[v];
    std::vector<double> up(levels[v].size() / m, 0.0);
    for (std::size_t i = 0; i < up.size(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += levels[v][i * m + j];
      up[i] = s;
    }
    levels[v - 1] = std::move(up);
  }

  std::size_t offset = 0;
  std::vector<double> dist;
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    const std::size_t m = cards_[v];
    const std::size_t prefixes = levels[v].size() / m;
    dist.resize(m);
    for (std::size_t prefix = 0; prefix < prefixes; ++prefix) {
      const double mass = v == 0 ? 1.0 : levels[v - 1][prefix];
      if (mass <= 0.0) {
        for (std::size_t j = 0; j + 1 < m; ++j) {
          params[offset + j] = 1.0 / static_cast<double>(m - j);
        }
      } else {
        for (std::size_t j = 0; j < m; ++j) {
          dist[j] = levels[v][prefix * m + j] / mass;
        }
        detail::encode_dist(dist, {params.data() + offset, m - 1});
      }
      offset += m - 1;
    }
  }
  return params;
}

std::size_t JointPmf::state_to_index(std::span<const std::size_t> state) const {
  std::size_t idx = 0;
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    idx += state[v] * strides_[v];
  }
  return idx;
}

std::vector<std::size_t> JointPmf::index_to_state(std::size_t index) const {
  std::vector<std::size_t> state(cards_.size());
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    state[v] = (index / strides_[v]) % cards_[v];
  }
  return state;
}

std::size_t JointPmf::sub_index(std::size_t index, const VarSet& vars) const {
  std::size_t idx = 0;
  for (std::size_t v : vars) {
    idx = idx * cards_[v] + (index / strides_[v]) % cards_[v];
  }
  return idx;
}

JointPmf JointPmf::marginal(const VarSet& keep) const {
  const VarSet vars = normalize_vars(keep, num_vars(), "marginal");
  if (vars.empty()) {
    throw std::invalid_argument("marginal: empty variable set");
  }
  if (vars.size() == num_vars()) return *this;

  std::vector<std::size_t> out_cards;
  out_cards.reserve(vars.size());
  for (std::size_t v : vars) out_cards.push_back(cards_[v]);

  std::vector<double> out(total_size(out_cards), 0.0);
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    out[sub_index(i, vars)] += probs_[i];
  }
  return JointPmf(std::move(out_cards), std::move(out));
}

ConditionalPmf JointPmf::condition(const VarSet& target,
                                   const VarSet& given) const {
  const VarSet t = normalize_vars(target, num_vars(), "condition target");
  const VarSet g = normalize_vars(given, num_vars(), "condition given");
  if (t.empty()) {
    throw std::invalid_argument("condition: empty target set");
  }
  if (!disjoint(t, g)) {
    throw std::invalid_argument("condition: target and given overlap");
  }

  ConditionalPmf cond;
  for (std::size_t v : g) cond.given_cardinalities.push_back(cards_[v]);
  for (std::size_t v : t) cond.target_cardinalities.push_back(cards_[v]);
  const std::size_t rows = cond.num_rows();
  const std::size_t w = cond.row_size();
  cond.table.assign(rows * w, 0.0);

  std::vector<double> row_mass(rows, 0.0);
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const std::size_t r = sub_index(i, g);
    cond.table[r * w + sub_index(i, t)] += probs_[i];
    row_mass[r] += probs_[i];
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_mass[r] > 0.0) {
      for (std::size_t j = 0; j < w; ++j) cond.table[r * w + j] /= row_mass[r];
    } else {
      // Zero-mass conditioning state: represent as a uniform row.
      for (std::size_t j = 0; j < w; ++j) {
        cond.table[r * w + j] = 1.0 / static_cast<double>(w);
      }
    }
  }
  return cond;
}

JointPmf JointPmf::append_variable(const ConditionalPmf& cond) const {
  if (cond.given_cardinalities != cards_) {
    throw std::invalid_argument(
        "append_variable: conditional does not match joint states");
  }
  VarSet all(num_vars());
  std::iota(all.begin(), all.end(), 0);
  return append_from_inputs(all, cond);
}

JointPmf JointPmf::append_from_inputs(const VarSet& inputs,
                                      const ConditionalPmf& cond) const {
  const VarSet in = normalize_vars(inputs, num_vars(), "append inputs");
  cond.validate();
  std::vector<std::size_t> expect;
  for (std::size_t v : in) expect.push_back(cards_[v]);
  if (cond.given_cardinalities != expect) {
    throw std::invalid_argument(
        "append_from_inputs: conditional rows do not match input states");
  }
  if (cond.target_cardinalities.size() != 1) {
    throw std::invalid_argument(
        "append_from_inputs: conditional must target a single variable");
  }

  const std::size_t m = cond.target_cardinalities[0];
  std::vector<std::size_t> out_cards = cards_;
  out_cards.push_back(m);
  std::vector<double> out(probs_.size() * m);
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const std::size_t r = sub_index(i, in);
    for (std::size_t s = 0; s < m; ++s) {
      out[i * m + s] = probs_[i] * cond.table[r * m + s];
    }
  }
  return JointPmf(std::move(out_cards), std::move(out));
}

JointPmf JointPmf::append_deterministic(const std::vector<std::size_t>& map,
                                        std::size_t out_cardinality) const {
  if (map.size() != size()) {
    throw std::invalid_argument(
        "append_deterministic: map must cover every joint state");
  }
  if (out_cardinality < 2) {
    throw std::invalid_argument("append_deterministic: cardinality must be >= 2");
  }
  for (std::size_t s : map) {
    if (s >= out_cardinality) {
      throw std::invalid_argument("append_deterministic: map value out of range");
    }
  }
  std::vector<std::size_t> out_cards = cards_;
  out_cards.push_back(out_cardinality);
  std::vector<double> out(probs_.size() * out_cardinality, 0.0);
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    out[i * out_cardinality + map[i]] = probs_[i];
  }
  return JointPmf(std::move(out_cards), std::move(out));
}

// --- serialization ----------------------------------------------------------

std::string JointPmf::to_json_string(int indent) const {
  nlohmann::json j;
  j["cardinalities"] = cards_;
  j["probs"] = probs_;
  return j.dump(indent);
}

JointPmf JointPmf::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  return JointPmf(j.at("cardinalities").get<std::vector<std::size_t>>(),
                  j.at("probs").get<std::vector<double>>());
}

std::string JointPmf::to_csv() const {
  std::string out;
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    out += "x";
    out += std::to_string(v);
    out += ",";
  }
  out += "p\n";
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const auto state = index_to_state(i);
    for (std::size_t s : state) {
      out += std::to_string(s);
      out += ",";
    }
    format_double(out, probs_[i]);
    out += "\n";
  }
  return out;
}

JointPmf JointPmf::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("from_csv: empty input");
  }
  std::vector<std::vector<std::size_t>> states;
  std::vector<double> probs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() < 2) {
      throw std::invalid_argument("from_csv: malformed row");
    }
    std::vector<std::size_t> state;
    for (std::size_t k = 0; k + 1 < cells.size(); ++k) {
      state.push_back(static_cast<std::size_t>(std::stoull(cells[k])));
    }
    states.push_back(std::move(state));
    probs.push_back(std::stod(cells.back()));
  }
  if (states.empty()) {
    throw std::invalid_argument("from_csv: no data rows");
  }
  const std::size_t n = states[0].size();
  std::vector<std::size_t> cards(n, 0);
  for (const auto& st : states) {
    if (st.size() != n) {
      throw std::invalid_argument("from_csv: inconsistent column count");
    }
    for (std::size_t v = 0; v < n; ++v) {
      cards[v] = std::max(cards[v], st[v] + 1);
    }
  }
  const std::size_t expect = total_size(cards);
  if (states.size() != expect) {
    throw std::invalid_argument("from_csv: not all joint states present");
  }
  std::vector<double> dense(expect, 0.0);
  JointPmf shape = JointPmf::uniform(cards);  // for indexing only
  std::vector<bool> seen(expect, false);
  for (std::size_t r = 0; r < states.size(); ++r) {
    const std::size_t idx = shape.state_to_index(states[r]);
    if (seen[idx]) {
      throw std::invalid_argument("from_csv: duplicate joint state");
    }
    seen[idx] = true;
    dense[idx] = probs[r];
  }
  return JointPmf(std::move(cards), std::move(dense));
}

void JointPmf::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  if (path.extension() == ".csv") {
    out << to_csv();
  } else {
    out << to_json_string(2) << "\n";
  }
}

JointPmf JointPmf::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return from_json_string(text);
  }
  return from_csv(text);
}

// --- perturbations ----------------------------------------------------------

namespace {

// Random direction of given Euclidean length on the deterministic stream.
std::vector<double> random_direction(Rng& rng, std::size_t dim, double norm) {
  std::vector<double> d(dim);
  double len2 = 0.0;
  do {
    len2 = 0.0;
    for (double& x : d) {
      x = rng.normal();
      len2 += x * x;
    }
  } while (len2 <= 1e-300);
  const double scale = norm / std::sqrt(len2);
  for (double& x : d) x *= scale;
  return d;
}

double clipped_distance(std::vector<double>& point,
                        const std::vector<double>& origin) {
  double len2 = 0.0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    point[i] = std::min(1.0, std::max(0.0, point[i]));
    const double d = point[i] - origin[i];
    len2 += d * d;
  }
  return std::sqrt(len2);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

// Rebuild a joint over the original variable order from Pr(group) and
// Pr(rest | group), where group is ascending.
JointPmf recompose(const JointPmf& original, const VarSet& group,
                   const std::vector<double>& group_probs,
                   const ConditionalPmf& rest_given_group, const VarSet& rest) {
  std::vector<double> out(original.size());
  const std::size_t w = rest_given_group.row_size();
  for (std::size_t i = 0; i < original.size(); ++i) {
    const std::size_t gi = original.sub_index(i, group);
    const std::size_t ri = original.sub_index(i, rest);
    out[i] = group_probs[gi] * rest_given_group.table[gi * w + ri];
  }
  // Guard against drift from the clipped parameter arithmetic.
  double sum = 0.0;
  for (double p : out) sum += p;
  for (double& p : out) p /= sum;
  return JointPmf(original.cardinalities(), std::move(out));
}

VarSet complement(std::size_t n, const VarSet& vars) {
  VarSet rest;
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      rest.push_back(v);
    }
  }
  return rest;
}

}  // namespace

PerturbResult perturb_local(const JointPmf& pmf, std::size_t var, double norm,
                            std::uint64_t seed) {
  if (var >= pmf.num_vars()) {
    throw std::invalid_argument("perturb_local: variable out of range");
  }
  if (norm < 0.0) {
    throw std::invalid_argument("perturb_local: norm must be >= 0");
  }
  if (norm == 0.0) return {pmf, 0.0};

  const std::size_t m = pmf.cardinalities()[var];
  const VarSet group{var};
  const VarSet rest = complement(pmf.num_vars(), group);

  const JointPmf marg = pmf.marginal(group);
  std::vector<double> params(m - 1);
  detail::encode_dist(marg.probs(), params);

  Rng rng(seed);
  std::vector<double> moved = params;
  const auto dir = random_direction(rng, params.size(), norm);
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += dir[i];
  const double realized = clipped_distance(moved, params);

  std::vector<double> new_marg(m);
  detail::decode_dist(moved, new_marg);

  if (rest.empty()) {
    return {JointPmf(pmf.cardinalities(), std::move(new_marg)), realized};
  }
  const ConditionalPmf rest_cond = pmf.condition(rest, group);
  return {recompose(pmf, group, new_marg, rest_cond, rest), realized};
}

PerturbResult perturb_nonlocal(const JointPmf& pmf, std::size_t var_a,
                               std::size_t var_b, double norm,
                               std::uint64_t seed, double tol) {
  if (var_a >= pmf.num_vars() || var_b >= pmf.num_vars() || var_a == var_b) {
    throw std::invalid_argument("perturb_nonlocal: bad variable indices");
  }
  if (norm < 0.0 || tol <= 0.0) {
    throw std::invalid_argument("perturb_nonlocal: norm >= 0 and tol > 0 required");
  }
  if (norm == 0.0) return {pmf, 0.0};

  const std::size_t mb = pmf.cardinalities()[var_b];
  const VarSet pair = normalize_vars({var_a, var_b}, pmf.num_vars(), "pair");
  const VarSet rest = complement(pmf.num_vars(), pair);

  const std::vector<double> pa = pmf.marginal({var_a}).probs();
  const std::vector<double> pb = pmf.marginal({var_b}).probs();
  const ConditionalPmf b_given_a = pmf.condition({var_b}, {var_a});
  const std::size_t rows = b_given_a.num_rows();

  std::vector<double> params(rows * (mb - 1));
  for (std::size_t r = 0; r < rows; ++r) {
    detail::encode_dist(b_given_a.row(r),
                        {params.data() + r * (mb - 1), mb - 1});
  }

  Rng rng(seed);
  auto decode_rows = [&](const std::vector<double>& pt) {
    std::vector<double> table(rows * mb);
    for (std::size_t r = 0; r < rows; ++r) {
      detail::decode_dist({pt.data() + r * (mb - 1), mb - 1},
                          {table.data() + r * mb, mb});
    }
    return table;
  };
  auto marginal_b = [&](const std::vector<double>& table) {
    std::vector<double> q(mb, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = 0; j < mb; ++j) q[j] += pa[r] * table[r * mb + j];
    }
    return q;
  };

  std::vector<double> accepted_table;
  double realized = 0.0;
  bool found = false;
  std::vector<double> last_candidate;
  for (int attempt = 0; attempt < 100 && !found; ++attempt) {
    std::vector<double> moved = params;
    const auto dir = random_direction(rng, params.size(), norm);
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += dir[i];
    const double r = clipped_distance(moved, params);
    auto table = decode_rows(moved);
    if (total_variation(marginal_b(table), pb) <= tol) {
      accepted_table = std::move(table);
      realized = r;
      found = true;
    } else if (attempt == 99) {
      last_candidate = std::move(moved);
    }
  }

  if (!found) {
    // Alternating renormalization: pull the perturbed rows back toward the
    // original Pr(X_b) marginal while keeping rows normalized.
    auto table = decode_rows(last_candidate);
    for (int iter = 0; iter < 1000; ++iter) {
      auto q = marginal_b(table);
      if (total_variation(q, pb) <= 0.5 * tol) break;
      for (std::size_t r = 0; r < rows; ++r) {
        double sum = 0.0;
        for (std::size_t j = 0; j < mb; ++j) {
          double v = table[r * mb + j];
          v *= (q[j] > 1e-300) ? pb[j] / q[j] : 1.0;
          table[r * mb + j] = v;
          sum += v;
        }
        if (sum > 1e-300) {
          for (std::size_t j = 0; j < mb; ++j) table[r * mb + j] /= sum;
        }
      }
    }
    if (total_variation(marginal_b(table), pb) > tol) {
      throw ConvergenceError(
          "perturb_nonlocal: no admissible direction within retry budget");
    }
    std::vector<double> final_params(rows * (mb - 1));
    for (std::size_t r = 0; r < rows; ++r) {
      detail::encode_dist({table.data() + r * mb, mb},
                          {final_params.data() + r * (mb - 1), mb - 1});
    }
    double len2 = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double d = final_params[i] - params[i];
      len2 += d * d;
    }
    realized = std::sqrt(len2);
    accepted_table = std::move(table);
  }

  // Joint over (a, b) in ascending order, then the untouched remainder.
  std::vector<double> pair_probs;
  const bool a_first = var_a < var_b;
  const std::size_t ca = pa.size();
  pair_probs.assign(ca * mb, 0.0);
  for (std::size_t r = 0; r < ca; ++r) {
    for (std::size_t j = 0; j < mb; ++j) {
      const double p = pa[r] * accepted_table[r * mb + j];
      const std::size_t idx = a_first ? r * mb + j : j * ca + r;
      pair_probs[idx] = p;
    }
  }
  if (rest.empty()) {
    std::vector<std::size_t> cards;
    for (std::size_t v : pair) cards.push_back(pmf.cardinalities()[v]);
    double sum = 0.0;
    for (double p : pair_probs) sum += p;
    for (double& p : pair_probs) p /= sum;
    JointPmf out(cards, std::move(pair_probs));
    return {std::move(out), realized};
  }
  const ConditionalPmf rest_cond = pmf.condition(rest, pair);
  return {recompose(pmf, pair, pair_probs, rest_cond, rest), realized};
}

}  // namespace syninfo
