#include "rgl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "rgl/dfs.hpp"
#include "rgl/errors.hpp"
#include "rgl/expander.hpp"
#include "rgl/ham.hpp"
#include "rgl/trial_runner.hpp"

namespace rgl {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int components;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), components(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
};

bool snapshot_has(const EdgeProcess& proc, std::uint64_t m,
                  const MonotoneProperty& property) {
  const Graph g = proc.snapshot(m);
  if (const auto* md = std::get_if<MinDegreeAtLeast>(&property)) {
    return g.min_degree() >= md->d;
  }
  if (std::get_if<Connected>(&property)) {
    return is_connected(g);
  }
  const auto& pl = std::get<PathLengthAtLeast>(property);
  return exact_longest_path(g) >= pl.length;
}

std::uint64_t hitting_time_incremental(const EdgeProcess& proc,
                                       const MonotoneProperty& property) {
  const int n = proc.vertex_count();
  if (const auto* md = std::get_if<MinDegreeAtLeast>(&property)) {
    if (md->d <= 0) return 0;
    if (md->d > n - 1) throw NoHittingTime("degree bound exceeds n-1");
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    int deficient = n;
    for (std::uint64_t i = 0; i < proc.size(); ++i) {
      const auto [u, v] = proc.edge_at(i);
      if (++degree[u] == md->d) --deficient;
      if (++degree[v] == md->d) --deficient;
      if (deficient == 0) return i + 1;
    }
    throw NoHittingTime("property absent at the end of the process");
  }
  if (std::get_if<Connected>(&property)) {
    if (n <= 1) return 0;
    UnionFind uf(n);
    for (std::uint64_t i = 0; i < proc.size(); ++i) {
      const auto [u, v] = proc.edge_at(i);
      uf.unite(u, v);
      if (uf.components == 1) return i + 1;
    }
    throw NoHittingTime("process never connects");
  }
  // longest-path property: scan by doubling probes + binary refinement,
  // each probe is an exact oracle call
  const auto& pl = std::get<PathLengthAtLeast>(property);
  if (pl.length <= 0) return 0;
  if (pl.length > n - 1) throw NoHittingTime("path bound exceeds n-1");
  std::uint64_t lo = 0, hi = proc.size();
  if (!snapshot_has(proc, hi, property)) {
    throw NoHittingTime("property absent at the end of the process");
  }
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (snapshot_has(proc, mid, property)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::uint64_t hitting_time_binary(const EdgeProcess& proc,
                                  const MonotoneProperty& property) {
  if (!snapshot_has(proc, proc.size(), property)) {
    throw NoHittingTime("property absent at the end of the process");
  }
  if (snapshot_has(proc, 0, property)) return 0;
  std::uint64_t lo = 0, hi = proc.size();
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (snapshot_has(proc, mid, property)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

std::uint64_t hitting_time(const EdgeProcess& proc, const MonotoneProperty& property,
                           HittingTimeMethod method) {
  return method == HittingTimeMethod::incremental
             ? hitting_time_incremental(proc, property)
             : hitting_time_binary(proc, property);
}

HittingTimes compute_hitting_times(const EdgeProcess& proc, std::uint64_t seed) {
  HittingTimes times;
  times.tau_min_degree_2 = hitting_time(proc, MinDegreeAtLeast{2});
  times.tau_connectivity = hitting_time(proc, Connected{});

  SearchOptions opts;
  opts.seed = seed;
  const Graph at_tau2 = proc.snapshot(times.tau_min_degree_2);
  HamResult res = hamilton_or_fallback(at_tau2, opts);
  if (res.status == HamStatus::hamiltonian) {
    times.tau_hamiltonian_upper = times.tau_min_degree_2;
    times.certified_equal = true;
    return times;
  }
  times.certified_equal = false;
  // grow the snapshot until the search certifies a cycle; K_n closes it
  std::uint64_t m = times.tau_min_degree_2;
  while (true) {
    m = std::min(proc.size(), m + std::max<std::uint64_t>(m / 10, 1));
    opts.seed = derive_seed(seed, m);
    res = hamilton_or_fallback(proc.snapshot(m), opts);
    if (res.status == HamStatus::hamiltonian) {
      times.tau_hamiltonian_upper = m;
      return times;
    }
    if (m == proc.size()) {
      throw std::logic_error("search failed on the complete graph");
    }
  }
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

void ExperimentResult::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

std::string ExperimentResult::summary_json() const {
  std::ostringstream out;
  out << "{\n  \"experiment\": \"" << name << "\"";
  for (const auto& [key, value] : summary) {
    const bool quote = value.empty() ||
                       value.find_first_not_of("0123456789.+-eE") != std::string::npos;
    out << ",\n  \"" << key << "\": ";
    if (quote) {
      out << '"' << value << '"';
    } else {
      out << value;
    }
  }
  out << ",\n  \"targets_met\": " << (targets_met ? "true" : "false") << "\n}\n";
  return out.str();
}

namespace {

std::string fmt_bool(bool b) { return b ? "1" : "0"; }

void push_fraction_summary(ExperimentResult& result, const std::string& key,
                           int passed, int total, double target) {
  result.summary.emplace_back(key + "_passed", std::to_string(passed));
  result.summary.emplace_back(key + "_total", std::to_string(total));
  result.summary.emplace_back(
      key + "_fraction",
      format_double(total ? static_cast<double>(passed) / total : 0.0));
  result.summary.emplace_back(key + "_target", format_double(target));
}

}  // namespace

ExperimentResult hitting_time_hamiltonicity_experiment(const HittingTimeParams& params) {
  if (params.n < 10) throw std::invalid_argument("hitting-time experiment needs n >= 10");
  ExperimentResult result;
  result.name = "hitting-time";
  result.columns = {"trial", "seed", "n",         "tau2",      "tau_h_upper",
                    "m1",    "m2",   "certified", "in_window"};

  struct Row {
    std::uint64_t seed, tau2, tau_h;
    bool certified, in_window;
  };
  std::vector<Row> rows(static_cast<std::size_t>(params.trials));
  const double m1 = params.n * std::log(params.n) / 2.0;
  const double m2 = params.n * std::log(params.n);

  run_trials(rows.size(), params.workers, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(params.seed, t);
    const EdgeProcess proc = random_process(params.n, seed);
    const HittingTimes times = compute_hitting_times(proc, derive_seed(seed, 1));
    rows[t] = {seed, times.tau_min_degree_2, times.tau_hamiltonian_upper,
               times.certified_equal,
               static_cast<double>(times.tau_min_degree_2) >= m1 &&
                   static_cast<double>(times.tau_min_degree_2) <= m2};
  });

  int certified = 0, in_window = 0, ordered = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Row& r = rows[t];
    certified += r.certified;
    in_window += r.in_window;
    ordered += r.tau_h >= r.tau2;
    result.rows.push_back({std::to_string(t), std::to_string(r.seed),
                           std::to_string(params.n), std::to_string(r.tau2),
                           std::to_string(r.tau_h), format_double(m1), format_double(m2),
                           fmt_bool(r.certified), fmt_bool(r.in_window)});
  }
  push_fraction_summary(result, "certified", certified, params.trials,
                        params.min_certified_fraction);
  push_fraction_summary(result, "tau2_in_window", in_window, params.trials,
                        params.min_window_fraction);
  result.summary.emplace_back("tau_h_ge_tau2", std::to_string(ordered));
  result.targets_met =
      certified >= params.min_certified_fraction * params.trials &&
      in_window >= params.min_window_fraction * params.trials &&
      ordered == params.trials;
  return result;
}

ExperimentResult supercritical_path_experiment(const SupercriticalParams& params) {
  if (!(params.epsilon > 0.0) || params.epsilon > 0.99) {
    throw std::invalid_argument("epsilon outside (0, 0.99]");
  }
  ExperimentResult result;
  result.name = params.subcritical ? "subcritical" : "supercritical";
  result.columns = {"trial", "seed", "n", "epsilon", "p", "statistic", "threshold", "pass"};

  const int n = params.n;
  const double eps = params.epsilon;
  const double p = (params.subcritical ? 1.0 - eps : 1.0 + eps) / n;
  // path target counts vertices; component bound counts vertices too
  const double threshold = params.subcritical ? 7.0 / (eps * eps) * std::log(n)
                                              : eps * eps * n / 5.0;

  struct Row {
    std::uint64_t seed;
    std::uint64_t statistic;
    bool pass;
  };
  std::vector<Row> rows(static_cast<std::size_t>(params.trials));
  run_trials(rows.size(), params.workers, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(params.seed, t);
    BernoulliStream stream(p, seed);
    OnlineDfsOptions opts;
    opts.tail = OnlineDfsOptions::Tail::skip;
    const auto [graph, trace] = online_dfs(n, stream, opts);
    if (params.subcritical) {
      std::size_t largest = 0;
      for (const auto& epoch : trace.epochs) {
        largest = std::max(largest, epoch.component.size());
      }
      rows[t] = {seed, largest, static_cast<double>(largest) <= threshold};
    } else {
      rows[t] = {seed, trace.max_u_size,
                 static_cast<double>(trace.max_u_size) >= threshold};
    }
  });

  int passed = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    passed += rows[t].pass;
    result.rows.push_back({std::to_string(t), std::to_string(rows[t].seed),
                           std::to_string(n), format_double(eps), format_double(p),
                           std::to_string(rows[t].statistic), format_double(threshold),
                           fmt_bool(rows[t].pass)});
  }
  push_fraction_summary(result, "trials", passed, params.trials,
                        params.min_pass_fraction);
  result.targets_met = passed >= params.min_pass_fraction * params.trials;
  return result;
}

ExperimentResult nearly_spanning_experiment(const NearlySpanningParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon outside (0,1)");
  }
  ExperimentResult result;
  result.name = "nearly-spanning";
  result.columns = {"trial", "seed",        "n",    "epsilon", "C",
                    "model", "path_length", "bound", "pass"};

  const int n = params.n;
  const double eps = params.epsilon;
  const double c = 5.0 * std::log(1.0 / eps) / eps;
  const double p = c / n;
  const double bound = (1.0 - eps) * n;  // path length target, in edges

  const int total = params.trials + params.directed_trials;
  struct Row {
    std::uint64_t seed;
    bool directed;
    int path_len;
    bool pass;
  };
  std::vector<Row> rows(static_cast<std::size_t>(total));
  run_trials(rows.size(), params.workers, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(params.seed, t);
    const bool directed = static_cast<int>(t) >= params.trials;
    int path_len = 0;
    if (directed) {
      const DiGraph g = dnp(n, p, seed);
      path_len = directed_long_path(g).length_edges();
    } else {
      const Graph g = gnp(n, p, seed);
      path_len = run_dfs(g).max_u_path.length_edges();
    }
    rows[t] = {seed, directed, path_len, static_cast<double>(path_len) >= bound};
  });

  int passed_undirected = 0, passed_directed = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Row& r = rows[t];
    (r.directed ? passed_directed : passed_undirected) += r.pass;
    result.rows.push_back({std::to_string(t), std::to_string(r.seed), std::to_string(n),
                           format_double(eps), format_double(c),
                           r.directed ? "dnp" : "gnp", std::to_string(r.path_len),
                           format_double(bound), fmt_bool(r.pass)});
  }
  push_fraction_summary(result, "undirected", passed_undirected, params.trials,
                        params.min_pass_fraction);
  if (params.directed_trials > 0) {
    push_fraction_summary(result, "directed", passed_directed, params.directed_trials,
                          params.min_pass_fraction);
  }
  result.targets_met =
      passed_undirected >= params.min_pass_fraction * params.trials &&
      passed_directed >= params.min_pass_fraction * params.directed_trials;
  return result;
}

ExperimentResult stream_lemma_experiment(const StreamLemmaParams& params) {
  if (params.n < 100) throw std::invalid_argument("stream lemma check needs n >= 100");
  ExperimentResult result;
  result.name = "stream-lemma";
  result.columns = {"trial",     "seed",      "n",          "epsilon",
                    "part1_ok",  "part2_sum", "part2_mean", "part2_dev",
                    "part2_ok"};

  const int n = params.n;
  const double eps = params.epsilon;
  const std::uint64_t total = pair_count(n);
  const std::uint64_t k =
      static_cast<std::uint64_t>(std::ceil(7.0 / (eps * eps) * std::log(n)));
  const std::uint64_t window = k * static_cast<std::uint64_t>(n);
  const std::uint64_t n0 =
      static_cast<std::uint64_t>(eps * static_cast<double>(n) * n / 2.0);
  const double part2_mean = eps * (1.0 + eps) * n / 2.0;
  const double part2_tol = std::pow(n, 2.0 / 3.0);

  struct Row {
    std::uint64_t seed;
    bool part1_ok;
    std::uint64_t part2_sum;
    double part2_dev;
    bool part2_ok;
  };
  std::vector<Row> rows(static_cast<std::size_t>(params.trials));
  run_trials(rows.size(), params.workers, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(params.seed, t);
    Row row;
    row.seed = seed;
    {
      // part 1: sliding window of kn positions may not contain k ones
      BernoulliStream stream((1.0 - eps) / n, derive_seed(seed, 1));
      std::vector<std::uint64_t> ones;
      while (auto pos = stream.next_one_before(total)) ones.push_back(*pos);
      row.part1_ok = true;
      for (std::size_t i = 0; i + k <= ones.size(); ++i) {
        if (ones[i + k - 1] - ones[i] < window) {
          row.part1_ok = false;
          break;
        }
      }
    }
    {
      // part 2: partial sum concentration at N0
      BernoulliStream stream((1.0 + eps) / n, derive_seed(seed, 2));
      row.part2_sum = stream.skip(n0);
      row.part2_dev = std::abs(static_cast<double>(row.part2_sum) - part2_mean);
      row.part2_ok = row.part2_dev <= part2_tol;
    }
    rows[t] = row;
  });

  int part1 = 0, part2 = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Row& r = rows[t];
    part1 += r.part1_ok;
    part2 += r.part2_ok;
    result.rows.push_back({std::to_string(t), std::to_string(r.seed), std::to_string(n),
                           format_double(eps), fmt_bool(r.part1_ok),
                           std::to_string(r.part2_sum), format_double(part2_mean),
                           format_double(r.part2_dev), fmt_bool(r.part2_ok)});
  }
  push_fraction_summary(result, "part1", part1, params.trials, params.min_pass_fraction);
  push_fraction_summary(result, "part2", part2, params.trials, params.min_pass_fraction);
  result.targets_met = part1 >= params.min_pass_fraction * params.trials &&
                       part2 >= params.min_pass_fraction * params.trials;
  return result;
}

ExperimentResult min_degree_threshold_experiment(const MinDegreeParams& params) {
  ExperimentResult result;
  result.name = "min-degree";
  result.columns = {"model", "omega", "trial", "seed", "n", "min_degree", "delta_ge_2"};

  const int n = params.n;
  const double base = std::log(n) + std::log(std::log(n));

  struct Row {
    std::string model;
    double omega;
    std::uint64_t seed;
    int min_degree;
  };
  const std::size_t per_model = params.offsets.size() * params.trials;
  std::vector<Row> rows(2 * per_model);
  run_trials(rows.size(), params.workers, [&](std::size_t idx) {
    const bool use_gnm = idx >= per_model;
    const std::size_t local = use_gnm ? idx - per_model : idx;
    const std::size_t offset_idx = local / params.trials;
    const std::size_t trial = local % params.trials;
    const double omega = params.offsets[offset_idx];
    const std::uint64_t seed = derive_seed(params.seed, idx);
    Graph g(0);
    if (use_gnm) {
      const double m_real = n * (base + omega) / 2.0;
      const std::uint64_t m = static_cast<std::uint64_t>(
          std::clamp(m_real, 0.0, static_cast<double>(pair_count(n))));
      g = gnm(n, m, seed);
    } else {
      const double p = std::clamp((base + omega) / n, 0.0, 1.0);
      g = gnp(n, p, seed);
    }
    rows[idx] = {use_gnm ? "gnm" : "gnp", omega, seed, g.min_degree()};
  });

  // pass counts per (model, offset): delta >= 2 at positive offsets,
  // delta <= 1 at negative ones
  result.targets_met = true;
  std::vector<int> pass_counts(2 * params.offsets.size(), 0);
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const Row& r = rows[idx];
    const bool ge2 = r.min_degree >= 2;
    result.rows.push_back({r.model, format_double(r.omega),
                           std::to_string(idx % params.trials), std::to_string(r.seed),
                           std::to_string(n), std::to_string(r.min_degree),
                           fmt_bool(ge2)});
    const std::size_t group = idx / params.trials;
    const bool expected = r.omega >= 0 ? ge2 : !ge2;
    pass_counts[group] += expected;
  }
  for (std::size_t g = 0; g < pass_counts.size(); ++g) {
    const std::string model = g < params.offsets.size() ? "gnp" : "gnm";
    const double omega = params.offsets[g % params.offsets.size()];
    const std::string key = model + "_omega_" + format_double(omega);
    push_fraction_summary(result, key, pass_counts[g], params.trials,
                          params.min_pass_fraction);
    if (pass_counts[g] < params.min_pass_fraction * params.trials) {
      result.targets_met = false;
    }
  }
  return result;
}

ExperimentResult backbone_pipeline_experiment(const BackbonePipelineParams& params) {
  ExperimentResult result;
  result.name = "backbone-pipeline";
  result.columns = {"trial",          "seed",           "n",
                    "d0",             "tau2",           "backbone_edges",
                    "edge_cap",       "boosters_added", "hamiltonian"};

  struct Row {
    std::uint64_t seed, tau2, backbone_edges, boosters;
    bool hamiltonian;
  };
  std::vector<Row> rows(static_cast<std::size_t>(params.trials));
  run_trials(rows.size(), params.workers, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(params.seed, t);
    const EdgeProcess proc = random_process(params.n, seed);
    const std::uint64_t tau2 = hitting_time(proc, MinDegreeAtLeast{2});
    const Graph host = proc.snapshot(tau2);
    const Graph backbone =
        sparse_backbone(host, BackboneConfig(params.d0, derive_seed(seed, 1)));
    PipelineOptions popts;
    popts.seed = derive_seed(seed, 2);
    const HamResult res = augment_with_boosters(backbone, host, popts);
    rows[t] = {seed, tau2, backbone.edge_count(), res.stats.boosters_added,
               res.status == HamStatus::hamiltonian};
  });

  int passed = 0;
  bool caps_ok = true;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Row& r = rows[t];
    passed += r.hamiltonian;
    const std::uint64_t cap = static_cast<std::uint64_t>(params.d0) * params.n;
    caps_ok = caps_ok && r.backbone_edges <= cap &&
              r.boosters <= static_cast<std::uint64_t>(params.n);
    result.rows.push_back({std::to_string(t), std::to_string(r.seed),
                           std::to_string(params.n), std::to_string(params.d0),
                           std::to_string(r.tau2), std::to_string(r.backbone_edges),
                           std::to_string(cap), std::to_string(r.boosters),
                           fmt_bool(r.hamiltonian)});
  }
  push_fraction_summary(result, "hamiltonian", passed, params.trials,
                        params.min_pass_fraction);
  result.summary.emplace_back("edge_caps_respected", caps_ok ? "true" : "false");
  result.targets_met =
      caps_ok && passed >= params.min_pass_fraction * params.trials;
  return result;
}

}  // namespace rgl
