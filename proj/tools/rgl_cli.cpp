// Command-line front end: graph generation, DFS traces, expander audits,
// Hamiltonicity searches, and the Monte Carlo experiment suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgl/dfs.hpp"
#include "rgl/errors.hpp"
#include "rgl/expander.hpp"
#include "rgl/experiments.hpp"
#include "rgl/ham.hpp"
#include "rgl/posa.hpp"
#include "rgl/random_models.hpp"

using nlohmann::json;

namespace {

struct ModelFlags {
  std::string input;  // edge-list file; wins over the generator flags
  std::string model = "gnp";
  int n = 100;
  double p = 0.05;
  std::uint64_t m = 0;
  std::uint64_t seed = 1;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--in", flags.input, "read an edge-list file instead of generating");
  cmd->add_option("--model", flags.model, "gnp | gnm | dnp | process")
      ->check(CLI::IsMember({"gnp", "gnm", "dnp", "process"}));
  cmd->add_option("--n", flags.n, "vertex count");
  cmd->add_option("--p", flags.p, "edge probability (gnp/dnp)");
  cmd->add_option("--m", flags.m, "edge count (gnm) or snapshot index (process)");
  cmd->add_option("--seed", flags.seed, "generator seed");
}

rgl::Graph load_graph(const ModelFlags& flags) {
  if (!flags.input.empty()) {
    std::ifstream in(flags.input);
    if (!in) throw std::runtime_error("cannot open " + flags.input);
    return rgl::read_edge_list(in);
  }
  if (flags.model == "gnp") return rgl::gnp(flags.n, flags.p, flags.seed);
  if (flags.model == "gnm") return rgl::gnm(flags.n, flags.m, flags.seed);
  if (flags.model == "process") {
    const auto proc = rgl::random_process(flags.n, flags.seed);
    return proc.snapshot(flags.m);
  }
  throw std::runtime_error("subcommand does not accept model " + flags.model);
}

json cycle_to_json(const std::optional<rgl::Cycle>& cycle) {
  if (!cycle) return nullptr;
  return json(cycle->vertices);
}

json trace_to_json(const rgl::DfsTrace& trace) {
  json events = json::array();
  const auto set_name = [](rgl::SetId s) {
    switch (s) {
      case rgl::SetId::T: return "T";
      case rgl::SetId::U: return "U";
      default: return "S";
    }
  };
  for (const auto& e : trace.events) {
    events.push_back({{"v", e.v}, {"from", set_name(e.from)}, {"to", set_name(e.to)}});
  }
  json epochs = json::array();
  for (const auto& ep : trace.epochs) {
    epochs.push_back({{"begin_step", ep.begin_step},
                      {"end_step", ep.end_step},
                      {"component", ep.component}});
  }
  return {{"n", trace.n},
          {"events", events},
          {"epochs", epochs},
          {"max_u_path", trace.max_u_path.vertices},
          {"max_u_size", trace.max_u_size},
          {"query_count", trace.query_count},
          {"tail_skipped", trace.tail_skipped}};
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run_gen(const ModelFlags& flags, const std::string& out_path) {
  std::ostringstream out;
  if (flags.model == "dnp") {
    rgl::write_arc_list(out, rgl::dnp(flags.n, flags.p, flags.seed));
  } else if (flags.model == "process") {
    // the full permutation: every pair, in process order
    const auto proc = rgl::random_process(flags.n, flags.seed);
    out << flags.n << ' ' << proc.size() << '\n';
    for (std::uint64_t i = 0; i < proc.size(); ++i) {
      const auto [u, v] = proc.edge_at(i);
      out << u << ' ' << v << '\n';
    }
  } else {
    rgl::write_edge_list(out, load_graph(flags));
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    write_text(out_path, out.str());
  }
  return 0;
}

int run_experiment(const std::string& name, rgl::ExperimentResult result,
                   const std::string& csv_path, const std::string& json_path,
                   bool assert_targets) {
  std::ostringstream csv;
  result.write_csv(csv);
  if (!csv_path.empty()) write_text(csv_path, csv.str());
  if (!json_path.empty()) write_text(json_path, result.summary_json());
  std::cout << "experiment " << name << (result.targets_met ? ": targets met" : ": TARGET MISS")
            << "\n";
  for (const auto& [k, v] : result.summary) std::cout << "  " << k << " = " << v << "\n";
  return (assert_targets && !result.targets_met) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-graph long-path and Hamiltonicity laboratory"};
  app.require_subcommand(1);

  // --- gen ---
  ModelFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
  add_model_flags(gen, gen_flags);
  gen->add_option("--out", gen_out, "output file (stdout if omitted)");

  // --- dfs ---
  ModelFlags dfs_flags;
  std::string trace_out, path_out;
  auto* dfs = app.add_subcommand("dfs", "run the S/U/T traversal and dump the trace");
  add_model_flags(dfs, dfs_flags);
  dfs->add_option("--trace-out", trace_out, "JSON event log");
  dfs->add_option("--path-out", path_out, "longest stack path, one vertex per line");

  // --- audit ---
  ModelFlags audit_flags;
  int audit_d0 = 4;
  std::string audit_mode = "auto", audit_json;
  auto* audit = app.add_subcommand("audit", "degree/expansion property audit");
  add_model_flags(audit, audit_flags);
  audit->add_option("--d0", audit_d0, "SMALL threshold degree");
  audit->add_option("--mode", audit_mode, "auto | exact | sampled")
      ->check(CLI::IsMember({"auto", "exact", "sampled"}));
  audit->add_option("--json", audit_json, "report output file");

  // --- hamilton ---
  ModelFlags ham_flags;
  std::string ham_method = "rotation", ham_json;
  std::uint64_t ham_budget = 0;
  int ham_d0 = 4;
  auto* ham = app.add_subcommand("hamilton", "Hamilton cycle search");
  add_model_flags(ham, ham_flags);
  ham->add_option("--method", ham_method, "exact | rotation | booster-pipeline")
      ->check(CLI::IsMember({"exact", "rotation", "booster-pipeline"}));
  ham->add_option("--budget", ham_budget, "rotation budget (0 = default)");
  ham->add_option("--d0", ham_d0, "backbone degree for booster-pipeline");
  ham->add_option("--json", ham_json, "result output file");

  // --- experiment ---
  std::string exp_name;
  std::string exp_csv, exp_json;
  int exp_n = 0, exp_trials = 0, exp_workers = 0, exp_d0 = 4, exp_directed = 0;
  double exp_eps = 0.0;
  std::uint64_t exp_seed = 1;
  bool exp_assert = false, exp_subcritical = false;
  auto* exp = app.add_subcommand("experiment", "Monte Carlo experiment suite");
  exp->add_option("--name", exp_name,
                  "hitting-time | supercritical | nearly-spanning | stream-lemma | "
                  "min-degree | backbone-pipeline")
      ->required()
      ->check(CLI::IsMember({"hitting-time", "supercritical", "nearly-spanning",
                             "stream-lemma", "min-degree", "backbone-pipeline"}));
  exp->add_option("--n", exp_n, "vertex count (0 = experiment default)");
  exp->add_option("--epsilon", exp_eps, "epsilon parameter");
  exp->add_option("--trials", exp_trials, "trial count (0 = default)");
  exp->add_option("--seed", exp_seed, "master seed");
  exp->add_option("--workers", exp_workers, "worker threads (0 = default, 1 = serial)");
  exp->add_option("--csv", exp_csv, "per-trial CSV output");
  exp->add_option("--json", exp_json, "summary JSON output");
  exp->add_option("--d0", exp_d0, "backbone degree (backbone-pipeline)");
  exp->add_option("--directed-trials", exp_directed, "directed trials (nearly-spanning)");
  exp->add_flag("--subcritical", exp_subcritical, "run the subcritical twin (supercritical)");
  exp->add_flag("--assert", exp_assert, "exit 2 if acceptance targets are missed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_gen(gen_flags, gen_out);

    if (*dfs) {
      const rgl::Graph g = load_graph(dfs_flags);
      const rgl::DfsTrace trace = rgl::run_dfs(g);
      if (!trace_out.empty()) write_text(trace_out, trace_to_json(trace).dump(2) + "\n");
      std::string path_text;
      for (rgl::Vertex v : trace.max_u_path.vertices) {
        path_text += std::to_string(v) + "\n";
      }
      if (!path_out.empty()) write_text(path_out, path_text);
      std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
                << " epochs=" << trace.epochs.size()
                << " max_u_path_edges=" << trace.max_u_path.length_edges() << "\n";
      return 0;
    }

    if (*audit) {
      const rgl::Graph g = load_graph(audit_flags);
      rgl::AuditOptions opts;
      opts.seed = audit_flags.seed;
      if (audit_mode == "exact") {
        opts.exact_cap = 20;
        if (g.vertex_count() > 20) throw rgl::CapacityError("exact audit beyond n=20");
      } else if (audit_mode == "sampled") {
        opts.exact_cap = 0;
      }
      const rgl::AuditReport report = rgl::audit_properties(g, audit_d0, opts);
      json props = json::array();
      for (const auto& p : report.properties) {
        props.push_back({{"name", p.name},
                         {"holds", p.holds},
                         {"mode", p.mode},
                         {"witness", p.witness}});
      }
      const json doc = {{"n", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"d0", report.d0},
                        {"small", report.small_set},
                        {"properties", props},
                        {"all_hold", report.all_hold()}};
      if (!audit_json.empty()) {
        write_text(audit_json, doc.dump(2) + "\n");
      } else {
        std::cout << doc.dump(2) << "\n";
      }
      return 0;
    }

    if (*ham) {
      const rgl::Graph g = load_graph(ham_flags);
      rgl::HamResult result;
      if (ham_method == "exact") {
        result = rgl::exact_hamiltonian(g);
      } else if (ham_method == "rotation") {
        rgl::SearchOptions opts;
        opts.budget = ham_budget;
        opts.seed = ham_flags.seed;
        result = rgl::rotation_extension_search(g, opts);
      } else {
        const rgl::Graph backbone =
            rgl::sparse_backbone(g, rgl::BackboneConfig(ham_d0, ham_flags.seed));
        rgl::PipelineOptions opts;
        opts.seed = ham_flags.seed;
        opts.budget_per_step = ham_budget;
        result = rgl::augment_with_boosters(backbone, g, opts);
      }
      const char* status = result.status == rgl::HamStatus::hamiltonian ? "hamiltonian"
                           : result.status == rgl::HamStatus::not_hamiltonian
                               ? "not_hamiltonian"
                               : "not_found";
      const json doc = {{"status", status},
                        {"cycle", cycle_to_json(result.cycle)},
                        {"best_path_edges", result.best_path.length_edges()},
                        {"rotations", result.stats.rotations},
                        {"extensions", result.stats.extensions},
                        {"restarts", result.stats.restarts},
                        {"boosters_added", result.stats.boosters_added}};
      if (!ham_json.empty()) {
        write_text(ham_json, doc.dump(2) + "\n");
      } else {
        std::cout << doc.dump(2) << "\n";
      }
      return 0;
    }

    if (*exp) {
      if (exp_name == "hitting-time") {
        rgl::HittingTimeParams p;
        if (exp_n) p.n = exp_n;
        if (exp_trials) p.trials = exp_trials;
        p.seed = exp_seed;
        p.workers = exp_workers;
        return run_experiment(exp_name, rgl::hitting_time_hamiltonicity_experiment(p),
                              exp_csv, exp_json, exp_assert);
      }
      if (exp_name == "supercritical") {
        rgl::SupercriticalParams p;
        if (exp_n) p.n = exp_n;
        if (exp_eps > 0) p.epsilon = exp_eps;
        if (exp_trials) p.trials = exp_trials;
        p.seed = exp_seed;
        p.workers = exp_workers;
        p.subcritical = exp_subcritical;
        return run_experiment(exp_name, rgl::supercritical_path_experiment(p), exp_csv,
                              exp_json, exp_assert);
      }
      if (exp_name == "nearly-spanning") {
        rgl::NearlySpanningParams p;
        if (exp_n) p.n = exp_n;
        if (exp_eps > 0) p.epsilon = exp_eps;
        if (exp_trials) p.trials = exp_trials;
        p.directed_trials = exp_directed;
        p.seed = exp_seed;
        p.workers = exp_workers;
        if (p.epsilon > 0.5) {
          std::cerr << "note: epsilon beyond the small regime; results are reported, "
                       "not asserted\n";
          p.min_pass_fraction = 0.0;
        }
        return run_experiment(exp_name, rgl::nearly_spanning_experiment(p), exp_csv,
                              exp_json, exp_assert);
      }
      if (exp_name == "stream-lemma") {
        rgl::StreamLemmaParams p;
        if (exp_n) p.n = exp_n;
        if (exp_eps > 0) p.epsilon = exp_eps;
        if (exp_trials) p.trials = exp_trials;
        p.seed = exp_seed;
        p.workers = exp_workers;
        return run_experiment(exp_name, rgl::stream_lemma_experiment(p), exp_csv,
                              exp_json, exp_assert);
      }
      if (exp_name == "min-degree") {
        rgl::MinDegreeParams p;
        if (exp_n) p.n = exp_n;
        if (exp_trials) p.trials = exp_trials;
        p.seed = exp_seed;
        p.workers = exp_workers;
        return run_experiment(exp_name, rgl::min_degree_threshold_experiment(p), exp_csv,
                              exp_json, exp_assert);
      }
      rgl::BackbonePipelineParams p;
      if (exp_n) p.n = exp_n;
      if (exp_trials) p.trials = exp_trials;
      p.d0 = exp_d0;
      p.seed = exp_seed;
      p.workers = exp_workers;
      return run_experiment(exp_name, rgl::backbone_pipeline_experiment(p), exp_csv,
                            exp_json, exp_assert);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
