#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "rgl/graph.hpp"
#include "rgl/random_models.hpp"

namespace rgl {

// --- hitting times ---------------------------------------------------

struct MinDegreeAtLeast {
  int d;
};
struct Connected {};
struct PathLengthAtLeast {
  int length;  // edges
};
using MonotoneProperty = std::variant<MinDegreeAtLeast, Connected, PathLengthAtLeast>;

enum class HittingTimeMethod { incremental, binary_search };

// min{ m : G_m has the property }; throws NoHittingTime when even the
// complete graph lacks it. Both methods agree on every input; the
// incremental scan is the fast path, binary search the cross-check.
std::uint64_t hitting_time(const EdgeProcess& proc, const MonotoneProperty& property,
                           HittingTimeMethod method = HittingTimeMethod::incremental);

struct HittingTimes {
  std::uint64_t tau_min_degree_2 = 0;
  std::uint64_t tau_connectivity = 0;
  std::uint64_t tau_hamiltonian_upper = 0;
  bool certified_equal = false;  // validated Hamilton cycle at the tau_2 snapshot
};

// Certification-based: a cycle found at snapshot(tau_2) proves
// tau_H = tau_2; otherwise the upper bound comes from growing snapshots
// until the search succeeds.
HittingTimes compute_hitting_times(const EdgeProcess& proc, std::uint64_t seed);

// --- experiment harness ----------------------------------------------

// One table per experiment; cells are preformatted so CSV/JSON emission
// is byte-deterministic (floats use 6 significant digits). Wall-clock
// timing deliberately stays out of the records.
struct ExperimentResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;  // ordered key/value
  bool targets_met = true;

  void write_csv(std::ostream& out) const;
  std::string summary_json() const;
};

std::string format_double(double value);  // %.6g

struct HittingTimeParams {
  int n = 1000;
  int trials = 100;
  std::uint64_t seed = 1;
  int workers = 0;
  double min_certified_fraction = 0.95;
  double min_window_fraction = 0.95;
};
ExperimentResult hitting_time_hamiltonicity_experiment(const HittingTimeParams& params);

struct SupercriticalParams {
  int n = 100000;
  double epsilon = 0.2;
  int trials = 20;
  std::uint64_t seed = 1;
  int workers = 0;
  bool subcritical = false;  // run the p=(1-eps)/n twin instead
  double min_pass_fraction = 0.95;
};
// Supercritical: online DFS at p=(1+eps)/n, pass when the longest stack
// path holds >= eps^2 n / 5 vertices. Subcritical twin: p=(1-eps)/n,
// pass when every component has <= (7/eps^2) ln n vertices.
ExperimentResult supercritical_path_experiment(const SupercriticalParams& params);

struct NearlySpanningParams {
  int n = 20000;
  double epsilon = 0.1;
  int trials = 10;
  int directed_trials = 0;
  std::uint64_t seed = 1;
  int workers = 0;
  double min_pass_fraction = 1.0;
};
// p = C/n with C = 5 ln(1/eps)/eps; pass when the DFS path covers at
// least (1-eps) n vertices worth of edges.
ExperimentResult nearly_spanning_experiment(const NearlySpanningParams& params);

struct StreamLemmaParams {
  int n = 10000;
  double epsilon = 0.2;
  int trials = 50;
  std::uint64_t seed = 1;
  int workers = 0;
  double min_pass_fraction = 0.96;
};
// Part 1 at p=(1-eps)/n: no window of kn consecutive bits holds k ones,
// k = ceil((7/eps^2) ln n). Part 2 at p=(1+eps)/n: the first eps n^2/2
// bits sum to eps(1+eps)n/2 within n^(2/3).
ExperimentResult stream_lemma_experiment(const StreamLemmaParams& params);

struct MinDegreeParams {
  int n = 10000;
  std::vector<double> offsets = {-4.0, 4.0};
  int trials = 100;
  std::uint64_t seed = 1;
  int workers = 0;
  double min_pass_fraction = 0.9;
};
// For each offset w: p = (ln n + ln ln n + w)/n and the matching
// m = n(ln n + ln ln n + w)/2; measures the frequency of min degree >= 2
// (positive offsets) and of min degree <= 1 (negative offsets).
ExperimentResult min_degree_threshold_experiment(const MinDegreeParams& params);

struct BackbonePipelineParams {
  int n = 1000;
  int d0 = 4;
  int trials = 50;
  std::uint64_t seed = 1;
  int workers = 0;
  double min_pass_fraction = 0.9;
};
// tau_2 snapshot -> sparse backbone -> booster augmentation within the
// snapshot; pass when a validated Hamilton cycle appears with at most n
// added boosters.
ExperimentResult backbone_pipeline_experiment(const BackbonePipelineParams& params);

}  // namespace rgl
