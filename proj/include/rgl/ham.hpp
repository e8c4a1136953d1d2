#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

enum class HamStatus {
  hamiltonian,      // witness cycle attached
  not_hamiltonian,  // exact searches only
  not_found         // heuristic budget exhausted; says nothing negative
};

struct HamStats {
  std::uint64_t rotations = 0;
  std::uint64_t extensions = 0;
  std::uint64_t restarts = 0;
  std::uint64_t boosters_added = 0;
};

struct HamResult {
  HamStatus status = HamStatus::not_found;
  std::optional<Cycle> cycle;
  Path best_path;  // longest path encountered (heuristic searches)
  HamStats stats;
};

// Complete Hamiltonicity decision by backtracking with degree and
// connectivity pruning. Throws CapacityError beyond `cap` vertices.
HamResult exact_hamiltonian(const Graph& g, int cap = 20);

// Exact longest path length in edges, subset dynamic programming over
// (visited set, endpoint) states.
int exact_longest_path(const Graph& g, int cap = 16);
Path exact_longest_path_witness(const Graph& g, int cap = 16);

struct SearchOptions {
  std::uint64_t budget = 0;  // rotation budget; 0 = 50 n ln n
  std::uint64_t seed = 0;
  Path initial;              // optional warm-start path
};

// Rotation-extension search: grow a path greedily, compute the rotation
// closure, extend from any reachable endpoint with an off-path neighbor,
// close a cycle when an endpoint sees the anchor, and reopen non-spanning
// cycles through an edge leaving them. Re-anchoring (rotating from both
// ends) and seeded restarts run when the primary closure saturates.
// Never reports not_hamiltonian.
HamResult rotation_extension_search(const Graph& g, const SearchOptions& opts = {});

// rotation_extension_search with an exact_hamiltonian fallback for
// graphs of at most `exact_cap` vertices.
HamResult hamilton_or_fallback(const Graph& g, const SearchOptions& opts = {},
                               int exact_cap = 20);

// Longest path the search machinery can produce (a Hamilton path if the
// search closes a spanning cycle).
Path best_path_search(const Graph& g, std::uint64_t seed = 0);

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget_per_step = 0;  // rotations per search step; 0 = default
  int exact_cap = 20;
};

// Mirrors the augmentation argument: starting from a sparse expanding
// backbone, repeatedly add a booster of the current graph that is
// already an edge of the host, until the current graph is Hamiltonian.
// At most n boosters are added; the returned cycle uses host edges only.
HamResult augment_with_boosters(const Graph& backbone, const Graph& host,
                                const PipelineOptions& opts = {});

}  // namespace rgl
