#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

// Rotate path x0..xh at pivot index i (0 <= i < h-1): add the chord
// (x_i, x_h), drop (x_i, x_{i+1}), reverse the tail. Same vertex set,
// same length, same start.
Path elementary_rotation(const Graph& g, const Path& p, int pivot_index);

// Endpoints reachable from a fixed-start path by sequences of elementary
// rotations. Two constructions exist:
//
//  * exact(): breadth-first search over whole path states with
//    deduplication. This is the ground truth; the state count is capped
//    (CapacityError beyond) since path systems can grow combinatorially.
//
//  * endpoint_bfs(): breadth-first search over endpoint states keeping
//    one witness path each. Interleaving rotations can reach endpoints
//    this abstraction misses, so it is a sound under-approximation:
//    every reported endpoint is genuinely reachable, none is invented.
//    The search machinery uses it for speed.
//
// Each reachable endpoint carries a witness path (same vertex set and
// length as the base) plus parent links (previous endpoint, pivot).
class PosaClosure {
 public:
  static constexpr std::size_t kDefaultStateCap = 1u << 20;

  static PosaClosure exact(const Graph& g, const Path& base,
                           std::size_t max_states = kDefaultStateCap);
  static PosaClosure endpoint_bfs(const Graph& g, const Path& base);

  const Path& base() const { return base_; }
  // Reachable endpoints in discovery order; front() is the base path's
  // own terminal vertex.
  const std::vector<Vertex>& reachable() const { return reachable_; }
  VertexSet r_set() const;

  // Predecessors / successors of R along the base path. x_h contributes
  // no successor, so |R+| <= |R| - 1.
  VertexSet r_minus() const;
  VertexSet r_plus() const;

  bool is_reachable(Vertex v) const { return row_of_[v] >= 0; }
  // Witness path from x0 to r; same vertex set and length as the base.
  Path witness(Vertex r) const;
  Vertex parent_endpoint(Vertex r) const { return parent_endpoint_[r]; }
  Vertex parent_pivot(Vertex r) const { return parent_pivot_[r]; }

  std::size_t rotations_performed() const { return rotations_; }

 private:
  PosaClosure() = default;
  void init(const Graph& g, const Path& base);
  void discover(Vertex endpoint, std::vector<Vertex> witness, Vertex parent,
                Vertex pivot);

  Path base_;
  std::vector<Vertex> reachable_;
  std::vector<int> row_of_;                // vertex -> witness row, -1 if not in R
  std::vector<std::vector<Vertex>> rows_;  // witness path per endpoint
  std::vector<Vertex> parent_endpoint_;
  std::vector<Vertex> parent_pivot_;
  std::size_t rotations_ = 0;
};

// The exact closure: R is precisely the set of endpoints reachable by
// finite rotation sequences with x0 fixed.
PosaClosure rotation_closure(const Graph& g, const Path& p,
                             std::size_t max_states = PosaClosure::kDefaultStateCap);

struct PosaReport {
  VertexSet r, r_minus, r_plus;
  VertexSet neighborhood_of_r;
  bool contained = false;  // N(R) subseteq R- u R+
};

// Evaluates the rotation lemma's containment for a path the caller
// asserts to be longest. A false verdict on a verified longest path is
// a genuine violation; on other paths it only means the hypothesis of
// the lemma did not hold.
PosaReport posa_check(const Graph& g, const Path& p);

struct BoosterOptions {
  enum class Mode { exact, closure };
  Mode mode = Mode::exact;
  int exact_cap = 14;
  std::uint64_t seed = 0;  // closure mode path search at large n
};

// Non-edges whose addition makes the graph Hamiltonian or lengthens its
// longest path. Exact mode brute-forces every non-edge against exact
// oracles (capacity-limited). Closure mode returns the pairs certified
// by the double rotation closure of a longest path: for a connected
// host with a genuine longest path this is a sound under-approximation
// of the full booster set.
std::vector<Edge> boosters(const Graph& g, const BoosterOptions& opts = {});

// Closure-mode core: booster pairs derived from rotations of the given
// path (endpoint-state closures on both levels).
std::vector<Edge> boosters_from_path(const Graph& g, const Path& longest);

}  // namespace rgl
