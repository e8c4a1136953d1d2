#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rgl/graph.hpp"
#include "rgl/random_models.hpp"

namespace rgl {

enum class SetId : std::uint8_t { T = 0, U = 1, S = 2 };

// One vertex moves per step, either T->U (push) or U->S (pop).
struct DfsEvent {
  Vertex v;
  SetId from;
  SetId to;
};

// An epoch spans the discovery of one connected component: it opens when
// a vertex enters the empty stack and closes when the stack drains.
// Steps are 1-based, matching the usual protocol table layout.
struct DfsEpoch {
  std::size_t begin_step;
  std::size_t end_step;
  VertexSet component;
};

struct DfsTrace {
  int n = 0;
  std::vector<DfsEvent> events;  // step i is events[i-1]; 2n steps total
  std::vector<DfsEpoch> epochs;

  Path max_u_path;             // longest path ever spanned by the stack
  std::size_t max_u_size = 0;  // its vertex count
  std::size_t max_u_step = 0;  // step at which it was attained

  std::uint64_t query_count = 0;  // pair queries issued (online runs only)
  bool tail_skipped = false;      // online run left post-exploration pairs virtual

  struct Snapshot {
    VertexSet s_set;
    std::vector<Vertex> u_stack;  // bottom to top; spans a path
    VertexSet t_set;
  };
  // State after `step` events (step 0 = initial state). Replays the log.
  Snapshot snapshot_at(std::size_t step) const;
};

// Iterative DFS with explicit S/U/T bookkeeping, prioritizing vertices by
// the given order. The trace records the full protocol.
DfsTrace run_dfs(const Graph& g, std::span<const Vertex> order);
DfsTrace run_dfs(const Graph& g);  // identity order

DfsTrace run_dfs_directed(const DiGraph& g, std::span<const Vertex> order);
DfsTrace run_dfs_directed(const DiGraph& g);

// Checks properties (D1)-(D3) plus bookkeeping sanity of a trace against
// its host graph. Returns a description of the first violation, or
// nullopt if the trace is clean.
std::optional<std::string> check_dfs_invariants(const Graph& g, const DfsTrace& trace);
std::optional<std::string> check_dfs_invariants(const DiGraph& g, const DfsTrace& trace);

struct OnlineDfsOptions {
  enum class Tail {
    automatic,    // materialize for small n, skip for large
    materialize,  // consume leftover pairs one by one, return full G(n,p)
    skip          // advance the stream in bulk; graph = revealed edges only
  };
  Tail tail = Tail::automatic;
};

// DFS that builds the graph on the fly: every pair query consumes one
// stream bit and a 1 answers "edge". Vertices are prioritized in identity
// order. After exploration finishes, the remaining unqueried pairs are
// consumed in lexicographic order so exactly C(n,2) bits are read; with
// Tail::skip those bits advance the stream without materializing edges
// (the component structure and all U-paths are unaffected: unqueried
// pairs can only fall inside already-discovered components).
std::pair<Graph, DfsTrace> online_dfs(int n, BernoulliStream& stream,
                                      const OnlineDfsOptions& opts = {});

struct LongPathResult {
  Path longest;                   // longest U-path over the whole run
  Path at_balance;                // U-path at the first step with |S| == |T|
  std::size_t max_u_size = 0;
  std::size_t s_at_balance = 0;
};

// Runs DFS and captures the path the proof of the two-set expansion
// argument extracts: if the host graph has an edge between every two
// disjoint k-sets, the balance-step path has length >= n - 2k + 1.
LongPathResult long_path_dfs2(const Graph& g);

// Closes a path into a cycle through an edge joining its first k and
// last k vertices, if one exists; among candidate chords the one giving
// the longest cycle wins. The result has length >= |P|_edges - 2(k-1).
std::optional<Cycle> cycle_from_path(const Graph& g, const Path& p, int k);

// Longest directed U-path of a DFS over out-neighborhoods.
Path directed_long_path(const DiGraph& g);

}  // namespace rgl
