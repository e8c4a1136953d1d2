#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

struct ExpanderQuery {
  int k;         // sets of size up to k must expand
  double alpha;  // by this factor

  ExpanderQuery(int k_, double alpha_);
};

enum class CheckMode { exact, sampled, structural };

struct ExpanderVerdict {
  bool expander = false;
  bool certified = false;  // proof-grade (exact enumeration or concrete witness)
  CheckMode mode = CheckMode::exact;
  std::optional<VertexSet> witness;  // violating U when refuted
  std::string detail;
};

struct SampleOptions {
  std::uint64_t seed = 1;
  int samples = 2000;
};

// host graph + degree threshold backing a structural confirmation
struct StructuralContext {
  const Graph* host = nullptr;
  int d0 = 4;
  std::uint64_t seed = 1;
  int samples = 2000;
};

// Exact mode enumerates every candidate set (n <= 20); sampled mode is
// sound for refutation only; structural mode derives the verdict from
// the sparse-backbone sufficient conditions (minimum degree, the host's
// degree/edge-distribution properties, and pairwise expansion of large
// sets) and is labeled accordingly.
ExpanderVerdict is_expander(const Graph& g, const ExpanderQuery& q,
                            CheckMode mode, const SampleOptions& sample = {},
                            const StructuralContext& ctx = {});

// SMALL(G): vertices of degree below d0.
VertexSet small_vertices(const Graph& g, int d0);

struct PropertyCheck {
  std::string name;
  bool holds = false;
  std::string mode;  // "exact" | "sampled" | "bfs" | "vacuous"
  std::string witness;
};

// Threshold formulas, evaluated in double precision:
//   P1  max degree <= 10 ln n, min degree >= 2
//   P2  |SMALL| <= n^0.3
//   P3  no path of length <= 4 joins SMALL vertices (identical endpoints
//       read as a cycle of length <= 4 through a SMALL vertex)
//   P4  |U| <= n/ln^(1/2) n spans <= |U| ln^(3/4) n edges
//   P5  |W| <= |U| ln^(1/4) n, U as in P4: e(U,W) <= d0 |U| / 2
//   P6  disjoint U, W of size ceil(n/ln^(1/2) n): e(U,W) >= 0.5 n
struct AuditReport {
  int d0 = 0;
  VertexSet small_set;
  std::vector<PropertyCheck> properties;  // P1..P6

  const PropertyCheck& property(const std::string& name) const;
  bool all_hold() const;
};

struct AuditOptions {
  int exact_cap = 20;  // subset enumeration limit for P4-P6
  std::uint64_t seed = 1;
  int samples = 2000;
};

AuditReport audit_properties(const Graph& g, int d0, const AuditOptions& opts = {});

struct BackboneConfig {
  int d0 = 4;
  std::uint64_t seed = 0;

  BackboneConfig(int d0_, std::uint64_t seed_);
};

// Spanning subgraph keeping all edges at SMALL vertices and d0 uniformly
// chosen incident edges elsewhere; at most d0*n edges in total.
Graph sparse_backbone(const Graph& g, const BackboneConfig& cfg);

}  // namespace rgl
