#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rgl {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, unique

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted so every traversal in the library is deterministic. Self-loops
// and parallel edges are rejected at insertion, never dropped silently.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  void add_edge(Vertex u, Vertex v);

  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;

 private:
  Vertex check(Vertex v) const;

  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// Simple directed graph; no self-loops, no parallel arcs.
class DiGraph {
 public:
  explicit DiGraph(int n);
  static DiGraph from_arcs(int n, std::span<const Edge> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[check(v)]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[check(v)]; }
  bool has_arc(Vertex u, Vertex v) const;

  void add_arc(Vertex u, Vertex v);

 private:
  Vertex check(Vertex v) const;

  int n_;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_, in_;
};

// Sequence of distinct vertices; length is measured in edges.
struct Path {
  std::vector<Vertex> vertices;

  int length_edges() const { return static_cast<int>(vertices.size()) - 1; }
  bool empty() const { return vertices.empty(); }
};

// Cyclic vertex sequence; the closing edge back to front() is implicit.
struct Cycle {
  std::vector<Vertex> vertices;

  int length_edges() const { return static_cast<int>(vertices.size()); }
};

bool is_path_in(const Graph& g, const Path& p);
bool is_path_in(const DiGraph& g, const Path& p);
bool is_cycle_in(const Graph& g, const Cycle& c);
bool is_hamilton_cycle(const Graph& g, const Cycle& c);

// N_G(U): vertices outside U with at least one neighbor in U.
VertexSet external_neighborhood(const Graph& g, std::span<const Vertex> u_set);

// e_G(U, W) for disjoint U, W. Throws if the sets overlap.
std::size_t edges_between(const Graph& g, std::span<const Vertex> u_set,
                          std::span<const Vertex> w_set);

// e_G(U): edges spanned by U.
std::size_t edges_within(const Graph& g, std::span<const Vertex> u_set);

// Partition of the vertex set into connected components, each sorted,
// ordered by smallest contained vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Edge-list text format. Undirected: "n m" header then m lines "u v"
// (0-indexed, u < v). Directed: "directed n m" then ordered pairs.
// Readers reject loops and duplicates.
Graph read_edge_list(std::istream& in);
DiGraph read_arc_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
void write_arc_list(std::ostream& out, const DiGraph& g);

}  // namespace rgl
