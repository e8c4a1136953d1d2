#include "rgl/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rgl {

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex v, const char* what) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) {
    throw std::invalid_argument(std::string("duplicate ") + what);
  }
  list.insert(it, v);
}

bool contains_sorted(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Vertex Graph::check(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  return v;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  insert_sorted(adj_[u], v, "edge");
  insert_sorted(adj_[v], u, "edge");
  ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (u == v) return false;
  // probe the smaller list
  if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
  return contains_sorted(adj_[u], v);
}

int Graph::min_degree() const {
  int d = n_ > 0 ? static_cast<int>(adj_[0].size()) : 0;
  for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DiGraph::DiGraph(int n)
    : n_(n),
      out_(static_cast<std::size_t>(std::max(n, 0))),
      in_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Vertex DiGraph::check(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  return v;
}

DiGraph DiGraph::from_arcs(int n, std::span<const Edge> arcs) {
  DiGraph g(n);
  for (const auto& [u, v] : arcs) g.add_arc(u, v);
  return g;
}

void DiGraph::add_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  insert_sorted(out_[u], v, "arc");
  insert_sorted(in_[v], u, "arc");
  ++arc_count_;
}

bool DiGraph::has_arc(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return contains_sorted(out_[u], v);
}

bool is_path_in(const Graph& g, const Path& p) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_path_in(const DiGraph& g, const Path& p) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_arc(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle_in(const Graph& g, const Cycle& c) {
  if (c.vertices.size() < 3) return false;
  Path as_path{c.vertices};
  return is_path_in(g, as_path) && g.has_edge(c.vertices.back(), c.vertices.front());
}

bool is_hamilton_cycle(const Graph& g, const Cycle& c) {
  return static_cast<int>(c.vertices.size()) == g.vertex_count() && is_cycle_in(g, c);
}

VertexSet external_neighborhood(const Graph& g, std::span<const Vertex> u_set) {
  const int n = g.vertex_count();
  std::vector<char> in_u(static_cast<std::size_t>(n), 0);
  for (Vertex v : u_set) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    in_u[v] = 1;
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  VertexSet result;
  for (Vertex v : u_set) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_u[w] && !hit[w]) {
        hit[w] = 1;
        result.push_back(w);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t edges_between(const Graph& g, std::span<const Vertex> u_set,
                          std::span<const Vertex> w_set) {
  const int n = g.vertex_count();
  std::vector<char> in_w(static_cast<std::size_t>(n), 0);
  for (Vertex v : w_set) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    in_w[v] = 1;
  }
  for (Vertex v : u_set) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    if (in_w[v]) throw std::invalid_argument("edges_between requires disjoint sets");
  }
  std::size_t count = 0;
  for (Vertex v : u_set) {
    for (Vertex w : g.neighbors(v)) {
      if (in_w[w]) ++count;
    }
  }
  return count;
}

std::size_t edges_within(const Graph& g, std::span<const Vertex> u_set) {
  const int n = g.vertex_count();
  std::vector<char> in_u(static_cast<std::size_t>(n), 0);
  for (Vertex v : u_set) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    in_u[v] = 1;
  }
  std::size_t twice = 0;
  for (Vertex v : u_set) {
    for (Vertex w : g.neighbors(v)) {
      if (in_u[w]) ++twice;
    }
  }
  return twice / 2;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (visited[s]) continue;
    VertexSet comp;
    visited[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return connected_components(g).size() == 1;
}

namespace {

void parse_header(std::istream& in, bool& directed, int& n, std::size_t& m) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw std::invalid_argument("empty edge list");
  } while (line.empty());
  std::istringstream hdr(line);
  std::string first;
  hdr >> first;
  directed = (first == "directed");
  long long nn = 0;
  if (directed) {
    hdr >> nn >> m;
  } else {
    nn = std::stoll(first);
    hdr >> m;
  }
  if (hdr.fail() || nn < 0) throw std::invalid_argument("bad edge-list header");
  n = static_cast<int>(nn);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  bool directed = false;
  int n = 0;
  std::size_t m = 0;
  parse_header(in, directed, n, m);
  if (directed) throw std::invalid_argument("directed file passed to undirected reader");
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
    if (u >= v) throw std::invalid_argument("undirected edges must satisfy u < v");
    g.add_edge(u, v);
  }
  return g;
}

DiGraph read_arc_list(std::istream& in) {
  bool directed = false;
  int n = 0;
  std::size_t m = 0;
  parse_header(in, directed, n, m);
  if (!directed) throw std::invalid_argument("undirected file passed to directed reader");
  DiGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated arc list");
    g.add_arc(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_arc_list(std::ostream& out, const DiGraph& g) {
  out << "directed " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
  }
}

}  // namespace rgl
