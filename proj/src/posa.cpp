#include "rgl/posa.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rgl/errors.hpp"
#include "rgl/ham.hpp"

namespace rgl {

Path elementary_rotation(const Graph& g, const Path& p, int pivot_index) {
  const int h = p.length_edges();
  if (pivot_index < 0 || pivot_index >= h - 1) {
    throw std::invalid_argument("rotation pivot index out of range");
  }
  if (!g.has_edge(p.vertices[pivot_index], p.vertices.back())) {
    throw std::invalid_argument("rotation chord is not an edge");
  }
  Path out = p;
  std::reverse(out.vertices.begin() + pivot_index + 1, out.vertices.end());
  return out;
}

void PosaClosure::init(const Graph& g, const Path& base) {
  if (base.vertices.empty() || !is_path_in(g, base)) {
    throw std::invalid_argument("rotation closure needs a path of the graph");
  }
  base_ = base;
  const int n = g.vertex_count();
  const std::size_t len = base.vertices.size();
  row_of_.assign(static_cast<std::size_t>(n), -1);
  parent_endpoint_.assign(static_cast<std::size_t>(n), -1);
  parent_pivot_.assign(static_cast<std::size_t>(n), -1);
  // every reachable endpoint is a path vertex, so at most `len` rows
  // ever exist; reserving keeps references into rows_ stable
  rows_.reserve(len);
  reachable_.reserve(len);
  discover(base.vertices.back(), base.vertices, -1, -1);
}

void PosaClosure::discover(Vertex endpoint, std::vector<Vertex> witness,
                           Vertex parent, Vertex pivot) {
  row_of_[endpoint] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(witness));
  reachable_.push_back(endpoint);
  parent_endpoint_[endpoint] = parent;
  parent_pivot_[endpoint] = pivot;
}

PosaClosure PosaClosure::endpoint_bfs(const Graph& g, const Path& base) {
  PosaClosure closure;
  closure.init(g, base);
  const int len = static_cast<int>(base.vertices.size());
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t head = 0; head < closure.reachable_.size(); ++head) {
    const Vertex r = closure.reachable_[head];
    const std::vector<Vertex>& q = closure.rows_[closure.row_of_[r]];
    for (int i = 0; i < len; ++i) pos[q[i]] = i;
    for (Vertex y : g.neighbors(r)) {
      const int i = pos[y];
      if (i < 0 || i >= len - 2) continue;  // off-path, endpoint, or its neighbor
      const Vertex z = q[i + 1];
      ++closure.rotations_;
      if (closure.row_of_[z] >= 0) continue;
      std::vector<Vertex> next(q);
      std::reverse(next.begin() + i + 1, next.end());
      closure.discover(z, std::move(next), r, y);
    }
    for (int i = 0; i < len; ++i) pos[q[i]] = -1;
  }
  return closure;
}

namespace {

// path states packed as byte strings for deduplication; exact closures
// are capacity-capped small-instance tools
std::string pack_state(const std::vector<Vertex>& path) {
  std::string s;
  s.reserve(path.size());
  for (Vertex v : path) s.push_back(static_cast<char>(v));
  return s;
}

}  // namespace

PosaClosure PosaClosure::exact(const Graph& g, const Path& base,
                               std::size_t max_states) {
  if (g.vertex_count() > 255) {
    throw CapacityError("exact rotation closure packs vertices into bytes");
  }
  PosaClosure closure;
  closure.init(g, base);
  const int len = static_cast<int>(base.vertices.size());

  std::unordered_set<std::string> seen;
  std::deque<std::vector<Vertex>> queue;
  seen.insert(pack_state(base.vertices));
  queue.push_back(base.vertices);

  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  while (!queue.empty()) {
    const std::vector<Vertex> q = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < len; ++i) pos[q[i]] = i;
    const Vertex terminal = q.back();
    for (Vertex y : g.neighbors(terminal)) {
      const int i = pos[y];
      if (i < 0 || i >= len - 2) continue;
      ++closure.rotations_;
      std::vector<Vertex> next(q);
      std::reverse(next.begin() + i + 1, next.end());
      if (!seen.insert(pack_state(next)).second) continue;
      if (seen.size() > max_states) {
        throw CapacityError("exact rotation closure exceeded its state cap");
      }
      const Vertex z = next.back();
      if (closure.row_of_[z] < 0) {
        closure.discover(z, next, terminal, y);
      }
      queue.push_back(std::move(next));
    }
    for (int i = 0; i < len; ++i) pos[q[i]] = -1;
  }
  return closure;
}

VertexSet PosaClosure::r_set() const {
  VertexSet r = reachable_;
  std::sort(r.begin(), r.end());
  return r;
}

VertexSet PosaClosure::r_minus() const {
  const int len = static_cast<int>(base_.vertices.size());
  std::vector<int> pos(row_of_.size(), -1);
  for (int i = 0; i < len; ++i) pos[base_.vertices[i]] = i;
  VertexSet out;
  for (Vertex r : reachable_) {
    if (pos[r] > 0) out.push_back(base_.vertices[pos[r] - 1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet PosaClosure::r_plus() const {
  const int len = static_cast<int>(base_.vertices.size());
  std::vector<int> pos(row_of_.size(), -1);
  for (int i = 0; i < len; ++i) pos[base_.vertices[i]] = i;
  VertexSet out;
  for (Vertex r : reachable_) {
    if (pos[r] + 1 < len) out.push_back(base_.vertices[pos[r] + 1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Path PosaClosure::witness(Vertex r) const {
  if (r < 0 || r >= static_cast<Vertex>(row_of_.size()) || row_of_[r] < 0) {
    throw std::invalid_argument("vertex is not a reachable endpoint");
  }
  return Path{rows_[row_of_[r]]};
}

PosaClosure rotation_closure(const Graph& g, const Path& p, std::size_t max_states) {
  return PosaClosure::exact(g, p, max_states);
}

PosaReport posa_check(const Graph& g, const Path& p) {
  const PosaClosure closure = rotation_closure(g, p);
  PosaReport report;
  report.r = closure.r_set();
  report.r_minus = closure.r_minus();
  report.r_plus = closure.r_plus();
  report.neighborhood_of_r = external_neighborhood(g, report.r);

  VertexSet allowed;
  allowed.reserve(report.r_minus.size() + report.r_plus.size());
  std::set_union(report.r_minus.begin(), report.r_minus.end(),
                 report.r_plus.begin(), report.r_plus.end(),
                 std::back_inserter(allowed));
  report.contained = std::includes(allowed.begin(), allowed.end(),
                                   report.neighborhood_of_r.begin(),
                                   report.neighborhood_of_r.end());
  return report;
}

std::vector<Edge> boosters_from_path(const Graph& g, const Path& longest) {
  std::vector<Edge> found;
  const auto push_pair = [&](Vertex a, Vertex b) {
    if (a == b || g.has_edge(a, b)) return;
    found.emplace_back(std::min(a, b), std::max(a, b));
  };

  const PosaClosure first = PosaClosure::endpoint_bfs(g, longest);
  const Vertex x0 = longest.vertices.front();
  for (Vertex r : first.reachable()) push_pair(x0, r);

  // Second round: fix each reachable endpoint as the new start and
  // rotate from the other side.
  for (Vertex y : first.reachable()) {
    Path anchored = first.witness(y);
    std::reverse(anchored.vertices.begin(), anchored.vertices.end());
    const PosaClosure second = PosaClosure::endpoint_bfs(g, anchored);
    for (Vertex z : second.reachable()) push_pair(y, z);
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<Edge> boosters(const Graph& g, const BoosterOptions& opts) {
  const int n = g.vertex_count();
  if (opts.mode == BoosterOptions::Mode::exact) {
    if (n > opts.exact_cap) {
      throw CapacityError("exact booster enumeration beyond configured cap");
    }
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
      }
    }
    if (exact_hamiltonian(g, n).status == HamStatus::hamiltonian) {
      return non_edges;  // every non-edge of a Hamiltonian graph qualifies
    }
    const int base_len = exact_longest_path(g, n);
    std::vector<Edge> out;
    for (const Edge& e : non_edges) {
      Graph extended = g;
      extended.add_edge(e.first, e.second);
      if (exact_hamiltonian(extended, n).status == HamStatus::hamiltonian ||
          exact_longest_path(extended, n) > base_len) {
        out.push_back(e);
      }
    }
    return out;
  }

  // closure mode: derive a longest path (exact at small n, search otherwise)
  Path p = (n <= 16) ? exact_longest_path_witness(g)
                     : best_path_search(g, opts.seed);
  return boosters_from_path(g, p);
}

}  // namespace rgl
