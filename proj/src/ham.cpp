#include "rgl/ham.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rgl/errors.hpp"
#include "rgl/posa.hpp"
#include "rgl/rng.hpp"

namespace rgl {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  return adj;
}

class HamBacktracker {
 public:
  explicit HamBacktracker(const Graph& g)
      : n_(g.vertex_count()), adj_(adjacency_masks(g)) {}

  std::optional<Cycle> solve() {
    path_.clear();
    path_.push_back(0);
    if (extend(0, 1u)) {
      return Cycle{path_};
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex v, std::uint32_t visited) {
    const std::uint32_t full = (n_ == 32) ? ~0u : ((1u << n_) - 1);
    if (visited == full) return (adj_[v] & 1u) != 0;  // close back to 0

    const std::uint32_t open = full & ~visited;
    // every unvisited vertex still needs two usable cycle neighbors
    for (std::uint32_t rest = open; rest;) {
      const int w = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint32_t usable = adj_[w] & (open | (1u << v) | 1u);
      if (std::popcount(usable) < 2) return false;
    }
    // the open region plus the endpoint must reach everything and vertex 0
    {
      std::uint32_t reached = 1u << v;
      std::uint32_t frontier = reached;
      const std::uint32_t allowed = open | (1u << v) | 1u;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
          const int w = std::countr_zero(f);
          f &= f - 1;
          next |= adj_[w] & allowed;
        }
        next &= ~reached;
        if (!next) break;
        reached |= next;
        frontier = next;
      }
      if ((reached & open) != open || !(reached & 1u)) return false;
    }
    for (Vertex w : neighbors_sorted(v)) {
      const std::uint32_t bit = 1u << w;
      if (visited & bit) continue;
      path_.push_back(w);
      if (extend(w, visited | bit)) return true;
      path_.pop_back();
    }
    return false;
  }

  std::vector<Vertex> neighbors_sorted(Vertex v) const {
    std::vector<Vertex> out;
    for (std::uint32_t m = adj_[v]; m;) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<Vertex> path_;
};

}  // namespace

HamResult exact_hamiltonian(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 32) throw CapacityError("exact_hamiltonian beyond configured cap");
  HamResult result;
  if (n < 3 || g.min_degree() < 2 || !is_connected(g)) {
    result.status = HamStatus::not_hamiltonian;
    return result;
  }
  HamBacktracker solver(g);
  if (auto cycle = solver.solve()) {
    result.status = HamStatus::hamiltonian;
    result.cycle = std::move(cycle);
    result.best_path.vertices = result.cycle->vertices;
  } else {
    result.status = HamStatus::not_hamiltonian;
  }
  return result;
}

namespace {

// dp[mask] = set of endpoints of simple paths covering exactly `mask`
std::vector<std::uint32_t> path_dp(const Graph& g) {
  const int n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) dp[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = adj[v] & ~mask;
      while (ext) {
        const int w = std::countr_zero(ext);
        ext &= ext - 1;
        dp[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return dp;
}

}  // namespace

int exact_longest_path(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 25) throw CapacityError("exact_longest_path beyond configured cap");
  if (n == 0) return 0;
  const auto dp = path_dp(g);
  int best = 0;
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    if (dp[mask]) best = std::max(best, std::popcount(mask) - 1);
  }
  return best;
}

Path exact_longest_path_witness(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 25) throw CapacityError("exact_longest_path beyond configured cap");
  if (n == 0) return Path{};
  const auto dp = path_dp(g);
  const auto adj = adjacency_masks(g);
  std::uint32_t best_mask = 1;
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    if (dp[mask] && std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
  }
  Path p;
  std::uint32_t mask = best_mask;
  Vertex v = std::countr_zero(dp[mask]);
  p.vertices.push_back(v);
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev_mask = mask & ~(1u << v);
    std::uint32_t cands = dp[prev_mask] & adj[v];
    const Vertex u = std::countr_zero(cands);
    p.vertices.push_back(u);
    mask = prev_mask;
    v = u;
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

namespace {

class RotationSearch {
 public:
  RotationSearch(const Graph& g, const SearchOptions& opts)
      : g_(g),
        n_(g.vertex_count()),
        rng_(derive_seed(opts.seed, 0x726f7461)),
        on_path_(static_cast<std::size_t>(n_), 0) {
    budget_ = opts.budget
                  ? opts.budget
                  : static_cast<std::uint64_t>(
                        50.0 * n_ * std::log(std::max(n_, 2)) + 100);
  }

  HamResult run(const Path& initial) {
    HamResult result;
    if (n_ < 3 || !is_connected(g_)) {
      result.best_path = initial;
      return result;
    }
    Path path = initial.vertices.empty() ? seeded_path() : initial;
    greedy_extend(path);
    best_ = path;

    // stalls are broken by re-anchoring: reverse a witness path so the
    // far end becomes the rotating end; iterating this reaches endpoint
    // pairs a single two-level sweep would miss
    const std::uint64_t stall_limit = 4ull * n_;
    std::uint64_t stall = 0;
    while (budget_ > 0) {
      set_on_path(path);
      PosaClosure closure = PosaClosure::endpoint_bfs(g_, path);
      charge(closure.reachable().size());
      if (try_extend(closure, path)) {
        ++stats_.extensions;
        stall = 0;
        if (path.vertices.size() > best_.vertices.size()) best_ = path;
        continue;
      }
      if (auto cycle = try_close(closure, path)) {
        if (static_cast<int>(cycle->vertices.size()) == n_) {
          result.status = HamStatus::hamiltonian;
          result.cycle = std::move(cycle);
          result.best_path = path;
          result.stats = stats_;
          return result;
        }
        path = reopen(*cycle);
        greedy_extend(path);
        stall = 0;
        if (path.vertices.size() > best_.vertices.size()) best_ = path;
        continue;
      }
      if (++stall > stall_limit) {
        ++stats_.restarts;
        path = seeded_path();
        greedy_extend(path);
        stall = 0;
        if (path.vertices.size() > best_.vertices.size()) best_ = path;
        continue;
      }
      const auto& reach = closure.reachable();
      const Vertex anchor = reach[rng_.below(reach.size())];
      path = closure.witness(anchor);
      std::reverse(path.vertices.begin(), path.vertices.end());
      charge(1);
    }
    result.best_path = best_;
    result.stats = stats_;
    return result;
  }

 private:
  void charge(std::uint64_t cost) {
    stats_.rotations += cost;
    budget_ = (budget_ > cost) ? budget_ - cost : 0;
  }

  void set_on_path(const Path& p) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (Vertex v : p.vertices) on_path_[v] = 1;
  }

  Path seeded_path() {
    Path p;
    p.vertices.push_back(static_cast<Vertex>(rng_.below(n_)));
    greedy_extend(p);
    return p;
  }

  // extend both ends with the first unvisited neighbor until stuck
  void greedy_extend(Path& p) {
    set_on_path(p);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex w : g_.neighbors(p.vertices.back())) {
        if (!on_path_[w]) {
          p.vertices.push_back(w);
          on_path_[w] = 1;
          grew = true;
          break;
        }
      }
      for (Vertex w : g_.neighbors(p.vertices.front())) {
        if (!on_path_[w]) {
          p.vertices.insert(p.vertices.begin(), w);
          on_path_[w] = 1;
          grew = true;
          break;
        }
      }
    }
  }

  bool try_extend(const PosaClosure& closure, Path& path) {
    for (Vertex r : closure.reachable()) {
      for (Vertex w : g_.neighbors(r)) {
        if (!on_path_[w]) {
          path = closure.witness(r);
          path.vertices.push_back(w);
          greedy_extend(path);
          return true;
        }
      }
    }
    return false;
  }

  std::optional<Cycle> try_close(const PosaClosure& closure, const Path& path) {
    const Vertex anchor = path.vertices.front();
    for (Vertex r : closure.reachable()) {
      if (r != anchor && g_.has_edge(r, anchor)) {
        return Cycle{closure.witness(r).vertices};
      }
    }
    return std::nullopt;
  }

  // open a non-spanning cycle through an edge leaving it; the host is
  // connected, so one exists
  Path reopen(const Cycle& cycle) {
    const int m = static_cast<int>(cycle.vertices.size());
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (Vertex v : cycle.vertices) on_path_[v] = 1;
    for (int i = 0; i < m; ++i) {
      for (Vertex w : g_.neighbors(cycle.vertices[i])) {
        if (!on_path_[w]) {
          Path p;
          p.vertices.reserve(m + 1);
          for (int j = 1; j <= m; ++j) p.vertices.push_back(cycle.vertices[(i + j) % m]);
          p.vertices.push_back(w);
          return p;
        }
      }
    }
    // unreachable for connected hosts; fall back to the cycle as a path
    Path p;
    p.vertices = cycle.vertices;
    return p;
  }

  const Graph& g_;
  int n_;
  Rng rng_;
  std::vector<char> on_path_;
  std::uint64_t budget_ = 0;
  HamStats stats_;
  Path best_;
};

}  // namespace

HamResult rotation_extension_search(const Graph& g, const SearchOptions& opts) {
  RotationSearch search(g, opts);
  HamResult result = search.run(opts.initial);
  if (result.status == HamStatus::hamiltonian && !is_hamilton_cycle(g, *result.cycle)) {
    throw std::logic_error("search produced an invalid cycle witness");
  }
  return result;
}

HamResult hamilton_or_fallback(const Graph& g, const SearchOptions& opts, int exact_cap) {
  HamResult result = rotation_extension_search(g, opts);
  if (result.status == HamStatus::not_found && g.vertex_count() <= exact_cap) {
    HamResult exact = exact_hamiltonian(g, exact_cap);
    exact.stats = result.stats;
    exact.best_path = result.best_path;
    return exact;
  }
  return result;
}

Path best_path_search(const Graph& g, std::uint64_t seed) {
  SearchOptions opts;
  opts.seed = seed;
  HamResult res = rotation_extension_search(g, opts);
  if (res.status == HamStatus::hamiltonian) {
    return Path{res.cycle->vertices};
  }
  return res.best_path;
}

namespace {

struct BoosterHit {
  Edge edge;
  std::vector<Vertex> cycle;  // the (h+1)-cycle the new edge completes
};

// First pair in deterministic closure order that is a host edge missing
// from gamma and whose addition closes a cycle one vertex longer than
// the current path.
std::optional<BoosterHit> find_host_booster(const Graph& gamma, const Graph& host,
                                            const Path& path, HamStats& stats) {
  const PosaClosure first = PosaClosure::endpoint_bfs(gamma, path);
  stats.rotations += first.rotations_performed();
  const Vertex x0 = path.vertices.front();
  for (Vertex r : first.reachable()) {
    if (r != x0 && !gamma.has_edge(x0, r) && host.has_edge(x0, r)) {
      return BoosterHit{{std::min(x0, r), std::max(x0, r)}, first.witness(r).vertices};
    }
  }
  for (Vertex y : first.reachable()) {
    Path anchored = first.witness(y);
    std::reverse(anchored.vertices.begin(), anchored.vertices.end());
    const PosaClosure second = PosaClosure::endpoint_bfs(gamma, anchored);
    stats.rotations += second.rotations_performed();
    for (Vertex z : second.reachable()) {
      if (z != y && !gamma.has_edge(y, z) && host.has_edge(y, z)) {
        return BoosterHit{{std::min(y, z), std::max(y, z)}, second.witness(z).vertices};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

HamResult augment_with_boosters(const Graph& backbone, const Graph& host,
                                const PipelineOptions& opts) {
  const int n = backbone.vertex_count();
  if (n != host.vertex_count()) {
    throw std::invalid_argument("backbone and host must share the vertex set");
  }
  for (const auto& [u, v] : backbone.edges()) {
    if (!host.has_edge(u, v)) {
      throw std::invalid_argument("backbone is not a subgraph of the host");
    }
  }

  Graph gamma = backbone;
  HamStats total;
  SearchOptions sopts;
  sopts.seed = opts.seed;
  sopts.budget = opts.budget_per_step;

  HamResult res = hamilton_or_fallback(gamma, sopts, opts.exact_cap);
  total = res.stats;
  for (std::uint64_t step = 0; step <= static_cast<std::uint64_t>(n); ++step) {
    if (res.status == HamStatus::hamiltonian) {
      if (!is_hamilton_cycle(host, *res.cycle)) {
        throw std::logic_error("pipeline cycle escaped the host graph");
      }
      res.stats = total;
      res.stats.boosters_added = total.boosters_added;
      return res;
    }
    // not_hamiltonian from the exact fallback just means the current
    // backbone still needs boosters
    if (total.boosters_added >= static_cast<std::uint64_t>(n)) break;
    if (res.best_path.vertices.size() < 2) break;

    auto hit = find_host_booster(gamma, host, res.best_path, total);
    if (!hit) break;
    gamma.add_edge(hit->edge.first, hit->edge.second);
    ++total.boosters_added;

    if (static_cast<int>(hit->cycle.size()) == n) {
      Cycle cycle{hit->cycle};
      if (!is_hamilton_cycle(gamma, cycle)) {
        throw std::logic_error("booster cycle failed validation");
      }
      res.status = HamStatus::hamiltonian;
      res.cycle = std::move(cycle);
      continue;
    }
    // exploit the new edge: reopen the (h+1)-cycle into a longer path
    sopts.initial = Path{std::move(hit->cycle)};
    sopts.seed = derive_seed(opts.seed, total.boosters_added);
    res = hamilton_or_fallback(gamma, sopts, opts.exact_cap);
    total.rotations += res.stats.rotations;
    total.extensions += res.stats.extensions;
    total.restarts += res.stats.restarts;
  }
  HamResult out;
  out.status = HamStatus::not_found;
  out.best_path = res.best_path;
  out.stats = total;
  return out;
}

}  // namespace rgl
