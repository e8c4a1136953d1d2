#include "rgl/dfs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rgl {

namespace {

void check_order(int n, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order must be a permutation of the vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("order must be a permutation of the vertices");
    }
    seen[v] = 1;
  }
}

std::vector<Vertex> identity_order(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Shared bookkeeping for the offline traversals. Adjacency must already
// be sorted by priority rank.
class TraceBuilder {
 public:
  explicit TraceBuilder(int n) : status_(static_cast<std::size_t>(n), SetId::T) {
    trace_.n = n;
    trace_.events.reserve(2 * static_cast<std::size_t>(n));
  }

  SetId status(Vertex v) const { return status_[v]; }
  bool stack_empty() const { return stack_.empty(); }
  Vertex top() const { return stack_.back(); }
  std::size_t stack_size() const { return stack_.size(); }

  void push(Vertex v) {
    if (stack_.empty()) epoch_start_ = trace_.events.size() + 1;
    status_[v] = SetId::U;
    stack_.push_back(v);
    current_component_.push_back(v);
    trace_.events.push_back({v, SetId::T, SetId::U});
    if (stack_.size() > trace_.max_u_size) {
      trace_.max_u_size = stack_.size();
      trace_.max_u_step = trace_.events.size();
    }
  }

  void pop() {
    Vertex v = stack_.back();
    stack_.pop_back();
    status_[v] = SetId::S;
    trace_.events.push_back({v, SetId::U, SetId::S});
    if (stack_.empty()) {
      std::sort(current_component_.begin(), current_component_.end());
      trace_.epochs.push_back(
          {epoch_start_, trace_.events.size(), std::move(current_component_)});
      current_component_.clear();
    }
  }

  DfsTrace finish() {
    auto snap = trace_.snapshot_at(trace_.max_u_step);
    trace_.max_u_path.vertices = std::move(snap.u_stack);
    return std::move(trace_);
  }

 private:
  DfsTrace trace_;
  std::vector<SetId> status_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> current_component_;
  std::size_t epoch_start_ = 0;
};

template <class NeighborsOf>
DfsTrace dfs_offline(int n, std::span<const Vertex> order, NeighborsOf&& neighbors_of) {
  check_order(n, order);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  // neighbor lists re-sorted by priority rank, consumed left to right
  std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    nbr[v] = neighbors_of(v);
    std::sort(nbr[v].begin(), nbr[v].end(),
              [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);

  TraceBuilder tb(n);
  std::size_t t_cursor = 0;  // over `order`, for picking the next root
  std::size_t placed = 0;    // vertices that have reached S
  while (placed < static_cast<std::size_t>(n)) {
    if (tb.stack_empty()) {
      while (tb.status(order[t_cursor]) != SetId::T) ++t_cursor;
      tb.push(order[t_cursor]);
      continue;
    }
    const Vertex v = tb.top();
    auto& c = cursor[v];
    const auto& list = nbr[v];
    while (c < list.size() && tb.status(list[c]) != SetId::T) ++c;
    if (c < list.size()) {
      tb.push(list[c]);
    } else {
      tb.pop();
      ++placed;
    }
  }
  return tb.finish();
}

}  // namespace

DfsTrace::Snapshot DfsTrace::snapshot_at(std::size_t step) const {
  if (step > events.size()) throw std::out_of_range("step beyond trace end");
  std::vector<SetId> status(static_cast<std::size_t>(n), SetId::T);
  Snapshot snap;
  for (std::size_t i = 0; i < step; ++i) {
    const DfsEvent& e = events[i];
    status[e.v] = e.to;
    if (e.to == SetId::U) {
      snap.u_stack.push_back(e.v);
    } else {
      snap.u_stack.pop_back();
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (status[v] == SetId::S) snap.s_set.push_back(v);
    if (status[v] == SetId::T) snap.t_set.push_back(v);
  }
  return snap;
}

DfsTrace run_dfs(const Graph& g, std::span<const Vertex> order) {
  return dfs_offline(g.vertex_count(), order,
                     [&](Vertex v) { return g.neighbors(v); });
}

DfsTrace run_dfs(const Graph& g) {
  auto order = identity_order(g.vertex_count());
  return run_dfs(g, order);
}

DfsTrace run_dfs_directed(const DiGraph& g, std::span<const Vertex> order) {
  return dfs_offline(g.vertex_count(), order,
                     [&](Vertex v) { return g.out_neighbors(v); });
}

DfsTrace run_dfs_directed(const DiGraph& g) {
  auto order = identity_order(g.vertex_count());
  return run_dfs_directed(g, order);
}

namespace {

template <class HasLink, class NeighborsOf>
std::optional<std::string> check_invariants_impl(int n, const DfsTrace& trace,
                                                 HasLink&& has_link,
                                                 NeighborsOf&& neighbors_of) {
  if (trace.n != n) return "trace vertex count differs from graph";
  if (trace.events.size() != 2 * static_cast<std::size_t>(n)) {
    return "trace must hold exactly 2n events";
  }
  std::vector<SetId> status(static_cast<std::size_t>(n), SetId::T);
  std::vector<Vertex> stack;
  std::vector<int> moves(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const DfsEvent& e = trace.events[i];
    const std::string at = " at step " + std::to_string(i + 1);
    if (e.v < 0 || e.v >= n) return "event vertex out of range" + at;
    // (D1): exactly one legal move per step
    if (e.from == SetId::T && e.to == SetId::U) {
      if (status[e.v] != SetId::T) return "push of a non-T vertex" + at;
      // (D3): the stack spans a path
      if (!stack.empty() && !has_link(stack.back(), e.v)) {
        return "pushed vertex not adjacent to stack top (D3)" + at;
      }
      status[e.v] = SetId::U;
      stack.push_back(e.v);
    } else if (e.from == SetId::U && e.to == SetId::S) {
      if (stack.empty() || stack.back() != e.v) {
        return "pop does not match stack top" + at;
      }
      stack.pop_back();
      status[e.v] = SetId::S;
      // (D2): a finished vertex may not have unvisited neighbors
      for (Vertex w : neighbors_of(e.v)) {
        if (status[w] == SetId::T) {
          return "edge between S and T revealed (D2)" + at;
        }
      }
    } else {
      return "illegal move (D1)" + at;
    }
    if (++moves[e.v] > 2) return "vertex moved more than twice" + at;
  }
  if (!stack.empty()) return "stack not drained at end of trace";
  for (Vertex v = 0; v < n; ++v) {
    if (status[v] != SetId::S) return "vertex never finished";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_dfs_invariants(const Graph& g, const DfsTrace& trace) {
  return check_invariants_impl(
      g.vertex_count(), trace, [&](Vertex a, Vertex b) { return g.has_edge(a, b); },
      [&](Vertex v) -> const std::vector<Vertex>& { return g.neighbors(v); });
}

std::optional<std::string> check_dfs_invariants(const DiGraph& g, const DfsTrace& trace) {
  // Directed run: the stack path follows arcs forward; (D2) concerns
  // arcs out of finished vertices.
  return check_invariants_impl(
      g.vertex_count(), trace, [&](Vertex a, Vertex b) { return g.has_arc(a, b); },
      [&](Vertex v) -> const std::vector<Vertex>& { return g.out_neighbors(v); });
}

namespace {

// Fenwick tree over vertex ids supporting rank and select on the set T.
class TSet {
 public:
  explicit TSet(int n) : n_(n), tree_(static_cast<std::size_t>(n) + 1, 0), count_(n) {
    for (int i = 1; i <= n_; ++i) {
      tree_[i] += 1;
      const int j = i + (i & -i);
      if (j <= n_) tree_[j] += tree_[i];
    }
  }

  int count() const { return count_; }

  // members with id < v
  int rank(Vertex v) const {
    int s = 0;
    for (int i = v; i > 0; i -= i & -i) s += tree_[i];
    return s;
  }

  // k-th member, 1-based; k must be valid
  Vertex select(int k) const {
    int pos = 0;
    int bit = 1;
    while (bit * 2 <= n_) bit *= 2;
    for (; bit > 0; bit /= 2) {
      const int next = pos + bit;
      if (next <= n_ && tree_[next] < k) {
        pos = next;
        k -= tree_[next];
      }
    }
    return pos;  // 0-based id (internal index pos+1 maps to id pos)
  }

  void remove(Vertex v) {
    for (int i = v + 1; i <= n_; i += i & -i) tree_[i] -= 1;
    --count_;
  }

 private:
  int n_;
  std::vector<int> tree_;
  int count_;
};

// Row-major lexicographic index of the pair (u,v), u < v, used only for
// the post-exploration sweep bookkeeping at small n.
std::uint64_t lex_index(int n, Vertex u, Vertex v) {
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t uu = static_cast<std::uint64_t>(u);
  return uu * un - uu * (uu + 1) / 2 + static_cast<std::uint64_t>(v - u - 1);
}

constexpr int kMaterializeCap = 4096;

}  // namespace

std::pair<Graph, DfsTrace> online_dfs(int n, BernoulliStream& stream,
                                      const OnlineDfsOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bool materialize;
  switch (opts.tail) {
    case OnlineDfsOptions::Tail::materialize:
      materialize = true;
      break;
    case OnlineDfsOptions::Tail::skip:
      materialize = false;
      break;
    default:
      materialize = n <= kMaterializeCap;
  }
  const std::uint64_t total_pairs = pair_count(n);
  if (materialize && total_pairs > (1ULL << 34)) {
    throw std::invalid_argument("online_dfs: graph too large to materialize the tail");
  }

  Graph g(n);
  TraceBuilder tb(n);
  TSet t_set(n);
  std::vector<Vertex> ptr(static_cast<std::size_t>(n), 0);  // next id to scan
  std::vector<std::uint64_t> queried;                       // lex-indexed bitset
  if (materialize) queried.assign((total_pairs + 63) / 64, 0);
  const auto mark_queried = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    const std::uint64_t idx = lex_index(n, a, b);
    queried[idx >> 6] |= 1ULL << (idx & 63);
  };

  std::uint64_t queries = 0;
  std::size_t placed = 0;
  while (placed < static_cast<std::size_t>(n)) {
    if (tb.stack_empty()) {
      // root of a new component enters U for free
      const Vertex u = t_set.select(1);
      t_set.remove(u);
      tb.push(u);
      continue;
    }
    const Vertex v = tb.top();
    const int avail = t_set.count() - t_set.rank(ptr[v]);
    if (avail == 0) {
      tb.pop();
      ++placed;
      continue;
    }
    const std::uint64_t zeros = stream.gap();
    if (zeros >= static_cast<std::uint64_t>(avail)) {
      // every remaining candidate answers negative
      stream.consume_zeros(static_cast<std::uint64_t>(avail));
      queries += static_cast<std::uint64_t>(avail);
      if (materialize) {
        for (Vertex u = ptr[v]; u < n; ++u) {
          if (u != v && !g.has_edge(u, v) && t_set.rank(u + 1) - t_set.rank(u) == 1) {
            mark_queried(v, u);
          }
        }
      }
      ptr[v] = static_cast<Vertex>(n);
      tb.pop();
      ++placed;
    } else {
      // the (zeros+1)-th candidate at or after ptr[v] answers positive
      const int k = t_set.rank(ptr[v]) + static_cast<int>(zeros) + 1;
      const Vertex u = t_set.select(k);
      stream.consume_zeros(zeros);
      stream.consume_one();
      queries += zeros + 1;
      if (materialize) {
        int seen = 0;
        for (Vertex w = ptr[v]; seen <= static_cast<int>(zeros); ++w) {
          if (t_set.rank(w + 1) - t_set.rank(w) == 1) {
            mark_queried(v, w);
            ++seen;
          }
        }
      }
      g.add_edge(v, u);
      t_set.remove(u);
      ptr[v] = u + 1;
      tb.push(u);
    }
  }

  DfsTrace trace = tb.finish();
  trace.query_count = queries;

  // Exploration done: consume the pairs never queried, in lexicographic
  // order, so that exactly C(n,2) bits are read in total.
  const std::uint64_t remaining = total_pairs - queries;
  if (materialize) {
    std::uint64_t consumed = 0;
    for (Vertex u = 0; u < n && consumed < remaining; ++u) {
      for (Vertex v = u + 1; v < n && consumed < remaining; ++v) {
        const std::uint64_t idx = lex_index(n, u, v);
        if (queried[idx >> 6] & (1ULL << (idx & 63))) continue;
        ++consumed;
        if (stream.next_bit()) g.add_edge(u, v);
      }
    }
    trace.query_count += consumed;
  } else {
    stream.skip(remaining);
    trace.query_count += remaining;
    trace.tail_skipped = true;
  }
  return {std::move(g), std::move(trace)};
}

LongPathResult long_path_dfs2(const Graph& g) {
  const DfsTrace trace = run_dfs(g);
  LongPathResult result;
  result.longest = trace.max_u_path;
  result.max_u_size = trace.max_u_size;

  const int n = g.vertex_count();
  std::size_t s_size = 0, u_size = 0;
  std::size_t balance_step = 0;
  bool found = n == 0;
  for (std::size_t i = 0; i < trace.events.size() && !found; ++i) {
    if (trace.events[i].to == SetId::U) {
      ++u_size;
    } else {
      --u_size;
      ++s_size;
    }
    const std::size_t t_size = static_cast<std::size_t>(n) - s_size - u_size;
    if (s_size == t_size) {
      balance_step = i + 1;
      found = true;
    }
  }
  if (found && balance_step > 0) {
    auto snap = trace.snapshot_at(balance_step);
    result.at_balance.vertices = std::move(snap.u_stack);
    result.s_at_balance = snap.s_set.size();
  }
  return result;
}

std::optional<Cycle> cycle_from_path(const Graph& g, const Path& p, int k) {
  const int len = static_cast<int>(p.vertices.size());
  if (k < 1 || len < 2 * k) {
    throw std::invalid_argument("cycle_from_path needs |P| >= 2k vertices");
  }
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < len; ++i) pos[p.vertices[i]] = i;

  int best_a = -1, best_b = -1;
  for (int a = 0; a < k; ++a) {
    for (Vertex w : g.neighbors(p.vertices[a])) {
      const int b = pos[w];
      if (b < len - k) continue;  // not among the last k vertices
      if (b - a < 2) continue;    // path edge or degenerate
      if (best_a < 0 || b - a > best_b - best_a) {
        best_a = a;
        best_b = b;
      }
    }
  }
  if (best_a < 0) return std::nullopt;
  Cycle c;
  c.vertices.assign(p.vertices.begin() + best_a, p.vertices.begin() + best_b + 1);
  return c;
}

Path directed_long_path(const DiGraph& g) {
  return run_dfs_directed(g).max_u_path;
}

}  // namespace rgl
