#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

rgl::VertexSet external_neighborhood(const rgl::Graph& g,
                                     const rgl::VertexSet& u_set) {
  std::set<rgl::Vertex> u(u_set.begin(), u_set.end());
  rgl::VertexSet out;
  for (rgl::Vertex v = 0; v < g.vertex_count(); ++v) {
    if (u.count(v)) continue;
    bool hit = false;
    for (rgl::Vertex w : u) {
      if (g.has_edge(v, w)) hit = true;
    }
    if (hit) out.push_back(v);
  }
  return out;
}

std::size_t edges_within(const rgl::Graph& g, const rgl::VertexSet& u_set) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < u_set.size(); ++i) {
    for (std::size_t j = i + 1; j < u_set.size(); ++j) {
      if (g.has_edge(u_set[i], u_set[j])) ++count;
    }
  }
  return count;
}

std::size_t edges_between(const rgl::Graph& g, const rgl::VertexSet& u_set,
                          const rgl::VertexSet& w_set) {
  std::size_t count = 0;
  for (rgl::Vertex u : u_set) {
    for (rgl::Vertex w : w_set) {
      if (g.has_edge(u, w)) ++count;
    }
  }
  return count;
}

std::vector<rgl::VertexSet> components(const rgl::Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges()) parent[find(u)] = find(v);
  std::vector<rgl::VertexSet> by_root(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<rgl::VertexSet> out;
  for (auto& set : by_root) {
    if (!set.empty()) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(),
            [](const rgl::VertexSet& a, const rgl::VertexSet& b) {
              return a.front() < b.front();
            });
  return out;
}

rgl::VertexSet rotation_closure_exhaustive(const rgl::Graph& g, const rgl::Path& start) {
  std::set<std::vector<rgl::Vertex>> seen;
  std::vector<std::vector<rgl::Vertex>> queue{start.vertices};
  seen.insert(start.vertices);
  std::set<rgl::Vertex> ends{start.vertices.back()};
  while (!queue.empty()) {
    const std::vector<rgl::Vertex> path = queue.back();
    queue.pop_back();
    const int h = static_cast<int>(path.size()) - 1;
    for (int i = 0; i + 1 < h; ++i) {
      if (!g.has_edge(path[i], path[h])) continue;
      std::vector<rgl::Vertex> next = path;
      std::reverse(next.begin() + i + 1, next.end());
      if (seen.insert(next).second) {
        ends.insert(next.back());
        queue.push_back(std::move(next));
      }
    }
  }
  return rgl::VertexSet(ends.begin(), ends.end());
}

bool hamiltonian_by_permutations(const rgl::Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  std::vector<rgl::Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // fix perm[0] = 0; permute the rest
  do {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      if (!g.has_edge(perm[i], perm[(i + 1) % n])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

namespace {

template <class Neigh>
void longest_from(rgl::Vertex v, std::vector<char>& used, int len, int& best,
                  Neigh&& neighbors) {
  best = std::max(best, len);
  for (rgl::Vertex w : neighbors(v)) {
    if (!used[w]) {
      used[w] = 1;
      longest_from(w, used, len + 1, best, neighbors);
      used[w] = 0;
    }
  }
}

}  // namespace

int longest_path_backtracking(const rgl::Graph& g) {
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (rgl::Vertex v = 0; v < g.vertex_count(); ++v) {
    used[v] = 1;
    longest_from(v, used, 0, best,
                 [&](rgl::Vertex x) -> const std::vector<rgl::Vertex>& {
                   return g.neighbors(x);
                 });
    used[v] = 0;
  }
  return best;
}

int longest_path_backtracking(const rgl::DiGraph& g) {
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (rgl::Vertex v = 0; v < g.vertex_count(); ++v) {
    used[v] = 1;
    longest_from(v, used, 0, best,
                 [&](rgl::Vertex x) -> const std::vector<rgl::Vertex>& {
                   return g.out_neighbors(x);
                 });
    used[v] = 0;
  }
  return best;
}

std::pair<rgl::Graph, std::vector<rgl::Vertex>> online_dfs_naive(
    int n, rgl::BernoulliStream& stream) {
  rgl::Graph g(n);
  enum { T, U, S };
  std::vector<int> where(static_cast<std::size_t>(n), T);
  std::vector<rgl::Vertex> stack;
  std::set<std::pair<rgl::Vertex, rgl::Vertex>> queried;
  std::vector<rgl::Vertex> longest_stack;
  int remaining_t = n;
  int finished = 0;
  const auto ask = [&](rgl::Vertex a, rgl::Vertex b) {
    queried.insert({std::min(a, b), std::max(a, b)});
    return stream.next_bit() == 1;
  };
  while (finished < n) {
    if (stack.empty()) {
      for (rgl::Vertex v = 0; v < n; ++v) {
        if (where[v] == T) {
          where[v] = U;
          stack.push_back(v);
          --remaining_t;
          break;
        }
      }
    } else {
      const rgl::Vertex v = stack.back();
      rgl::Vertex found = -1;
      for (rgl::Vertex u = 0; u < n && found < 0; ++u) {
        if (where[u] != T) continue;
        if (queried.count({std::min(u, v), std::max(u, v)})) continue;
        if (ask(v, u)) {
          g.add_edge(v, u);
          found = u;
        }
      }
      if (found >= 0) {
        where[found] = U;
        stack.push_back(found);
        --remaining_t;
      } else {
        where[v] = S;
        stack.pop_back();
        ++finished;
      }
    }
    if (stack.size() > longest_stack.size()) longest_stack = stack;
  }
  // leftover pairs in lexicographic order
  for (rgl::Vertex u = 0; u < n; ++u) {
    for (rgl::Vertex v = u + 1; v < n; ++v) {
      if (queried.count({u, v})) continue;
      if (stream.next_bit()) g.add_edge(u, v);
    }
  }
  return {std::move(g), std::move(longest_stack)};
}

rgl::Graph gnp_naive(int n, double p, std::uint64_t seed) {
  rgl::Rng rng(seed);
  rgl::Graph g(n);
  // colexicographic order, matching the skip-based generator
  for (rgl::Vertex v = 1; v < n; ++v) {
    for (rgl::Vertex u = 0; u < v; ++u) {
      if (rng.next_unit() < p) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

bool expander_subsets(const rgl::Graph& g, rgl::VertexSet& current, rgl::Vertex next,
                      int k, double alpha) {
  if (!current.empty()) {
    const auto ext = external_neighborhood(g, current);
    if (static_cast<double>(ext.size()) <
        alpha * static_cast<double>(current.size())) {
      return false;
    }
  }
  if (static_cast<int>(current.size()) == k) return true;
  for (rgl::Vertex v = next; v < g.vertex_count(); ++v) {
    current.push_back(v);
    const bool ok = expander_subsets(g, current, v + 1, k, alpha);
    current.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_expander_bruteforce(const rgl::Graph& g, int k, double alpha) {
  rgl::VertexSet current;
  return expander_subsets(g, current, 0, k, alpha);
}

BigNat::BigNat(std::uint64_t value) {
  while (value) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    value >>= 32;
  }
}

BigNat BigNat::times(std::uint64_t value) const {
  return times(BigNat(value));
}

BigNat BigNat::times(const BigNat& other) const {
  BigNat out;
  if (limbs_.empty() || other.limbs_.empty()) return out;
  out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      const std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + other.limbs_.size();
    while (carry) {
      const std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

BigNat BigNat::pow(std::uint64_t base, unsigned exp) {
  BigNat result(1);
  for (unsigned i = 0; i < exp; ++i) result = result.times(base);
  return result;
}

int BigNat::compare(const BigNat& other) const {
  if (limbs_.size() != other.limbs_.size()) {
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigNat::div_small(std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t j = limbs_.size(); j-- > 0;) {
    const std::uint64_t cur = (rem << 32) | limbs_[j];
    limbs_[j] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat binomial_big(unsigned n, unsigned k) {
  if (k > n) return BigNat(0);
  BigNat result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result = result.times(n - k + i);
    result.div_small(i);  // exact: the running value is a binomial coefficient
  }
  return result;
}

}  // namespace oracle
