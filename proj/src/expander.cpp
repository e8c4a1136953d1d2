#include "rgl/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rgl/errors.hpp"
#include "rgl/rng.hpp"

namespace rgl {

ExpanderQuery::ExpanderQuery(int k_, double alpha_) : k(k_), alpha(alpha_) {
  if (k < 1 || !(alpha > 0.0)) {
    throw std::invalid_argument("expander query needs k >= 1 and alpha > 0");
  }
}

BackboneConfig::BackboneConfig(int d0_, std::uint64_t seed_) : d0(d0_), seed(seed_) {
  if (d0 < 1) throw std::invalid_argument("backbone needs d0 >= 1");
}

VertexSet small_vertices(const Graph& g, int d0) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < d0) out.push_back(v);
  }
  return out;
}

namespace {

constexpr int kExactCap = 20;

std::vector<std::uint32_t> adjacency_masks32(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  return adj;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

ExpanderVerdict expander_exact(const Graph& g, const ExpanderQuery& q) {
  const int n = g.vertex_count();
  if (n > kExactCap) {
    throw CapacityError("exact expander check beyond n=20");
  }
  ExpanderVerdict verdict;
  verdict.mode = CheckMode::exact;
  verdict.certified = true;
  const auto adj = adjacency_masks32(g);
  const std::uint32_t limit = (n >= 31) ? 0 : (1u << n);
  // neighborhood union per subset, built from the lowest set bit
  std::vector<std::uint32_t> nor(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    nor[mask] = nor[mask ^ low] | adj[std::countr_zero(low)];
    const int size = std::popcount(mask);
    if (size > q.k) continue;
    const int ext = std::popcount(nor[mask] & ~mask);
    if (static_cast<double>(ext) < q.alpha * size) {
      verdict.expander = false;
      verdict.witness = mask_to_set(mask);
      verdict.detail = "set with external neighborhood " + std::to_string(ext);
      return verdict;
    }
  }
  verdict.expander = true;
  return verdict;
}

ExpanderVerdict expander_sampled(const Graph& g, const ExpanderQuery& q,
                                 const SampleOptions& sample) {
  ExpanderVerdict verdict;
  verdict.mode = CheckMode::sampled;
  const int n = g.vertex_count();
  const int kmax = std::min(q.k, n);
  Rng rng(sample.seed);
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int t = 0; t < sample.samples; ++t) {
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(kmax)));
    for (int i = 0; i < size; ++i) {
      const std::size_t j = i + rng.below(static_cast<std::uint64_t>(n - i));
      std::swap(pool[i], pool[j]);
    }
    VertexSet u(pool.begin(), pool.begin() + size);
    const auto ext = external_neighborhood(g, u);
    if (static_cast<double>(ext.size()) < q.alpha * size) {
      std::sort(u.begin(), u.end());
      verdict.expander = false;
      verdict.certified = true;  // a concrete violating set refutes
      verdict.witness = std::move(u);
      verdict.detail = "sampled set with external neighborhood " +
                       std::to_string(ext.size());
      return verdict;
    }
  }
  verdict.expander = true;
  verdict.certified = false;
  verdict.detail = "no violation in " + std::to_string(sample.samples) + " samples";
  return verdict;
}

// refutation via an undersized component, when one exists
std::optional<ExpanderVerdict> refute_by_component(const Graph& g,
                                                   const ExpanderQuery& q) {
  auto comps = connected_components(g);
  if (comps.size() <= 1) return std::nullopt;
  const auto smallest = std::min_element(
      comps.begin(), comps.end(),
      [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  VertexSet u(*smallest);
  if (static_cast<int>(u.size()) > q.k) u.resize(static_cast<std::size_t>(q.k));
  const auto ext = external_neighborhood(g, u);
  if (static_cast<double>(ext.size()) < q.alpha * static_cast<double>(u.size())) {
    ExpanderVerdict verdict;
    verdict.mode = CheckMode::structural;
    verdict.expander = false;
    verdict.certified = true;
    verdict.witness = std::move(u);
    verdict.detail = "undersized connected component";
    return verdict;
  }
  return std::nullopt;
}

}  // namespace

ExpanderVerdict is_expander(const Graph& g, const ExpanderQuery& q, CheckMode mode,
                            const SampleOptions& sample, const StructuralContext& ctx) {
  switch (mode) {
    case CheckMode::exact:
      return expander_exact(g, q);
    case CheckMode::sampled:
      return expander_sampled(g, q, sample);
    case CheckMode::structural:
      break;
  }
  if (ctx.host == nullptr) {
    throw std::invalid_argument("structural expander check needs a host graph");
  }
  const int n = g.vertex_count();
  if (q.alpha > 2.0 || q.k > (n + 3) / 4) {
    throw std::invalid_argument(
        "structural mode certifies only (k,alpha) within (n/4, 2)");
  }
  ExpanderVerdict verdict;
  verdict.mode = CheckMode::structural;

  // an under-expanding singleton refutes outright
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(g.degree(v)) < q.alpha) {
      verdict.expander = false;
      verdict.certified = true;
      verdict.witness = VertexSet{v};
      verdict.detail = "vertex of degree " + std::to_string(g.degree(v));
      return verdict;
    }
  }
  if (auto refuted = refute_by_component(g, q)) return *refuted;

  const VertexSet small = small_vertices(*ctx.host, ctx.d0);
  std::vector<char> in_small(static_cast<std::size_t>(n), 0);
  for (Vertex v : small) in_small[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_small[v] && g.degree(v) < ctx.d0) {
      verdict.expander = false;
      verdict.detail = "non-SMALL vertex of backbone degree < d0";
      return verdict;
    }
  }

  AuditOptions aopts;
  aopts.seed = ctx.seed;
  aopts.samples = ctx.samples;
  const AuditReport host_audit = audit_properties(*ctx.host, ctx.d0, aopts);
  for (const char* name : {"P2", "P3", "P4", "P5"}) {
    const auto& check = host_audit.property(name);
    if (!check.holds) {
      verdict.expander = false;
      verdict.detail = std::string("host property ") + name + " failed: " + check.witness;
      return verdict;
    }
  }

  // P7 on the subgraph itself: disjoint ceil(n/sqrt(ln n))-sets joined by
  // an edge; sampled, so refutation-only evidence
  const double ln_n = std::log(std::max(2, n));
  const int s = static_cast<int>(std::ceil(n / std::sqrt(ln_n)));
  if (2 * s <= n) {
    Rng rng(derive_seed(ctx.seed, 7));
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int t = 0; t < ctx.samples; ++t) {
      for (int i = 0; i < 2 * s; ++i) {
        const std::size_t j = i + rng.below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[i], pool[j]);
      }
      VertexSet u(pool.begin(), pool.begin() + s);
      VertexSet w(pool.begin() + s, pool.begin() + 2 * s);
      if (edges_between(g, u, w) == 0) {
        verdict.expander = false;
        verdict.detail = "pair of large sets with no crossing edge (P7)";
        return verdict;
      }
    }
  }

  verdict.expander = true;
  verdict.certified = false;
  verdict.detail = "structural conditions hold (host P2-P5, degree floor, sampled P7)";
  // expanders in the (n/4, 2) regime are necessarily connected, so a
  // disconnected graph contradicts a positive verdict
  if (6 * q.k > n && q.alpha >= 2.0 && !is_connected(g)) {
    verdict.expander = false;
    verdict.certified = true;
    verdict.detail = "disconnected graph cannot expand at this scale";
  }
  return verdict;
}

namespace {

struct Thresholds {
  double ln_n;
  int u_cap;     // floor(n / ln^(1/2) n)
  int p6_size;   // ceil(n / ln^(1/2) n)
  double p4_per_vertex;  // ln^(3/4) n
  double p5_w_factor;    // ln^(1/4) n
};

Thresholds thresholds_for(int n) {
  Thresholds t;
  t.ln_n = std::log(std::max(2, n));
  const double root = std::sqrt(t.ln_n);
  t.u_cap = static_cast<int>(std::floor(n / root));
  t.p6_size = static_cast<int>(std::ceil(n / root));
  t.p4_per_vertex = std::pow(t.ln_n, 0.75);
  t.p5_w_factor = std::pow(t.ln_n, 0.25);
  return t;
}

std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
    if (i >= 9 && i + 1 < s.size()) {
      out += ",...";
      break;
    }
  }
  return out + "}";
}

// P3: shortest path of length 1..4 between distinct SMALL vertices, or a
// cycle of length <= 4 through a SMALL vertex.
PropertyCheck check_p3(const Graph& g, const VertexSet& small) {
  PropertyCheck check{"P3", true, "bfs", ""};
  const int n = g.vertex_count();
  std::vector<char> is_small(static_cast<std::size_t>(n), 0);
  for (Vertex v : small) is_small[v] = 1;
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> frontier, next, touched;
  for (Vertex v : small) {
    // distance-4 ball around v
    dist[v] = 0;
    touched.assign(1, v);
    frontier.assign(1, v);
    for (int depth = 1; depth <= 4 && !frontier.empty(); ++depth) {
      next.clear();
      for (Vertex x : frontier) {
        for (Vertex y : g.neighbors(x)) {
          if (dist[y] < 0) {
            dist[y] = depth;
            next.push_back(y);
            touched.push_back(y);
            if (is_small[y] && y != v && check.holds) {
              check.holds = false;
              check.witness = "SMALL vertices " + std::to_string(v) + " and " +
                              std::to_string(y) + " at distance " +
                              std::to_string(depth);
            }
          }
        }
      }
      frontier.swap(next);
    }
    for (Vertex x : touched) dist[x] = -1;
    if (!check.holds) return check;

    // short cycles through v: a triangle or a quadrilateral
    std::vector<char> nbr(static_cast<std::size_t>(n), 0);
    for (Vertex u : g.neighbors(v)) nbr[u] = 1;
    std::vector<int> common(static_cast<std::size_t>(n), 0);
    for (Vertex u : g.neighbors(v)) {
      for (Vertex t : g.neighbors(u)) {
        if (t == v) continue;
        if (nbr[t]) {
          check.holds = false;
          check.witness = "triangle through SMALL vertex " + std::to_string(v);
          return check;
        }
        if (++common[t] >= 2) {
          check.holds = false;
          check.witness = "4-cycle through SMALL vertex " + std::to_string(v);
          return check;
        }
      }
    }
  }
  return check;
}

void exact_subset_audit(const Graph& g, int d0, const Thresholds& th,
                        PropertyCheck& p4, PropertyCheck& p5, PropertyCheck& p6) {
  const int n = g.vertex_count();
  const auto adj = adjacency_masks32(g);
  p4.mode = p5.mode = p6.mode = "exact";
  const std::uint32_t limit = 1u << n;
  std::vector<std::uint32_t> ein(std::size_t{1} << n, 0);  // edges inside mask
  std::vector<int> cross(static_cast<std::size_t>(n), 0);
  bool p6_seen = false;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const int lv = std::countr_zero(low);
    const std::uint32_t rest = mask ^ low;
    ein[mask] = ein[rest] + static_cast<std::uint32_t>(std::popcount(adj[lv] & rest));
    const int size = std::popcount(mask);
    if (size > th.u_cap && size != th.p6_size) continue;

    if (size <= th.u_cap && p4.holds &&
        static_cast<double>(ein[mask]) > size * th.p4_per_vertex) {
      p4.holds = false;
      p4.witness = set_to_string(mask_to_set(mask)) + " spans " +
                   std::to_string(ein[mask]) + " edges";
    }
    const bool need_p5 = size <= th.u_cap && p5.holds;
    const bool need_p6 = size == th.p6_size && 2 * th.p6_size <= n && p6.holds;
    if (!need_p5 && !need_p6) continue;
    for (Vertex w = 0; w < n; ++w) {
      cross[w] = (mask & (1u << w)) ? -1 : std::popcount(adj[w] & mask);
    }
    if (need_p5) {
      // adversarial W: the heaviest eligible outside vertices
      const int w_cap = static_cast<int>(std::floor(size * th.p5_w_factor));
      if (w_cap >= 1) {
        std::vector<int> weights;
        for (Vertex w = 0; w < n; ++w) {
          if (cross[w] >= 0) weights.push_back(cross[w]);
        }
        std::sort(weights.begin(), weights.end(), std::greater<int>());
        long long heaviest = 0;
        for (int i = 0; i < std::min<int>(w_cap, weights.size()); ++i) {
          heaviest += weights[i];
        }
        if (static_cast<double>(heaviest) > d0 * size / 2.0) {
          p5.holds = false;
          p5.witness = "U=" + set_to_string(mask_to_set(mask)) + " admits " +
                       std::to_string(heaviest) + " crossing edges";
        }
      }
    }
    if (need_p6) {
      // adversarial W: the lightest outside vertices
      std::vector<int> weights;
      for (Vertex w = 0; w < n; ++w) {
        if (cross[w] >= 0) weights.push_back(cross[w]);
      }
      std::sort(weights.begin(), weights.end());
      long long lightest = 0;
      for (int i = 0; i < th.p6_size; ++i) lightest += weights[i];
      p6_seen = true;
      if (static_cast<double>(lightest) < 0.5 * n) {
        p6.holds = false;
        p6.witness = "U=" + set_to_string(mask_to_set(mask)) + " reaches only " +
                     std::to_string(lightest) + " crossing edges";
      }
    }
  }
  if (2 * th.p6_size > n || !p6_seen) p6.mode = "vacuous";
}

void sampled_subset_audit(const Graph& g, int d0, const Thresholds& th,
                          const AuditOptions& opts, PropertyCheck& p4,
                          PropertyCheck& p5, PropertyCheck& p6) {
  const int n = g.vertex_count();
  p4.mode = p5.mode = p6.mode = "sampled";
  Rng rng(derive_seed(opts.seed, 456));
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i;
  const auto draw = [&](int count, int offset) {
    for (int i = offset; i < offset + count; ++i) {
      const std::size_t j = i + rng.below(static_cast<std::uint64_t>(n - i));
      std::swap(pool[i], pool[j]);
    }
  };
  for (int t = 0; t < opts.samples && th.u_cap >= 1; ++t) {
    const int usize = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(th.u_cap)));
    draw(usize, 0);
    VertexSet u(pool.begin(), pool.begin() + usize);
    if (p4.holds && static_cast<double>(edges_within(g, u)) > usize * th.p4_per_vertex) {
      p4.holds = false;
      p4.witness = "sampled U of size " + std::to_string(usize);
    }
    const int w_cap = static_cast<int>(std::floor(usize * th.p5_w_factor));
    const int wsize = std::min(w_cap, n - usize);
    if (p5.holds && wsize >= 1) {
      // heaviest admissible W for this U
      std::vector<std::pair<int, Vertex>> weighted;
      std::vector<char> in_u(static_cast<std::size_t>(n), 0);
      for (Vertex v : u) in_u[v] = 1;
      for (Vertex w = 0; w < n; ++w) {
        if (in_u[w]) continue;
        int c = 0;
        for (Vertex x : g.neighbors(w)) c += in_u[x];
        weighted.emplace_back(-c, w);
      }
      std::sort(weighted.begin(), weighted.end());
      long long heaviest = 0;
      for (int i = 0; i < wsize; ++i) heaviest += -weighted[i].first;
      if (static_cast<double>(heaviest) > d0 * usize / 2.0) {
        p5.holds = false;
        p5.witness = "sampled U of size " + std::to_string(usize) +
                     " with heaviest W crossing " + std::to_string(heaviest);
      }
    }
  }
  if (2 * th.p6_size <= n) {
    for (int t = 0; t < opts.samples && p6.holds; ++t) {
      draw(2 * th.p6_size, 0);
      VertexSet u(pool.begin(), pool.begin() + th.p6_size);
      VertexSet w(pool.begin() + th.p6_size, pool.begin() + 2 * th.p6_size);
      const std::size_t crossing = edges_between(g, u, w);
      if (static_cast<double>(crossing) < 0.5 * n) {
        p6.holds = false;
        p6.witness = "sampled pair with " + std::to_string(crossing) + " edges";
      }
    }
  } else {
    p6.mode = "vacuous";
  }
}

}  // namespace

const PropertyCheck& AuditReport::property(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown property " + name);
}

bool AuditReport::all_hold() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyCheck& p) { return p.holds; });
}

AuditReport audit_properties(const Graph& g, int d0, const AuditOptions& opts) {
  const int n = g.vertex_count();
  AuditReport report;
  report.d0 = d0;
  report.small_set = small_vertices(g, d0);
  const Thresholds th = thresholds_for(n);

  PropertyCheck p1{"P1", true, "exact", ""};
  const int dmax = g.max_degree();
  const int dmin = g.min_degree();
  if (static_cast<double>(dmax) > 10.0 * th.ln_n) {
    p1.holds = false;
    p1.witness = "max degree " + std::to_string(dmax);
  } else if (dmin < 2) {
    p1.holds = false;
    p1.witness = "min degree " + std::to_string(dmin);
  }

  PropertyCheck p2{"P2", true, "exact", ""};
  if (static_cast<double>(report.small_set.size()) > std::pow(n, 0.3)) {
    p2.holds = false;
    p2.witness = "|SMALL| = " + std::to_string(report.small_set.size());
  }

  PropertyCheck p3 = check_p3(g, report.small_set);

  PropertyCheck p4{"P4", true, "", ""};
  PropertyCheck p5{"P5", true, "", ""};
  PropertyCheck p6{"P6", true, "", ""};
  if (n <= std::min(opts.exact_cap, kExactCap)) {
    exact_subset_audit(g, d0, th, p4, p5, p6);
  } else {
    sampled_subset_audit(g, d0, th, opts, p4, p5, p6);
  }

  report.properties = {p1, p2, p3, p4, p5, p6};
  return report;
}

Graph sparse_backbone(const Graph& g, const BackboneConfig& cfg) {
  const int n = g.vertex_count();
  Rng rng(cfg.seed);
  std::vector<Edge> picked;
  std::vector<Vertex> scratch;
  for (Vertex v = 0; v < n; ++v) {
    const auto& nbrs = g.neighbors(v);
    if (static_cast<int>(nbrs.size()) <= cfg.d0) {
      // SMALL vertices (and anything at or below the quota) keep every edge
      for (Vertex w : nbrs) picked.emplace_back(std::min(v, w), std::max(v, w));
      continue;
    }
    scratch.assign(nbrs.begin(), nbrs.end());
    for (int i = 0; i < cfg.d0; ++i) {
      const std::size_t j = i + rng.below(scratch.size() - i);
      std::swap(scratch[i], scratch[j]);
      picked.emplace_back(std::min(v, scratch[i]), std::max(v, scratch[i]));
    }
  }
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  return Graph::from_edges(n, picked);
}

}  // namespace rgl
