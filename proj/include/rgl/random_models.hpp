#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rgl/graph.hpp"
#include "rgl/rng.hpp"

namespace rgl {

// Unordered pairs {u,v}, u < v < n, are indexed colexicographically:
// index(u,v) = v(v-1)/2 + u, i.e. (0,1),(0,2),(1,2),(0,3),...
std::uint64_t pair_count(int n);
std::uint64_t pair_to_index(Vertex u, Vertex v);
Edge index_to_pair(std::uint64_t index);

// Ordered pairs (u,v), u != v: index = u*(n-1) + (v - (v > u ? 1 : 0)).
std::uint64_t arc_count(int n);
std::uint64_t arc_to_index(int n, Vertex u, Vertex v);
Edge index_to_arc(int n, std::uint64_t index);

// G(n,p): every pair an edge independently with probability p.
// Uses geometric skipping over the colexicographic pair order, so the
// cost is O(edges) rather than O(n^2).
Graph gnp(int n, double p, std::uint64_t seed);

// G(n,m): uniformly random m-subset of pairs (Floyd's sampling).
Graph gnm(int n, std::uint64_t m, std::uint64_t seed);

// D(n,p): each of the n(n-1) ordered pairs an arc independently.
DiGraph dnp(int n, double p, std::uint64_t seed);

// A uniformly random permutation of all N = C(n,2) pairs; prefix i
// defines the i-th graph of the nested process sequence.
class EdgeProcess {
 public:
  EdgeProcess(int n, std::vector<std::uint64_t> order);

  int vertex_count() const { return n_; }
  std::uint64_t size() const { return order_.size(); }
  Edge edge_at(std::uint64_t i) const { return index_to_pair(order_.at(i)); }
  const std::vector<std::uint64_t>& order() const { return order_; }

  Graph snapshot(std::uint64_t m) const;

 private:
  int n_;
  std::vector<std::uint64_t> order_;  // pair indices, a permutation of [0,N)
};

EdgeProcess random_process(int n, std::uint64_t seed);
Graph snapshot(const EdgeProcess& proc, std::uint64_t m);

// Union of independent G(n, p_i) draws; the marginal edge probability
// is 1 - prod(1 - p_i).
Graph multi_exposure(int n, std::span<const double> probs, std::uint64_t seed);

struct StreamUnderflow : std::runtime_error {
  StreamUnderflow() : std::runtime_error("bernoulli stream exhausted") {}
};

// Lazily generated i.i.d. Bernoulli(p) bit sequence. The sequence is a
// pure function of (p, seed) no matter how it is consumed: internally
// the stream materializes only the positions of 1-bits, one geometric
// gap per RNG draw, so bulk skips and bit-by-bit reads see identical
// bits. An optional limit turns overruns into StreamUnderflow.
class BernoulliStream {
 public:
  static constexpr std::uint64_t kUnlimited =
      std::numeric_limits<std::uint64_t>::max();

  BernoulliStream(double p, std::uint64_t seed,
                  std::uint64_t limit = kUnlimited);

  double p() const { return p_; }
  std::uint64_t position() const { return pos_; }
  std::uint64_t limit() const { return limit_; }

  int next_bit();

  // Zeros ahead of the cursor before the next 1-bit (kNoOne if none).
  static constexpr std::uint64_t kNoOne =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t gap() const;

  // Advance over k zeros (k <= gap()).
  void consume_zeros(std::uint64_t k);
  // Advance over the 1-bit at the cursor (requires gap() == 0).
  void consume_one();
  // Advance exactly k bits; returns how many of them were ones.
  std::uint64_t skip(std::uint64_t k);

  // Position of the next 1 strictly before `stop`, consuming through
  // it; nullopt (cursor at stop) if the window holds no further ones.
  std::optional<std::uint64_t> next_one_before(std::uint64_t stop);

 private:
  void require(std::uint64_t new_pos) const;
  void resample_from(std::uint64_t from);

  double p_;
  std::uint64_t pos_ = 0;
  std::uint64_t next_one_;  // absolute position, kNoOne if never
  std::uint64_t limit_;
  Rng rng_;
};

BernoulliStream bernoulli_stream(double p, std::uint64_t seed);

}  // namespace rgl
