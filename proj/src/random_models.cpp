#include "rgl/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace rgl {

std::uint64_t pair_count(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  return un * (un - (n > 0 ? 1 : 0)) / 2;
}

std::uint64_t pair_to_index(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  if (u < 0 || u == v) throw std::invalid_argument("bad vertex pair");
  const std::uint64_t uv = static_cast<std::uint64_t>(v);
  return uv * (uv - 1) / 2 + static_cast<std::uint64_t>(u);
}

Edge index_to_pair(std::uint64_t index) {
  // v = largest integer with v(v-1)/2 <= index
  std::uint64_t v = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while ((v + 1) * v / 2 <= index) ++v;
  const std::uint64_t u = index - v * (v - 1) / 2;
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::uint64_t arc_count(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  return n > 0 ? un * (un - 1) : 0;
}

std::uint64_t arc_to_index(int n, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
    throw std::invalid_argument("bad ordered pair");
  }
  return static_cast<std::uint64_t>(u) * (n - 1) +
         static_cast<std::uint64_t>(v > u ? v - 1 : v);
}

Edge index_to_arc(int n, std::uint64_t index) {
  const std::uint64_t u = index / (n - 1);
  std::uint64_t v = index % (n - 1);
  if (v >= u) ++v;
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability outside [0,1]");
  }
}

// Indices of success positions among `total` Bernoulli(p) trials,
// visited via geometric gaps.
template <class Emit>
void sample_positions(std::uint64_t total, double p, Rng& rng, Emit&& emit) {
  std::uint64_t pos = 0;
  while (pos < total) {
    const std::uint64_t gap = rng.geometric(p);
    if (gap == Rng::kNoSuccess || gap >= total - pos) break;
    pos += gap;
    emit(pos);
    ++pos;
  }
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  check_probability(p);
  Graph g(n);
  Rng rng(seed);
  sample_positions(pair_count(n), p, rng, [&](std::uint64_t idx) {
    const auto [u, v] = index_to_pair(idx);
    g.add_edge(u, v);
  });
  return g;
}

Graph gnm(int n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t total = pair_count(n);
  if (m > total) throw std::invalid_argument("gnm: m exceeds pair count");
  // Floyd's sampling: uniform m-subset of [0, total) with m draws.
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    chosen.insert(chosen.count(t) ? j : t);
  }
  Graph g(n);
  std::vector<std::uint64_t> sorted(chosen.begin(), chosen.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t idx : sorted) {
    const auto [u, v] = index_to_pair(idx);
    g.add_edge(u, v);
  }
  return g;
}

DiGraph dnp(int n, double p, std::uint64_t seed) {
  check_probability(p);
  DiGraph g(n);
  Rng rng(seed);
  sample_positions(arc_count(n), p, rng, [&](std::uint64_t idx) {
    const auto [u, v] = index_to_arc(n, idx);
    g.add_arc(u, v);
  });
  return g;
}

EdgeProcess::EdgeProcess(int n, std::vector<std::uint64_t> order)
    : n_(n), order_(std::move(order)) {
  if (order_.size() != pair_count(n)) {
    throw std::invalid_argument("edge process order must cover all pairs");
  }
}

Graph EdgeProcess::snapshot(std::uint64_t m) const {
  if (m > order_.size()) throw std::invalid_argument("snapshot beyond process end");
  Graph g(n_);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto [u, v] = index_to_pair(order_[i]);
    g.add_edge(u, v);
  }
  return g;
}

EdgeProcess random_process(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("process needs n >= 2");
  std::vector<std::uint64_t> order(pair_count(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  return EdgeProcess(n, std::move(order));
}

Graph snapshot(const EdgeProcess& proc, std::uint64_t m) {
  return proc.snapshot(m);
}

Graph multi_exposure(int n, std::span<const double> probs, std::uint64_t seed) {
  if (probs.empty()) throw std::invalid_argument("multi_exposure needs >= 1 round");
  for (double p : probs) check_probability(p);
  Graph g(n);
  for (std::size_t round = 0; round < probs.size(); ++round) {
    Rng rng(derive_seed(seed, round));
    sample_positions(pair_count(n), probs[round], rng, [&](std::uint64_t idx) {
      const auto [u, v] = index_to_pair(idx);
      if (!g.has_edge(u, v)) g.add_edge(u, v);
    });
  }
  return g;
}

BernoulliStream::BernoulliStream(double p, std::uint64_t seed,
                                 std::uint64_t limit)
    : p_(p), limit_(limit), rng_(seed) {
  check_probability(p);
  resample_from(0);
}

void BernoulliStream::resample_from(std::uint64_t from) {
  const std::uint64_t gap = rng_.geometric(p_);
  if (gap == Rng::kNoSuccess || kNoOne - gap < from) {
    next_one_ = kNoOne;
  } else {
    next_one_ = from + gap;
  }
}

void BernoulliStream::require(std::uint64_t new_pos) const {
  if (limit_ != kUnlimited && new_pos > limit_) throw StreamUnderflow();
}

int BernoulliStream::next_bit() {
  require(pos_ + 1);
  if (pos_ == next_one_) {
    ++pos_;
    resample_from(pos_);
    return 1;
  }
  ++pos_;
  return 0;
}

std::uint64_t BernoulliStream::gap() const {
  return next_one_ == kNoOne ? kNoOne : next_one_ - pos_;
}

void BernoulliStream::consume_zeros(std::uint64_t k) {
  if (k > gap()) throw std::logic_error("consume_zeros past the next 1-bit");
  require(pos_ + k);
  pos_ += k;
}

void BernoulliStream::consume_one() {
  if (pos_ != next_one_) throw std::logic_error("cursor is not on a 1-bit");
  require(pos_ + 1);
  ++pos_;
  resample_from(pos_);
}

std::uint64_t BernoulliStream::skip(std::uint64_t k) {
  require(pos_ + k);
  const std::uint64_t stop = pos_ + k;
  std::uint64_t ones = 0;
  while (next_one_ != kNoOne && next_one_ < stop) {
    ++ones;
    pos_ = next_one_ + 1;
    resample_from(pos_);
  }
  pos_ = stop;
  return ones;
}

std::optional<std::uint64_t> BernoulliStream::next_one_before(std::uint64_t stop) {
  require(stop);
  if (next_one_ == kNoOne || next_one_ >= stop) {
    pos_ = stop;
    return std::nullopt;
  }
  const std::uint64_t at = next_one_;
  pos_ = at + 1;
  resample_from(pos_);
  return at;
}

BernoulliStream bernoulli_stream(double p, std::uint64_t seed) {
  return BernoulliStream(p, seed);
}

}  // namespace rgl
