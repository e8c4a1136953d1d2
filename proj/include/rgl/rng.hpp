#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace rgl {

// All randomness in the library flows through SplitMix64 (Steele, Lea,
// Flood 2014). It is fixed deliberately: golden tests and the CSV
// determinism guarantee depend on the exact output sequence, so do not
// swap the engine without regenerating every frozen expectation.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// Derives an independent stream seed from (master seed, index). Trials
// seeded this way are reproducible individually and in any order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 sm(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  sm.next();
  return sm.next();
}

class Rng {
 public:
  static constexpr std::uint64_t kNoSuccess =
      std::numeric_limits<std::uint64_t>::max();

  explicit Rng(std::uint64_t seed) : sm_(seed) {}

  std::uint64_t next_u64() { return sm_.next(); }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = kNoSuccess - kNoSuccess % bound;
    std::uint64_t x;
    do {
      x = sm_.next();
    } while (x >= limit);
    return x % bound;
  }

  // 53-bit uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(sm_.next() >> 11) * 0x1.0p-53;
  }

  // Number of failures before the first success of a Bernoulli(p) sequence.
  // Returns kNoSuccess when p == 0 (no success ever comes).
  std::uint64_t geometric(double p) {
    if (p >= 1.0) return 0;
    if (p <= 0.0) return kNoSuccess;
    const double u = next_unit();
    const double g = std::floor(std::log1p(-u) / std::log1p(-p));
    if (!(g < 9.0e18)) return kNoSuccess;
    return static_cast<std::uint64_t>(g);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  SplitMix64 sm_;
};

}  // namespace rgl
