#pragma once

// Independent reference implementations for the test suite. Everything
// here is deliberately written the slow, obvious way and shares no code
// with the library paths it checks.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rgl/graph.hpp"
#include "rgl/random_models.hpp"

namespace oracle {

// membership scan over every vertex
rgl::VertexSet external_neighborhood(const rgl::Graph& g,
                                     const rgl::VertexSet& u_set);

// all-pairs scan
std::size_t edges_within(const rgl::Graph& g, const rgl::VertexSet& u_set);
std::size_t edges_between(const rgl::Graph& g, const rgl::VertexSet& u_set,
                          const rgl::VertexSet& w_set);

// union-find over the edge list
std::vector<rgl::VertexSet> components(const rgl::Graph& g);

// breadth-first closure over whole path states (vertex sequences), the
// exhaustive ground truth for rotation reachability; exponential, n <= 10
rgl::VertexSet rotation_closure_exhaustive(const rgl::Graph& g, const rgl::Path& start);

// next_permutation scan, n <= 10
bool hamiltonian_by_permutations(const rgl::Graph& g);

// recursive enumeration of all simple paths
int longest_path_backtracking(const rgl::Graph& g);
int longest_path_backtracking(const rgl::DiGraph& g);

// direct transcription of the S/U/T loop fed bit by bit; exercises the
// same stream left to right and materializes the leftover pairs
std::pair<rgl::Graph, std::vector<rgl::Vertex>> online_dfs_naive(
    int n, rgl::BernoulliStream& stream);

// per-pair coin flips
rgl::Graph gnp_naive(int n, double p, std::uint64_t seed);

// independent subset-enumeration expander check (bitmask-free)
bool is_expander_bruteforce(const rgl::Graph& g, int k, double alpha);

// arbitrary-precision naturals, just enough for binomial inequalities
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  static BigNat pow(std::uint64_t base, unsigned exp);
  BigNat times(const BigNat& other) const;
  BigNat times(std::uint64_t value) const;
  void div_small(std::uint32_t divisor);  // exact division only

  // -1, 0, +1
  int compare(const BigNat& other) const;

 private:
  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

BigNat binomial_big(unsigned n, unsigned k);

}  // namespace oracle
