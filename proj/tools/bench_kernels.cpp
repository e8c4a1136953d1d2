// Times the serial reference loop against the OpenMP trial runner on
// representative workloads and prints the speedups.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rgl/dfs.hpp"
#include "rgl/experiments.hpp"
#include "rgl/ham.hpp"
#include "rgl/random_models.hpp"
#include "rgl/trial_runner.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Fn>
void bench(const char* label, std::size_t trials, Fn&& fn) {
  std::atomic<std::uint64_t> sink{0};

  auto t0 = std::chrono::steady_clock::now();
  rgl::run_trials(trials, 1, [&](std::size_t i) { sink += fn(i); });
  const double serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  rgl::run_trials(trials, 0, [&](std::size_t i) { sink += fn(i); });
  const double parallel = seconds_since(t0);

  std::printf("%-28s %3zu trials   serial %7.3fs   openmp %7.3fs   speedup %.2fx\n",
              label, trials, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads available: %d\n", omp_get_max_threads());
#else
  std::printf("compiled without openmp; both columns run serially\n");
#endif

  bench("online-dfs n=100000", 8, [](std::size_t i) {
    rgl::BernoulliStream stream(1.2 / 100000.0, rgl::derive_seed(42, i));
    rgl::OnlineDfsOptions opts;
    opts.tail = rgl::OnlineDfsOptions::Tail::skip;
    const auto [g, trace] = rgl::online_dfs(100000, stream, opts);
    return trace.max_u_size;
  });

  bench("gnp-dfs n=20000 C=40", 8, [](std::size_t i) {
    const rgl::Graph g = rgl::gnp(20000, 40.0 / 20000.0, rgl::derive_seed(7, i));
    return static_cast<std::uint64_t>(rgl::run_dfs(g).max_u_path.length_edges());
  });

  bench("hitting-time n=400", 16, [](std::size_t i) {
    const auto proc = rgl::random_process(400, rgl::derive_seed(11, i));
    const auto times = rgl::compute_hitting_times(proc, rgl::derive_seed(13, i));
    return times.tau_hamiltonian_upper;
  });

  bench("rotation-search n=600", 16, [](std::size_t i) {
    const int n = 600;
    const double p = (std::log(n) + std::log(std::log(n)) + 2.0) / n;
    const rgl::Graph g = rgl::gnp(n, p, rgl::derive_seed(17, i));
    rgl::SearchOptions opts;
    opts.seed = rgl::derive_seed(19, i);
    const auto res = rgl::rotation_extension_search(g, opts);
    return res.stats.rotations;
  });

  return 0;
}
