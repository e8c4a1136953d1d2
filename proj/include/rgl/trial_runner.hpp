#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rgl {

// Runs fn(trial_index) for every index in [0, count). workers == 1 uses
// the serial reference loop; anything else dispatches the indices to an
// OpenMP pool (0 = library default size). Trials must be independent:
// results land in per-index slots, so the output is identical for every
// worker count. The parallel path is benchmarked against the serial one
// in tools/bench_kernels.
template <class Fn>
void run_trials(std::size_t count, int workers, Fn&& fn) {
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr failure = nullptr;
#pragma omp parallel num_threads(workers > 0 ? workers : omp_get_max_threads())
  {
#pragma omp for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

}  // namespace rgl
