#pragma once

// Execution policy for the data-parallel kernels (psi grids, clearance
// scans). Every kernel accepts a policy; the serial path is the reference
// implementation and must produce bit-identical results to the OpenMP path,
// which the test suite checks. Work items write to disjoint preallocated
// slots, so the parallel schedule cannot change the arithmetic.

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vines {

struct ExecPolicy {
  bool parallel = true;
  int threads = 0;  // 0 = OpenMP default

  static ExecPolicy serial() { return ExecPolicy{false, 1}; }
  static ExecPolicy with_threads(int n) { return ExecPolicy{n != 1, n}; }
};

template <class Fn>
void parallel_for(std::int64_t n, const ExecPolicy& policy, Fn&& fn) {
#ifdef _OPENMP
  if (policy.parallel) {
    if (policy.threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(policy.threads)
      for (std::int64_t i = 0; i < n; ++i) fn(i);
    } else {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < n; ++i) fn(i);
    }
    return;
  }
#else
  (void)policy;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace vines
