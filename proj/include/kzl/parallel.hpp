#ifndef KZL_PARALLEL_HPP
#define KZL_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kzl {

// Verification sweeps (per-member certificates, per-cover colon checks,
// labeling fan-out) are data parallel: iterations touch disjoint results and
// every shared cache tolerates duplicate computation. The serial path is the
// reference; tests compare both.
enum class Exec { Serial, Parallel };

inline Exec default_exec() {
  const char* env = std::getenv("KOSZUL_SERIAL");
  if (env && env[0] == '1') return Exec::Serial;
  return Exec::Parallel;
}

template <class Fn>
void parallel_for(std::size_t n, Exec mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == Exec::Parallel && n > 1) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace kzl

#endif
