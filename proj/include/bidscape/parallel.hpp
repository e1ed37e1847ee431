#pragma once

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bidscape {

// Honors the BIDSCAPE_THREADS environment variable. Call once at startup;
// without the variable (or without OpenMP) this is a no-op.
inline void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("BIDSCAPE_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
  }
#endif
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace bidscape
