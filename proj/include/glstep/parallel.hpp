#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>

#ifdef GLSTEP_HAVE_OPENMP
#include <omp.h>
#endif

namespace glstep {

inline void set_thread_count(int n) {
#ifdef GLSTEP_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int thread_count() {
#ifdef GLSTEP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, n). Results must be written to slot i so that
// output order never depends on scheduling. The first exception (lowest i)
// is rethrown after the loop.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr first;
  std::size_t first_index = n;
  std::mutex lock;
#ifdef GLSTEP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> g(lock);
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace glstep
