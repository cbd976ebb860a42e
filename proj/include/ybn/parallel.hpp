#pragma once

#include <omp.h>

#include <cstddef>
#include <exception>
#include <mutex>

namespace ybn {

// serial selects the plain reference kernels; parallel selects the OpenMP ones.
enum class Execution { serial, parallel };

inline int worker_count() { return omp_get_max_threads(); }

inline void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

/// fn(i) for i in [0, n); the first exception thrown by any worker is rethrown here.
template <class Fn>
void for_each_index(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ybn
