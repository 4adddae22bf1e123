#pragma once

#include <cstddef>

namespace catgeo {

// Selects between the OpenMP kernel and the serial reference loop. Both
// produce identical results: every index writes only its own output slot
// and reductions happen afterwards in index order.
enum class Execution { serial, parallel };

template <class F>
void for_each_index(std::size_t n, Execution ex, F&& body) {
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

// Applies CATGEO_THREADS (if set to a positive integer) as the OpenMP
// thread cap. Returns the resulting maximum thread count.
int apply_thread_cap_from_env();

}  // namespace catgeo
