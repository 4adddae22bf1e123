#include "catgeo/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace catgeo {

int apply_thread_cap_from_env() {
  if (const char* v = std::getenv("CATGEO_THREADS")) {
    try {
      const int t = std::stoi(v);
      if (t > 0) omp_set_num_threads(t);
    } catch (const std::exception&) {
      // Ignore malformed values and keep the OpenMP default.
    }
  }
  return omp_get_max_threads();
}

}  // namespace catgeo
