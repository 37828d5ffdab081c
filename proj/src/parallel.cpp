#include "catdeg/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace catdeg {

int configure_threads_from_env() {
  if (const char* raw = std::getenv("CATDEG_THREADS")) {
    try {
      const int cap = std::stoi(raw);
      if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
    } catch (const std::exception&) {
      // unparsable values leave the runtime default in place
    }
  }
  return omp_get_max_threads();
}

int max_threads() noexcept { return omp_get_max_threads(); }

}  // namespace catdeg
