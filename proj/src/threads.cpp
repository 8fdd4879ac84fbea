#include "awarekit/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace awarekit {

int default_thread_count() {
  if (const char* env = std::getenv("AWAREKIT_THREADS")) {
    try {
      std::size_t used = 0;
      int n = std::stoi(env, &used);
      if (used == std::string(env).size() && n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

int resolve_threads(int requested) { return requested > 0 ? requested : default_thread_count(); }

}  // namespace awarekit
