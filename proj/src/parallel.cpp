#include "conjtrace/parallel.hpp"

#include <atomic>

namespace conjtrace::par {

namespace {
std::atomic<int> g_width{0};
}

int configured_width() { return g_width.load(); }

void set_width(int width) { g_width.store(width < 0 ? 0 : width); }

int effective_width() {
  int w = g_width.load();
#ifdef _OPENMP
  if (w == 0) w = omp_get_max_threads();
#else
  if (w == 0) w = 1;
#endif
  return w < 1 ? 1 : w;
}

}  // namespace conjtrace::par
