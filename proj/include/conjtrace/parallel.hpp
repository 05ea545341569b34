#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conjtrace::par {

// Global worker-count knob. 0 means "use the OpenMP default".
// Every kernel below produces output identical to the width-1 serial
// reference: work items are independent and results are merged in index
// order, never in completion order.

int configured_width();
void set_width(int width);
int effective_width();

// Serial reference loop. The parallel kernels must match it bit for bit;
// tests run both and compare.
template <class Fn>
void for_each_index_serial(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
#ifdef _OPENMP
  if (effective_width() > 1 && count > 1) {
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(effective_width())
    for (long long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  for_each_index_serial(count, fn);
}

// Index-ordered map: slot i gets fn(i), so the merge order is fixed no
// matter how the iterations are scheduled.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, const T& init, Fn&& fn) {
  std::vector<T> out(count, init);
  for_each_index(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace conjtrace::par
