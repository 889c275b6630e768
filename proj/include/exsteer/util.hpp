#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace exsteer::util {

// Deterministic summation: left-to-right pairwise tree, independent of any
// worker partitioning. `term(i)` is evaluated once per index.
template <class F>
double pairwise_reduce(int lo, int hi, const F& term) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (int i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const int mid = lo + (hi - lo) / 2;
  return pairwise_reduce(lo, mid, term) + pairwise_reduce(mid, hi, term);
}

// Worker cap. Defaults to EXSTEER_THREADS (clamped to [1, hw]), else 1.
// Results are bit-identical for any setting: parallel loops only ever write
// disjoint index ranges and reductions stay serial.
int max_threads();
void set_max_threads(int n);

// Runs body(lo, hi) over a static partition of [0, n).
void parallel_for(int n, const std::function<void(int, int)>& body);

std::uint64_t fnv1a(std::string_view data);

// 17 significant digits, shortest-spelling-compatible round trip.
std::string format_g17(double v);

}  // namespace exsteer::util
