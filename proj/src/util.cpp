#include "exsteer/util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

namespace exsteer::util {

namespace {

int initial_thread_cap() {
  const char* env = std::getenv("EXSTEER_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  const long hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<int>(std::clamp(v, 1L, hw));
}

std::atomic<int> g_max_threads{-1};

}  // namespace

int max_threads() {
  int v = g_max_threads.load(std::memory_order_relaxed);
  if (v < 0) {
    v = initial_thread_cap();
    g_max_threads.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_max_threads(int n) { g_max_threads.store(std::max(1, n), std::memory_order_relaxed); }

void parallel_for(int n, const std::function<void(int, int)>& body) {
  const int workers = std::min(max_threads(), std::max(1, n / 4096));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace exsteer::util
