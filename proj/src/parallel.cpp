#include "symmlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace symmlab {

namespace {
int g_thread_override = 0;

int env_thread_count() {
  if (const char* s = std::getenv("SYMMLAB_THREADS")) {
    const int n = std::atoi(s);
    if (n >= 1) return n;
  }
  return 1;
}
}  // namespace

int thread_count() {
  return g_thread_override >= 1 ? g_thread_override : env_thread_count();
}

void set_thread_count(int n) { g_thread_override = n; }

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  const int workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  // Chunked work stealing; chunk size only affects scheduling, never results.
  const size_t chunk = std::max<size_t>(1, n / (static_cast<size_t>(workers) * 8));
  auto body = [&] {
    for (;;) {
      const size_t begin = next.fetch_add(chunk);
      if (begin >= n) return;
      const size_t end = std::min(n, begin + chunk);
      for (size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

double pairwise_sum(std::span<const double> x) {
  const size_t n = x.size();
  if (n <= 8) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

}  // namespace symmlab
