#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace symmlab {

/// Worker count used by parallel_for. Resolution order: value set by
/// set_thread_count (CLI/tests), else SYMMLAB_THREADS, else 1.
int thread_count();
void set_thread_count(int n);  // n <= 0 restores the environment default

/// Runs fn(i) for i in [0, n). Each index writes only its own outputs, so
/// the result is identical for every worker count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

/// Deterministic pairwise sum: a fixed reduction tree over the array, so
/// the result is bitwise reproducible regardless of threading or SIMD
/// backend. Used for every accumulation that feeds a reported number.
double pairwise_sum(std::span<const double> x);

}  // namespace symmlab
