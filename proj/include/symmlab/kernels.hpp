#pragma once

#include <cstddef>
#include <string>

namespace symmlab::kernels {

/// Elementwise Euclidean norm of per-cell 3-vectors:
/// out[i] = sqrt(a[i]^2 + b[i]^2 + c[i]^2).
/// This is the |sigma| cell density used by total variation.
void norm3(const double* a, const double* b, const double* c, double* out,
           size_t n);

/// Elementwise lateral-graph area element:
/// out[i] = sqrt(1 + x[i]^2 + y[i]^2)
/// with x = r * d(theta)/dr and y = r * d(theta)/dz at quadrature points.
void graph_area_element(const double* x, const double* y, double* out,
                        size_t n);

/// All kernels use only IEEE mul/add/sqrt (no FMA), so every backend
/// produces bitwise identical outputs; the dispatch is a speed choice only.
enum class Backend { Scalar, Avx2, Neon };

/// Active backend: best supported by the CPU unless overridden by
/// SYMMLAB_SIMD=scalar|avx2|neon|auto.
Backend active_backend();
std::string backend_name(Backend b);

/// Scalar reference implementations, always available (used by the
/// equivalence tests and as the portable fallback).
namespace scalar {
void norm3(const double* a, const double* b, const double* c, double* out,
           size_t n);
void graph_area_element(const double* x, const double* y, double* out,
                        size_t n);
}  // namespace scalar

}  // namespace symmlab::kernels
