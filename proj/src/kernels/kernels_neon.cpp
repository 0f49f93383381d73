// NEON variants for aarch64. Same expression trees as the scalar reference;
// vmulq/vaddq/vsqrtq_f64 are correctly rounded, so outputs match bitwise.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

#include "symmlab/kernels.hpp"

namespace symmlab::kernels::neon {

void norm3(const double* a, const double* b, const double* c, double* out,
           size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t va = vld1q_f64(a + i);
    const float64x2_t vb = vld1q_f64(b + i);
    const float64x2_t vc = vld1q_f64(c + i);
    const float64x2_t s = vaddq_f64(
        vaddq_f64(vmulq_f64(va, va), vmulq_f64(vb, vb)), vmulq_f64(vc, vc));
    vst1q_f64(out + i, vsqrtq_f64(s));
  }
  if (i < n) scalar::norm3(a + i, b + i, c + i, out + i, n - i);
}

void graph_area_element(const double* x, const double* y, double* out,
                        size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vy = vld1q_f64(y + i);
    const float64x2_t s =
        vaddq_f64(vaddq_f64(one, vmulq_f64(vx, vx)), vmulq_f64(vy, vy));
    vst1q_f64(out + i, vsqrtq_f64(s));
  }
  if (i < n) scalar::graph_area_element(x + i, y + i, out + i, n - i);
}

}  // namespace symmlab::kernels::neon

#endif  // __aarch64__
