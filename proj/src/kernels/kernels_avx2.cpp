// AVX2 variants of the elementwise kernels. Compiled with -mavx2 in its own
// translation unit; only reached after the runtime CPU check in dispatch.
// vmulpd/vaddpd/vsqrtpd are correctly rounded, so results are bitwise equal
// to the scalar reference (FMA contraction is disabled project-wide).

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)

#include <immintrin.h>

#include <cstddef>

#include "symmlab/kernels.hpp"

namespace symmlab::kernels::avx2 {

void norm3(const double* a, const double* b, const double* c, double* out,
           size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    const __m256d vc = _mm256_loadu_pd(c + i);
    const __m256d s = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(va, va), _mm256_mul_pd(vb, vb)),
        _mm256_mul_pd(vc, vc));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  if (i < n) scalar::norm3(a + i, b + i, c + i, out + i, n - i);
}

void graph_area_element(const double* x, const double* y, double* out,
                        size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d s = _mm256_add_pd(
        _mm256_add_pd(one, _mm256_mul_pd(vx, vx)), _mm256_mul_pd(vy, vy));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  if (i < n) scalar::graph_area_element(x + i, y + i, out + i, n - i);
}

}  // namespace symmlab::kernels::avx2

#endif  // x86
