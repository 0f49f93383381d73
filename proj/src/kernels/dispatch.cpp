#include <cstdlib>
#include <cstring>

#include "symmlab/kernels.hpp"

namespace symmlab::kernels {

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
namespace avx2 {
void norm3(const double*, const double*, const double*, double*, size_t);
void graph_area_element(const double*, const double*, double*, size_t);
}  // namespace avx2
#endif
#if defined(__aarch64__)
namespace neon {
void norm3(const double*, const double*, const double*, double*, size_t);
void graph_area_element(const double*, const double*, double*, size_t);
}  // namespace neon
#endif

namespace {

Backend detect_backend() {
  const char* env = std::getenv("SYMMLAB_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
  const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (env && std::strcmp(env, "avx2") == 0) {
    return has_avx2 ? Backend::Avx2 : Backend::Scalar;
  }
  if (!env || std::strcmp(env, "auto") == 0)
    return has_avx2 ? Backend::Avx2 : Backend::Scalar;
#elif defined(__aarch64__)
  if (!env || std::strcmp(env, "auto") == 0 || std::strcmp(env, "neon") == 0)
    return Backend::Neon;
#endif
  return Backend::Scalar;
}

}  // namespace

Backend active_backend() {
  static const Backend b = detect_backend();
  return b;
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

void norm3(const double* a, const double* b, const double* c, double* out,
           size_t n) {
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    case Backend::Avx2: avx2::norm3(a, b, c, out, n); return;
#endif
#if defined(__aarch64__)
    case Backend::Neon: neon::norm3(a, b, c, out, n); return;
#endif
    default: scalar::norm3(a, b, c, out, n); return;
  }
}

void graph_area_element(const double* x, const double* y, double* out,
                        size_t n) {
  switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    case Backend::Avx2: avx2::graph_area_element(x, y, out, n); return;
#endif
#if defined(__aarch64__)
    case Backend::Neon: neon::graph_area_element(x, y, out, n); return;
#endif
    default: scalar::graph_area_element(x, y, out, n); return;
  }
}

}  // namespace symmlab::kernels
