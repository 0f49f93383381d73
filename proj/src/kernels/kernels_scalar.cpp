#include <cmath>
#include <cstddef>

#include "symmlab/kernels.hpp"

namespace symmlab::kernels::scalar {

void norm3(const double* a, const double* b, const double* c, double* out,
           size_t n) {
  for (size_t i = 0; i < n; ++i)
    out[i] = std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
}

void graph_area_element(const double* x, const double* y, double* out,
                        size_t n) {
  for (size_t i = 0; i < n; ++i)
    out[i] = std::sqrt(1.0 + x[i] * x[i] + y[i] * y[i]);
}

}  // namespace symmlab::kernels::scalar
