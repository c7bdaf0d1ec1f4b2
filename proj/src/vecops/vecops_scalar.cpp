#include "ksllm/vecops/vecops.hpp"

namespace ksllm::vecops::detail {

double squared_l2_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double sum_squares_scalar(const double* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += v[i] * v[i];
  }
  return acc;
}

void scale_scalar(double* v, std::size_t n, double factor) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] *= factor;
  }
}

}  // namespace ksllm::vecops::detail
