#include "ksllm/vecops/vecops.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <cstring>

namespace ksllm::vecops {

namespace {

using detail::scale_scalar;
using detail::squared_l2_scalar;
using detail::sum_squares_scalar;

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return detail::avx2_supported();
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() {
  if (const char* env = std::getenv("KSLLM_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::avx2)) return Backend::avx2;
  }
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool set_backend(Backend backend) {
  if (!backend_available(backend)) return false;
  g_backend.store(backend, std::memory_order_relaxed);
  return true;
}

double squared_l2_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
#if defined(__x86_64__) || defined(_M_X64)
  if (active_backend() == Backend::avx2) {
    return detail::squared_l2_avx2(a.data(), b.data(), a.size());
  }
#endif
  return squared_l2_scalar(a.data(), b.data(), a.size());
}

double sum_of_squares(std::span<const double> v) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_backend() == Backend::avx2) {
    return detail::sum_squares_avx2(v.data(), v.size());
  }
#endif
  return sum_squares_scalar(v.data(), v.size());
}

void scale_in_place(std::span<double> v, double factor) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_backend() == Backend::avx2) {
    detail::scale_avx2(v.data(), v.size(), factor);
    return;
  }
#endif
  scale_scalar(v.data(), v.size(), factor);
}

}  // namespace ksllm::vecops
