#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Vector arithmetic kernels used by the embedding and selection code paths.
// Every operation has a scalar reference kernel and, on x86-64, an AVX2
// variant. The variant is picked once at runtime from CPU capabilities; the
// KSLLM_SIMD environment variable ("scalar" or "avx2") or set_backend()
// overrides the choice. SIMD variants are equivalence-tested against the
// scalar kernels.

namespace ksllm::vecops {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend);

// Backend currently routing the public entry points.
Backend active_backend();

// Forces a backend; returns false (and leaves the selection unchanged) when
// the CPU does not support it.
bool set_backend(Backend backend);

// Sum of squared componentwise differences. Spans must have equal length.
double squared_l2_distance(std::span<const double> a, std::span<const double> b);

double sum_of_squares(std::span<const double> v);

void scale_in_place(std::span<double> v, double factor);

namespace detail {

double squared_l2_scalar(const double* a, const double* b, std::size_t n);
double sum_squares_scalar(const double* v, std::size_t n);
void scale_scalar(double* v, std::size_t n, double factor);

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
double squared_l2_avx2(const double* a, const double* b, std::size_t n);
double sum_squares_avx2(const double* v, std::size_t n);
void scale_avx2(double* v, std::size_t n, double factor);
#endif

}  // namespace detail

}  // namespace ksllm::vecops
