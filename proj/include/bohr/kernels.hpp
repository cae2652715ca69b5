#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the series, operator and sweep code.
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup from CPU
// capabilities.  The environment variable BOHR_KERNELS=scalar forces the
// reference path; the SIMD variants are equivalence-tested against it.

namespace bohr::kernels {

enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name();

/// Sum x[i]*y[i] over i < min(x.size(), y.size()).
double dot(std::span<const double> x, std::span<const double> y);

/// Sum x[i]^2.
double sum_squares(std::span<const double> x);

/// y[i] += a * x[i] for i < min(x.size(), y.size()).
void axpy(double a, std::span<const double> x, std::span<double> y);

/// Lower-triangular convolution: out[n] = sum_{k<=n} x[k] * y[n-k] for
/// n < out.size().  x and y must each have at least out.size() entries.
void convolve_prefix(std::span<const double> x, std::span<const double> y,
                     std::span<double> out);

/// Sum coef[k] * r^k.
double power_sum(std::span<const double> coef, double r);

/// out[k] = r^k.
void fill_powers(double r, std::span<double> out);

namespace detail {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*power_sum)(const double*, std::size_t, double);
};

// Reference kernels (always available).
double dot_scalar(const double* x, const double* y, std::size_t n);
double sum_squares_scalar(const double* x, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
double power_sum_scalar(const double* coef, std::size_t n, double r);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* x, const double* y, std::size_t n);
double sum_squares_avx2(const double* x, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
double power_sum_avx2(const double* coef, std::size_t n, double r);
#endif

#if defined(__aarch64__)
double dot_neon(const double* x, const double* y, std::size_t n);
double sum_squares_neon(const double* x, std::size_t n);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
double power_sum_neon(const double* coef, std::size_t n, double r);
#endif

}  // namespace detail

}  // namespace bohr::kernels
