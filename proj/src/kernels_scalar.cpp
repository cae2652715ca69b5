#include "bohr/kernels.hpp"

namespace bohr::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

// Horner form; the SIMD variants use a stepped power vector instead, so
// equivalence tests compare them with a rounding tolerance.
double power_sum_scalar(const double* coef, std::size_t n, double r) {
  if (n == 0) return 0.0;
  double s = coef[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) s = s * r + coef[i];
  return s;
}

}  // namespace bohr::kernels::detail
