#include "bohr/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace bohr::kernels::detail {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
  }
  double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_squares_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t yi = vld1q_f64(y + i);
    yi = vfmaq_f64(yi, av, vld1q_f64(x + i));
    vst1q_f64(y + i, yi);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double power_sum_neon(const double* coef, std::size_t n, double r) {
  double pinit[2] = {1.0, r};
  float64x2_t powers = vld1q_f64(pinit);
  const float64x2_t step = vdupq_n_f64(r * r);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(coef + i), powers);
    powers = vmulq_f64(powers, step);
  }
  double s = vaddvq_f64(acc);
  double rk = vgetq_lane_f64(powers, 0);
  for (; i < n; ++i, rk *= r) s += coef[i] * rk;
  return s;
}

}  // namespace bohr::kernels::detail

#endif  // aarch64
