#include "bohr/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace bohr::kernels {

namespace {

using detail::KernelTable;

struct Resolved {
  KernelTable table;
  Backend backend;
};

Resolved resolve() {
  const char* force = std::getenv("BOHR_KERNELS");
  const bool want_scalar = force && std::strcmp(force, "scalar") == 0;

#if defined(__x86_64__) || defined(_M_X64)
  if (!want_scalar && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {{detail::dot_avx2, detail::sum_squares_avx2, detail::axpy_avx2,
             detail::power_sum_avx2},
            Backend::avx2};
  }
#elif defined(__aarch64__)
  if (!want_scalar) {
    return {{detail::dot_neon, detail::sum_squares_neon, detail::axpy_neon,
             detail::power_sum_neon},
            Backend::neon};
  }
#endif
  (void)want_scalar;
  return {{detail::dot_scalar, detail::sum_squares_scalar, detail::axpy_scalar,
           detail::power_sum_scalar},
          Backend::scalar};
}

const Resolved& resolved() {
  static const Resolved r = resolve();
  return r;
}

}  // namespace

Backend active_backend() { return resolved().backend; }

const char* backend_name() {
  switch (resolved().backend) {
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    case Backend::scalar: break;
  }
  return "scalar";
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  return resolved().table.dot(x.data(), y.data(), n);
}

double sum_squares(std::span<const double> x) {
  return resolved().table.sum_squares(x.data(), x.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  resolved().table.axpy(a, x.data(), y.data(), n);
}

void convolve_prefix(std::span<const double> x, std::span<const double> y,
                     std::span<double> out) {
  const std::size_t n = out.size();
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k] != 0.0) {
      resolved().table.axpy(x[k], y.data(), out.data() + k, n - k);
    }
  }
}

double power_sum(std::span<const double> coef, double r) {
  return resolved().table.power_sum(coef.data(), coef.size(), r);
}

void fill_powers(double r, std::span<double> out) {
  double p = 1.0;
  for (double& v : out) {
    v = p;
    p *= r;
  }
}

}  // namespace bohr::kernels
