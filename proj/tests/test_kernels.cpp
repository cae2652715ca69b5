#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bohr/kernels.hpp"

using namespace bohr;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) {
    x = (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 2.0 - 1.0;
  }
  return v;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 7, 8, 17, 64, 255, 1001};

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
  INFO("active backend: ", kernels::backend_name());
  std::mt19937_64 rng(42);
  for (std::size_t n : kSizes) {
    auto x = random_vec(rng, n);
    auto y = random_vec(rng, n);

    const double d_ref = kernels::detail::dot_scalar(x.data(), y.data(), n);
    CHECK(kernels::dot(x, y) == doctest::Approx(d_ref).epsilon(1e-12));

    const double s_ref = kernels::detail::sum_squares_scalar(x.data(), n);
    CHECK(kernels::sum_squares(x) == doctest::Approx(s_ref).epsilon(1e-12));

    auto y1 = y, y2 = y;
    kernels::detail::axpy_scalar(0.37, x.data(), y1.data(), n);
    kernels::axpy(0.37, x, y2);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-13));
    }

    const double p_ref = kernels::detail::power_sum_scalar(x.data(), n, 0.83);
    CHECK(kernels::power_sum(x, 0.83) == doctest::Approx(p_ref).epsilon(1e-12));
  }
}

TEST_CASE("convolve_prefix equals the direct double loop") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 9u, 33u, 130u}) {
    auto x = random_vec(rng, n);
    auto y = random_vec(rng, n);
    std::vector<double> ref(n, 0.0), got(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k <= i; ++k) ref[i] += x[k] * y[i - k];
    }
    kernels::convolve_prefix(x, y, got);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-11));
    }
  }
}

TEST_CASE("power_sum sums coef[k] r^k") {
  std::vector<double> coef{2.0, -1.0, 0.5, 4.0};
  const double r = 0.25;
  const double expect = 2.0 - 1.0 * r + 0.5 * r * r + 4.0 * r * r * r;
  CHECK(kernels::power_sum(coef, r) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("fill_powers") {
  std::vector<double> p(6);
  kernels::fill_powers(0.5, p);
  for (std::size_t k = 0; k < p.size(); ++k) {
    CHECK(p[k] == doctest::Approx(std::pow(0.5, double(k))));
  }
}
