#include "bohr/series.hpp"

#include <cmath>

#include "bohr/kernels.hpp"

namespace bohr {

double TruncatedSeries::eval(double r) const {
  return kernels::power_sum(coefficients, r);
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order, double r) {
  std::vector<double> coef(order + 1, 1.0);
  double tail = 0.0;
  if (r >= 0.0 && r < 1.0) tail = std::pow(r, static_cast<double>(order + 1)) / (1.0 - r);
  return {std::move(coef), tail};
}

}  // namespace bohr
