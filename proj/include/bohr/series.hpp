#pragma once

#include <cstddef>
#include <vector>

namespace bohr {

/// Finite prefix of a power series.  coefficients[k] multiplies r^k (or
/// z^k); tail_bound is a certified upper bound for the discarded tail at
/// the evaluation radius the series was built for.
struct TruncatedSeries {
  std::vector<double> coefficients;
  double tail_bound = 0.0;

  TruncatedSeries() = default;
  TruncatedSeries(std::vector<double> coef, double tail)
      : coefficients(std::move(coef)), tail_bound(tail) {}

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

  /// Sum coefficients[k] * r^k (tail_bound not applied).
  double eval(double r) const;

  /// Coefficients all equal to one (prefix of 1/(1-z)), tail bound for
  /// evaluation radius r.
  static TruncatedSeries geometric(std::size_t order, double r);
};

}  // namespace bohr
