#pragma once

namespace bohr {

/// Value of a series or special-function evaluation together with a
/// certified absolute error bound (truncation tail plus rounding slack).
struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
};

}  // namespace bohr
