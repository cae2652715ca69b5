#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bohr/eval_result.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Coefficient cache for the alpha-Cesaro operator: A_k^alpha and
/// A_k^{alpha+1}, where A_k^a = (a+1)_k / k! (Taylor coefficients of
/// (1-z)^{-(a+1)}).  Immutable after construction; all reads are
/// thread-safe.
class CesaroContext {
 public:
  CesaroContext(double alpha, std::size_t order);

  double alpha() const { return alpha_; }
  std::size_t order() const { return a_.size() - 1; }

  double a_coeff(std::size_t k) const { return a_[k]; }        // A_k^alpha
  double a_coeff_up(std::size_t k) const { return a_up_[k]; }  // A_k^{alpha+1}

  std::span<const double> a() const { return a_; }
  std::span<const double> a_up() const { return a_up_; }

 private:
  double alpha_;
  std::vector<double> a_, a_up_;
};

/// A_k^alpha without a context (recurrence from A_0 = 1).
double a_coeff(double alpha, std::size_t k);

/// C^alpha f: output coefficient n is (1/A_n^{alpha+1}) sum_{k<=n}
/// A_{n-k}^alpha a_k, computed by direct convolution up to f's order.
TruncatedSeries apply_operator(const CesaroContext& ctx, const TruncatedSeries& f);

/// Bohr sum of the operator: sum_n (1/A_n^{alpha+1} sum_{k<=n}
/// A_{n-k}^alpha m_k) r^n for nonnegative moduli m, truncated in n with a
/// certified geometric envelope (inner averages never exceed max m).
EvalResult bohr_sum(const CesaroContext& ctx, std::span<const double> moduli,
                    double r, double tol = 1e-12);

/// (alpha+1) Phi(r, 1, alpha+1): the operator majorant.
EvalResult lerch_majorant(const CesaroContext& ctx, double r, double tol = 1e-12);

/// Four-regime bound S_alpha(r) dominating every Bohr sum on [0,1).
EvalResult s_alpha_majorant(double alpha, double r, double tol = 1e-12);

/// bohr_sum <= s_alpha_majorant within combined error bounds.
bool majorant_dominates(double alpha, double r, std::span<const double> moduli,
                        double tol = 1e-12);

}  // namespace bohr
