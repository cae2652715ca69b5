#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bohr/eval_result.hpp"

namespace bohr {

enum class WeightKind { monomial, shifted_monomial, power, hypergeometric, cesaro_basis };

/// A family {phi_k(r)} of nonnegative weights on [0,1), with pointwise
/// evaluation and a certified tail sum.  Immutable after construction.
///
///   monomial          phi_k = r^k
///   shifted_monomial  phi_k = (k+1) r^k
///   power(alpha)      phi_0 = 1, phi_k = k^alpha r^k
///   hypergeometric    phi_k = |gamma_k| r^k, gamma_k the 2F1(a,b;c;.)
///                     coefficients; requires all gamma_k of one sign
///   cesaro_basis      phi_n = sum_{k>=n} A_{k-n}^alpha / A_k^{alpha+1} r^k
class WeightFamily {
 public:
  static WeightFamily monomial();
  static WeightFamily shifted_monomial();
  static WeightFamily power(double alpha);
  /// Rejects parameter triples whose gamma_k change sign (checked on a
  /// 200-term prefix plus a ratio-positivity certificate for k >= 1).
  static WeightFamily hypergeometric(double a, double b, double c);
  static WeightFamily cesaro_basis(double alpha);  // alpha > -1

  WeightKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double hyp_a() const { return a_; }
  double hyp_b() const { return b_; }
  double hyp_c() const { return c_; }
  std::string name() const;

 private:
  WeightFamily(WeightKind k, double alpha, double a, double b, double c)
      : kind_(k), alpha_(alpha), a_(a), b_(b), c_(c) {}
  WeightKind kind_;
  double alpha_ = 0.0;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0;
};

/// phi_k(r).
double weight_at(const WeightFamily& w, std::size_t k, double r, double tol = 1e-12);

/// phi_0(r), ..., phi_{count-1}(r) in one pass.
std::vector<double> weight_vector(const WeightFamily& w, std::size_t count, double r,
                                  double tol = 1e-12);

/// Sum_{k>=1} phi_k(r), closed form where available, otherwise certified
/// truncation.
EvalResult tail_sum(const WeightFamily& w, double r, double tol = 1e-12);

/// Sum_{n>=0} phi_n(r) for the cesaro_basis family: exactly 1/(1-r).
double cesaro_full_sum(double alpha, double r);

}  // namespace bohr
