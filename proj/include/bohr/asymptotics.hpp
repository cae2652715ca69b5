#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bohr/eval_result.hpp"

namespace bohr::asymptotics {

/// Positive root of 3q = (3+q) log(1+q), about 7.57736.
double solve_q();

/// 4 sqrt(2q) / (3+q) with q = solve_q(), about 1.47217: the sharp
/// sqrt(1-r)^{-1} growth constant for the alpha = 1 Bohr sum.
double lower_constant();

/// 2 sqrt(2) (log 4 - 1), about 1.09261: the constant produced by the
/// first (t = r) witness term alone.
double first_term_constant();

/// Sum_k t^k phi_k(r) for the alpha = 1 basis, in closed form:
/// 2[-r(1-t) + (1-rt)(log(1-rt) - log(1-r))] / (r^2 (1-t)^2).
/// log differences are evaluated in log1p form so the r,t -> 1 corner
/// keeps full relative precision.
EvalResult bb_closed_sum(double t, double r);

/// phi_n(r) = 2 sum_{k>=n} (k-n+1)/((k+2)(k+1)) r^k (alpha = 1 basis).
EvalResult phi_n_alpha1(std::size_t n, double r, double tol = 1e-12);

/// sqrt(2) sqrt(log(1/(1-r^2)) / (1-r)).
double upper_envelope(double r);

struct ClassicalEnvelopes {
  double bombieri = 0.0;      // (3 - sqrt(8(1-r^2))) / r, valid 1/3 <= r <= 1/sqrt 2
  bool bombieri_in_range = false;
  double bombieri_bourgain = 0.0;  // 1 / sqrt(1-r^2), valid r > 1/sqrt 2
  bool bb_in_range = false;
};

ClassicalEnvelopes classical_envelopes(double r);

/// Evaluable two-term lower bound for the alpha = 1 Bohr sum of the
/// near-extremal construction, with t = r^q:
///   sqrt(1-t^2) bb_closed_sum(t,r)
///   - sqrt(1-t^2) sqrt(log(1/(1-t))) (2/(1-r^2)) sqrt(pi^2/6 - Li2(r^2)/r^2).
EvalResult lower_bound_profile(double r);

/// The two pieces of lower_bound_profile, each already scaled by
/// sqrt(1-r); profile_scaled = main_scaled - correction_scaled.
struct ProfileSample {
  double r = 0.0;
  double main_scaled = 0.0;
  double correction_scaled = 0.0;
  double profile_scaled = 0.0;
};

ProfileSample profile_sample(double r);

struct AsymptoticReport {
  double q = 0.0;
  double lower_constant = 0.0;
  double secondary_constant = 0.0;
  std::vector<ProfileSample> samples;
};

AsymptoticReport asymptotic_report(std::span<const double> rs);

}  // namespace bohr::asymptotics
