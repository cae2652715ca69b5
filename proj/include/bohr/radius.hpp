#pragma once

#include "bohr/weights.hpp"

namespace bohr {

/// A weight family with exponent p, solved for the minimal positive root R
/// of phi_0(x) = factor * sum_{k>=1} phi_k(x), where factor is 2/p for
/// p <= 2 and 1 for p > 2.
struct RadiusProblem {
  WeightFamily weights;
  double p = 1.0;
  double tolerance = 1e-12;
};

enum class RootStatus { found, no_root_below_one };

struct RootResult {
  RootStatus status = RootStatus::no_root_below_one;
  double radius = 1.0;
  double residual = 0.0;      // defining function at the returned radius
  double bracket_lo = 0.0;    // sign change bracket, hi - lo <= tolerance
  double bracket_hi = 0.0;
  int iterations = 0;
};

double effective_factor(double p);

/// Scan [0, 1-1e-6] on a 1e-3 grid for the first sign change of the
/// defining function, then bisect.  Reports no_root_below_one (not an
/// error) when the function never changes sign.
RootResult general_radius(const RadiusProblem& prob);

enum class ClosedFormKind { r1, r2, r3 };

/// R1 = p/(2+p), R2 = 1 - sqrt(2/(2+p)), R3 = (p+1-sqrt(2p+1))/p,
/// for p in (0,2].
double closed_form_radius(ClosedFormKind kind, double p);

/// Minimal positive root of |F(a,b;c;x) - 1| = p/2.
RootResult hypergeometric_radius(double a, double b, double c, double p,
                                 double tol = 1e-12);

/// Minimal positive root of sum (alpha+1-2n)/(n+alpha+1) x^n = 0,
/// equivalently 3(1+alpha) Phi(x,1,alpha+1) = 2/(1-x).  The coefficients
/// stay finite as alpha -> -1+, but the Lerch series converges slowly
/// there, so solves near that edge cost noticeably more terms.
RootResult cesaro_radius(double alpha, double tol = 1e-12);

}  // namespace bohr
