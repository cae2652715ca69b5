#pragma once

#include "bohr/eval_result.hpp"

namespace bohr::specfun {

/// log Gamma(x) for x > 0 (Lanczos approximation, reflection below 0.5).
EvalResult ln_gamma(double x);

/// log |Gamma(x)| for any non-pole real x; sign of Gamma(x) in *sign.
double ln_gamma_signed(double x, int* sign);

/// psi(x) for x > 0: upward recurrence past 10, then the Bernoulli
/// asymptotic expansion.
EvalResult digamma(double x);

/// psi'(x) for x > 0, same scheme as digamma.
EvalResult trigamma(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
double pochhammer(double a, int k);

/// Gauss hypergeometric series F(a,b;c;z) for |z| < 1, or z = 1 with
/// c > a + b (Gauss closed form).  Terminating when a or b is a
/// non-positive integer.
EvalResult hyp2f1(double a, double b, double c, double z, double tol = 1e-12);

/// 3F2(1,1,1; c,c; z) = sum ((1)_k/(c)_k)^2 z^k for z in [0,1].
/// z = 1 requires 2c - 3 > 0; that boundary case converges only
/// polynomially, so the tail is certified by a product-comparison
/// bracket and the reported error bound widens as c -> 1.5.
EvalResult hyp3f2_unit_params(double c, double z, double tol = 1e-12);

/// Lerch transcendent Phi(z,s,a) = sum z^n (n+a)^{-s}, 0 <= z < 1, a > 0.
EvalResult lerch_phi(double z, double s, double a, double tol = 1e-12);

/// Dilogarithm Li_2(x) on [0,1].  Power series below 1/2; above, the
/// log-argument Bernoulli expansion (independent of the reflection
/// identity, which tests check against this implementation).
EvalResult dilog(double x);

/// pi^2/6 - Li_2(x), evaluated without cancellation near x = 1.
EvalResult dilog_complement(double x);

}  // namespace bohr::specfun
