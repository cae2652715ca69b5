#include "bohr/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bohr::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPiSqOver6 = 1.6449340668482264365;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Bernoulli numbers B_2, B_4, ..., B_20.
constexpr double kBernoulli[10] = {
    1.0 / 6.0,      -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0};

bool is_nonpos_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos g = 7, 9-term coefficient set (double precision, relative error
// below 1e-15 on the positive axis).
double lanczos_ln_gamma(double x) {
  static const double c[9] = {
      0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,  12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  double acc = c[0];
  for (int i = 1; i < 9; ++i) acc += c[i] / (x - 1.0 + i);
  const double t = x + 6.5;
  return 0.91893853320467274178 /* log sqrt(2 pi) */ +
         (x - 0.5) * std::log(t) - t + std::log(acc);
}

// sin(pi x) with argument reduction against the nearest integer.
double sin_pi(double x) {
  double n = std::round(x);
  double f = x - n;
  double s = std::sin(kPi * f);
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

}  // namespace

EvalResult ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  double v;
  if (x >= 0.5) {
    v = lanczos_ln_gamma(x);
  } else {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    v = std::log(kPi / sin_pi(x)) - lanczos_ln_gamma(1.0 - x);
  }
  return {v, 1e-14 * (std::abs(v) + 1.0)};
}

double ln_gamma_signed(double x, int* sign) {
  if (is_nonpos_integer(x)) {
    throw std::domain_error("ln_gamma_signed: pole at non-positive integer");
  }
  if (x > 0.0) {
    if (sign) *sign = 1;
    return ln_gamma(x).value;
  }
  const double s = sin_pi(x);
  if (sign) *sign = s > 0.0 ? 1 : -1;
  return std::log(kPi / std::abs(s)) - ln_gamma(1.0 - x).value;
}

EvalResult digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ log x - 1/(2x) - sum B_2k / (2k x^2k)
  const double inv2 = 1.0 / (x * x);
  double v = std::log(x) - 0.5 / x;
  double p = inv2;
  for (int k = 1; k <= 7; ++k) {
    v -= kBernoulli[k - 1] / (2 * k) * p;
    p *= inv2;
  }
  // enveloping alternating series: remainder below first omitted term
  const double rem = std::abs(kBernoulli[7] / 16.0) * p;
  v += shift;
  return {v, rem + 1e-15 * (std::abs(v) + 1.0)};
}

EvalResult trigamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("trigamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/(2x^2) + sum B_2k / x^{2k+1}
  const double inv2 = 1.0 / (x * x);
  double v = 1.0 / x + 0.5 * inv2;
  double p = inv2 / x;
  for (int k = 1; k <= 7; ++k) {
    v += kBernoulli[k - 1] * p;
    p *= inv2;
  }
  const double rem = std::abs(kBernoulli[7]) * p;
  v += shift;
  return {v, rem + 1e-15 * (std::abs(v) + 1.0)};
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: requires k >= 0");
  double v = 1.0;
  for (int i = 0; i < k; ++i) v *= a + i;
  return v;
}

EvalResult hyp2f1(double a, double b, double c, double z, double tol) {
  const bool a_terminates = is_nonpos_integer(a);
  const bool b_terminates = is_nonpos_integer(b);
  if (is_nonpos_integer(c)) {
    // exceptional case: defined only when the series terminates before
    // the (c)_k factor vanishes
    const double m = -c;
    const bool ok = (a_terminates && -a <= m) || (b_terminates && -b <= m);
    if (!ok) throw std::invalid_argument("hyp2f1: c is a non-positive integer");
  }

  if (a_terminates || b_terminates) {
    int kmax = 0;
    if (a_terminates && b_terminates) {
      kmax = static_cast<int>(std::min(-a, -b));
    } else {
      kmax = static_cast<int>(a_terminates ? -a : -b);
    }
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < kmax; ++k) {
      term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
      sum += term;
    }
    return {sum, (kmax + 1.0) * kEps * (std::abs(sum) + 1.0)};
  }

  if (z == 1.0) {
    if (!(c - a - b > 0.0)) {
      throw std::domain_error("hyp2f1: series diverges at z = 1 for c <= a + b");
    }
    int s1, s2, s3, s4;
    const double lg = ln_gamma_signed(c, &s1) + ln_gamma_signed(c - a - b, &s2) -
                      ln_gamma_signed(c - a, &s3) - ln_gamma_signed(c - b, &s4);
    const double v = s1 * s2 * s3 * s4 * std::exp(lg);
    return {v, 1e-13 * (std::abs(v) + 1.0)};
  }
  if (std::abs(z) >= 1.0) throw std::domain_error("hyp2f1: requires |z| < 1");
  if (z == 0.0) return {1.0, 0.0};

  const double az = std::abs(z);
  double term = 1.0, sum = 1.0;
  for (long k = 0; k < 100000000L; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    // certified geometric envelope: every later step ratio has magnitude
    // at most |z| (1+|a|/j)(1+|b|/j)/(1-|c|/j) anchored at j = k+1, each
    // factor decreasing in j
    const double j = static_cast<double>(k) + 1.0;
    if (j <= std::abs(c) + 1.0) continue;
    const double rho =
        az * (1.0 + std::abs(a) / j) * (1.0 + std::abs(b) / j) / (1.0 - std::abs(c) / j);
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail < tol) {
        return {sum, tail + (k + 2.0) * kEps * (std::abs(sum) + 1.0)};
      }
    }
  }
  throw std::runtime_error("hyp2f1: series did not certify convergence");
}

EvalResult hyp3f2_unit_params(double c, double z, double tol) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("hyp3f2_unit_params: requires z in [0,1]");
  }
  if (!(c > 0.0)) throw std::invalid_argument("hyp3f2_unit_params: requires c > 0");

  if (z < 1.0) {
    if (z == 0.0) return {1.0, 0.0};
    double term = 1.0, sum = 1.0;
    for (long k = 0; k < 100000000L; ++k) {
      const double q = (k + 1.0) / (k + c);
      term *= q * q * z;
      sum += term;
      const double g = (k + 2.0) / (k + 1.0 + c);  // decreasing bound on later ratios
      const double rho = c >= 1.0 ? z : z * g * g;
      if (rho < 1.0) {
        const double tail = term * rho / (1.0 - rho);
        if (tail < tol) {
          return {sum, tail + (k + 2.0) * kEps * (sum + 1.0)};
        }
      }
    }
    throw std::runtime_error("hyp3f2_unit_params: series did not certify convergence");
  }

  // z = 1: sum ((1)_n/(c)_n)^2 converges like n^{-(2c-2)}; needs 2c-3 > 0.
  if (!(2.0 * c - 3.0 > 0.0)) {
    throw std::domain_error("hyp3f2_unit_params: diverges at z = 1 for 2c - 3 <= 0");
  }
  const double beta = 2.0 * (c - 1.0);
  const long cap = 2200000;
  double term = 1.0, sum = 0.0;
  double lo_tail = 0.0, hi_tail = 0.0;
  long n = 0;
  for (;; ++n) {
    // tail bracket for sum_{m>=n} t_m, from t_m <= t_n ((n+c)/(m+c))^beta
    // and t_m >= t_n (n/m)^beta with integral comparison
    hi_tail = term * (1.0 + (n + c) / (beta - 1.0));
    lo_tail = n == 0 ? term
                     : term * (1.0 + (n + 1.0) / (beta - 1.0) *
                                         std::pow(n / (n + 1.0), beta));
    if (0.5 * (hi_tail - lo_tail) < tol || n >= cap) break;
    sum += term;
    const double q = (n + 1.0) / (n + c);
    term *= q * q;
  }
  const double v = sum + 0.5 * (hi_tail + lo_tail);
  const double err = 0.5 * (hi_tail - lo_tail) + (n + 2.0) * kEps * (v + 1.0);
  return {v, err};
}

EvalResult lerch_phi(double z, double s, double a, double tol) {
  if (!(z >= 0.0 && z < 1.0)) throw std::domain_error("lerch_phi: requires 0 <= z < 1");
  if (!(a > 0.0)) throw std::domain_error("lerch_phi: requires a > 0");
  double term = std::pow(a, -s);
  if (z == 0.0) return {term, kEps * std::abs(term)};
  double sum = term;
  for (long n = 0; n < 100000000L; ++n) {
    term *= z * std::pow((n + a) / (n + 1.0 + a), s);
    sum += term;
    // ratio bound: z for s >= 0, else z (1+1/(n+a))^{-s}, decreasing in n
    const double rho = s >= 0.0 ? z : z * std::pow(1.0 + 1.0 / (n + 1.0 + a), -s);
    if (rho < 1.0) {
      const double tail = term * rho / (1.0 - rho);
      if (tail < tol) {
        return {sum, tail + (n + 2.0) * kEps * (std::abs(sum) + 1.0)};
      }
    }
  }
  throw std::runtime_error("lerch_phi: series did not certify convergence");
}

namespace {

// Li2(e^{-u}) = pi^2/6 + u ln u - u - u^2/4 + sum_k D_k u^{2k+1},
// D_k = B_2k / ((2k)(2k+1)(2k)!); successive term ratios are below
// (u/2pi)^2, so the tail is geometric.  Returns pi^2/6 - Li2(x).
double complement_via_log(double x, double* err) {
  const double u = -std::log(x);
  double v = -u * std::log(u) + u + 0.25 * u * u;
  const double u2 = u * u;
  double upow = u * u2;  // u^{2k+1}
  double fact = 2.0;     // (2k)!
  double term = 0.0;
  for (int k = 1; k <= 10; ++k) {
    term = kBernoulli[k - 1] / ((2.0 * k) * (2.0 * k + 1.0) * fact) * upow;
    v -= term;
    upow *= u2;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  const double rho = (u / (2.0 * kPi)) * (u / (2.0 * kPi));
  *err = std::abs(term) * rho / (1.0 - rho) + 8e-16 * (std::abs(v) + 1.0);
  return v;
}

// Direct power series sum_{k>=1} x^k / k^2 for x <= 1/2.
double dilog_series(double x, double* err) {
  double term = x, sum = x;
  for (long k = 1; k < 1000000L; ++k) {
    const double q = static_cast<double>(k) / (k + 1.0);
    term *= x * q * q;
    sum += term;
    const double tail = term * x / (1.0 - x);
    if (tail < 1e-16 * (sum + 1.0)) {
      *err = tail + (k + 2.0) * kEps * (sum + 1.0);
      return sum;
    }
  }
  *err = kEps;
  return sum;
}

}  // namespace

EvalResult dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("dilog: requires x in [0,1]");
  if (x == 0.0) return {0.0, 0.0};
  if (x == 1.0) return {kPiSqOver6, 2.0 * kEps};
  double err;
  if (x <= 0.5) {
    const double v = dilog_series(x, &err);
    return {v, err};
  }
  const double comp = complement_via_log(x, &err);
  return {kPiSqOver6 - comp, err + kEps * kPiSqOver6};
}

EvalResult dilog_complement(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("dilog_complement: requires x in [0,1]");
  }
  if (x == 0.0) return {kPiSqOver6, 0.0};
  if (x == 1.0) return {0.0, 0.0};
  double err;
  if (x <= 0.5) {
    const double v = dilog_series(x, &err);
    return {kPiSqOver6 - v, err + kEps * kPiSqOver6};
  }
  const double v = complement_via_log(x, &err);
  return {v, err};
}

}  // namespace bohr::specfun
