#include "bohr/radius.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bohr/specfun.hpp"

namespace bohr {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kScanEnd = 1.0 - 1e-6;

// Bisect g on [lo, hi] (g(lo) > 0 > g(hi)) until the bracket is below tol
// and the estimated residual |g'| * width is too.  Trusts computed signs;
// near the root the residual criterion is what matters.
RootResult bisect(const std::function<double(double, double)>& g, double glo, double ghi,
                  double lo, double hi, double tol) {
  RootResult out;
  out.status = RootStatus::found;
  int iters = 0;
  const double floor_width = 8.0 * 2.220446049250313e-16;
  while (true) {
    const double width = hi - lo;
    const double slope = std::abs(ghi - glo) / width;
    const bool tight = width <= tol && width * std::max(slope, 1.0) <= tol;
    if (tight || width <= floor_width || iters >= 200) break;
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid, 0.1 * tol);
    ++iters;
    if (gm > 0.0) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
      ghi = gm;
    }
  }
  out.radius = 0.5 * (lo + hi);
  out.residual = g(out.radius, 0.1 * tol);
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.iterations = iters;
  return out;
}

RootResult solve_scan(const std::function<double(double, double)>& g, double tol) {
  double prev_x = 0.0;
  double prev_g = g(0.0, 0.1 * tol);
  if (!(prev_g > 0.0)) {
    throw std::invalid_argument("general_radius: defining function must be positive at 0");
  }
  for (double x = kScanStep; x < kScanEnd + 0.5 * kScanStep; x += kScanStep) {
    const double xe = std::min(x, kScanEnd);
    const double gx = g(xe, 0.1 * tol);
    if (gx <= 0.0) {
      return bisect(g, prev_g, gx, prev_x, xe, tol);
    }
    prev_x = xe;
    prev_g = gx;
  }
  RootResult out;
  out.status = RootStatus::no_root_below_one;
  out.radius = 1.0;
  out.residual = prev_g;
  out.bracket_lo = prev_x;
  out.bracket_hi = 1.0;
  return out;
}

}  // namespace

double effective_factor(double p) {
  if (!(p > 0.0)) throw std::domain_error("radius: requires p > 0");
  return p <= 2.0 ? 2.0 / p : 1.0;
}

RootResult general_radius(const RadiusProblem& prob) {
  const double factor = effective_factor(prob.p);
  const WeightFamily w = prob.weights;
  const bool cesaro = w.kind() == WeightKind::cesaro_basis;
  const double a1 = w.alpha() + 1.0;

  auto g = [&, factor](double x, double tol) {
    const double phi0 = cesaro
        ? a1 * specfun::lerch_phi(x, 1.0, a1, tol / (a1 * (1.0 + factor))).value
        : 1.0;
    return phi0 - factor * tail_sum(w, x, tol / (1.0 + factor)).value;
  };
  return solve_scan(g, prob.tolerance);
}

double closed_form_radius(ClosedFormKind kind, double p) {
  if (!(p > 0.0 && p <= 2.0)) {
    throw std::domain_error("closed_form_radius: requires p in (0,2]");
  }
  switch (kind) {
    case ClosedFormKind::r1: return p / (2.0 + p);
    case ClosedFormKind::r2: return 1.0 - std::sqrt(2.0 / (2.0 + p));
    case ClosedFormKind::r3: return (p + 1.0 - std::sqrt(2.0 * p + 1.0)) / p;
  }
  throw std::invalid_argument("closed_form_radius: unknown kind");
}

RootResult hypergeometric_radius(double a, double b, double c, double p, double tol) {
  RadiusProblem prob{WeightFamily::hypergeometric(a, b, c), p, tol};
  return general_radius(prob);
}

RootResult cesaro_radius(double alpha, double tol) {
  RadiusProblem prob{WeightFamily::cesaro_basis(alpha), 1.0, tol};
  RootResult res = general_radius(prob);
  if (res.status == RootStatus::found) {
    // report the residual of the quoted series form
    // sum (alpha+1-2n)/(n+alpha+1) x^n = 3(1+alpha) Phi(x,1,alpha+1) - 2/(1-x)
    const double x = res.radius;
    res.residual = 3.0 * (1.0 + alpha) * specfun::lerch_phi(x, 1.0, alpha + 1.0, 0.01 * tol).value -
                   2.0 / (1.0 - x);
  }
  return res;
}

}  // namespace bohr
