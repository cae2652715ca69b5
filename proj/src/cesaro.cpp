#include "bohr/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bohr/kernels.hpp"
#include "bohr/specfun.hpp"

namespace bohr {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

CesaroContext::CesaroContext(double alpha, std::size_t order) : alpha_(alpha) {
  if (!(alpha > -1.0)) throw std::domain_error("CesaroContext: requires alpha > -1");
  a_.resize(order + 1);
  a_up_.resize(order + 1);
  a_[0] = 1.0;
  a_up_[0] = 1.0;
  for (std::size_t k = 0; k + 1 <= order; ++k) {
    a_[k + 1] = a_[k] * (alpha + k + 1.0) / (k + 1.0);
    a_up_[k + 1] = a_up_[k] * (alpha + k + 2.0) / (k + 1.0);
  }
}

double a_coeff(double alpha, std::size_t k) {
  double v = 1.0;
  for (std::size_t j = 0; j < k; ++j) v *= (alpha + j + 1.0) / (j + 1.0);
  return v;
}

TruncatedSeries apply_operator(const CesaroContext& ctx, const TruncatedSeries& f) {
  const std::size_t n = f.coefficients.size();
  if (n == 0) return f;

  const CesaroContext* use = &ctx;
  CesaroContext local(ctx.alpha(), 0);
  if (ctx.order() + 1 < n) {
    local = CesaroContext(ctx.alpha(), n - 1);
    use = &local;
  }

  std::vector<double> out(n);
  kernels::convolve_prefix(use->a().subspan(0, n), f.coefficients, out);
  for (std::size_t k = 0; k < n; ++k) out[k] /= use->a_coeff_up(k);
  // output coefficients are convex averages of the inputs, so the input
  // tail bound still dominates the discarded part
  return {std::move(out), f.tail_bound};
}

EvalResult bohr_sum(const CesaroContext& ctx, std::span<const double> moduli,
                    double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("bohr_sum: requires r in [0,1)");
  double maxm = 0.0;
  for (double m : moduli) {
    if (m < 0.0) throw std::invalid_argument("bohr_sum: moduli must be nonnegative");
    maxm = std::max(maxm, m);
  }
  if (maxm == 0.0) return {0.0, 0.0};
  if (r == 0.0) return {moduli[0], kEps * moduli[0]};

  // inner averages are bounded by max m (the A-weights sum to one), so the
  // n-tail is below maxm r^N / (1-r)
  const double target = 0.5 * tol * (1.0 - r) / maxm;
  std::size_t n_trunc =
      static_cast<std::size_t>(std::ceil(std::log(target) / std::log(r))) + 1;
  n_trunc = std::clamp<std::size_t>(n_trunc, 4, 4000000);

  const CesaroContext* use = &ctx;
  CesaroContext local(ctx.alpha(), 0);
  if (ctx.order() + 1 < n_trunc) {
    local = CesaroContext(ctx.alpha(), n_trunc - 1);
    use = &local;
  }

  std::vector<double> padded(moduli.begin(), moduli.end());
  padded.resize(std::max<std::size_t>(padded.size(), n_trunc), 0.0);
  std::vector<double> conv(n_trunc);
  kernels::convolve_prefix(padded, use->a().subspan(0, n_trunc), conv);
  for (std::size_t k = 0; k < n_trunc; ++k) conv[k] /= use->a_coeff_up(k);

  const double value = kernels::power_sum(conv, r);
  const double tail = maxm * std::pow(r, static_cast<double>(n_trunc)) / (1.0 - r);
  return {value, tail + n_trunc * kEps * (std::abs(value) + 1.0)};
}

EvalResult lerch_majorant(const CesaroContext& ctx, double r, double tol) {
  const double a1 = ctx.alpha() + 1.0;
  EvalResult phi = specfun::lerch_phi(r, 1.0, a1, tol / a1);
  return {a1 * phi.value, a1 * phi.error_bound};
}

EvalResult s_alpha_majorant(double alpha, double r, double tol) {
  if (!(alpha > -1.0)) throw std::domain_error("s_alpha_majorant: requires alpha > -1");
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("s_alpha_majorant: requires r in [0,1)");
  }
  const double r2 = r * r;

  if (alpha >= 0.0) {
    // (alpha+1)/(1-r^2) sqrt(psi'(1+alpha) - r^2 Phi(r^2, 2, 1+alpha))
    EvalResult tg = specfun::trigamma(1.0 + alpha);
    EvalResult phi = r2 > 0.0 ? specfun::lerch_phi(r2, 2.0, 1.0 + alpha, tol)
                              : EvalResult{0.0, 0.0};
    const double g = tg.value - r2 * phi.value;
    const double ge = tg.error_bound + r2 * phi.error_bound;
    const double root = std::sqrt(std::max(g, 1e-300));
    const double pre = (alpha + 1.0) / (1.0 - r2);
    return {pre * root, pre * (0.5 * ge / root) + 4.0 * kEps * pre * root};
  }

  if (alpha == -0.5) {
    EvalResult f = specfun::hyp3f2_unit_params(1.5, r2, tol);
    const double root = std::sqrt(f.value);
    const double pre = 1.0 / (1.0 - r);
    return {pre * root, pre * (0.5 * f.error_bound / root) + 4.0 * kEps * pre * root};
  }

  if (alpha > -0.5) {
    const double c = 2.0 + alpha;
    EvalResult f1 = specfun::hyp3f2_unit_params(c, 1.0, tol);
    EvalResult fr = specfun::hyp3f2_unit_params(c, r2, tol);
    const double g = f1.value - r2 * fr.value;
    const double ge = f1.error_bound + r2 * fr.error_bound;
    const double root = std::sqrt(std::max(g, 1e-300));
    const double pre = 1.0 / (1.0 - r2);
    return {pre * root, pre * (0.5 * ge / root) + 4.0 * kEps * pre * root};
  }

  // -1 < alpha < -1/2:
  // (Gamma(a+2)/Gamma(-a)) sqrt(Gamma(-1-2a) sum (n+1)^{1-2a}/(n+a+1)^2 r^{2n})
  const double expo = 1.0 - 2.0 * alpha;
  double sum, serr;
  if (r2 == 0.0) {
    sum = 1.0 / ((alpha + 1.0) * (alpha + 1.0));
    serr = kEps * sum;
  } else {
    double term = 1.0 / ((alpha + 1.0) * (alpha + 1.0));
    sum = term;
    serr = 0.0;
    for (long n = 0;; ++n) {
      const double grow = std::pow((n + 2.0) / (n + 1.0), expo);
      const double shrink = (n + alpha + 1.0) / (n + alpha + 2.0);
      term *= r2 * grow * shrink * shrink;
      sum += term;
      const double rho = r2 * std::pow(1.0 + 1.0 / (n + 2.0), expo);
      if (rho < 1.0) {
        const double tail = term * rho / (1.0 - rho);
        if (tail < tol) {
          serr = tail + (n + 2.0) * kEps * sum;
          break;
        }
      }
      if (n > 100000000L) {
        throw std::runtime_error("s_alpha_majorant: series did not certify");
      }
    }
  }
  const double lg = specfun::ln_gamma(alpha + 2.0).value -
                    specfun::ln_gamma(-alpha).value;
  const double gam = std::exp(specfun::ln_gamma(-1.0 - 2.0 * alpha).value);
  const double root = std::sqrt(gam * sum);
  const double pre = std::exp(lg);
  const double v = pre * root;
  const double err = pre * (0.5 * gam * serr / root) + 1e-12 * (std::abs(v) + 1.0);
  return {v, err};
}

bool majorant_dominates(double alpha, double r, std::span<const double> moduli,
                        double tol) {
  CesaroContext ctx(alpha, 64);
  EvalResult bs = bohr_sum(ctx, moduli, r, tol);
  EvalResult sa = s_alpha_majorant(alpha, r, tol);
  return bs.value <= sa.value + bs.error_bound + sa.error_bound;
}

}  // namespace bohr
