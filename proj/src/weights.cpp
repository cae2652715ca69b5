#include "bohr/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bohr/cesaro.hpp"
#include "bohr/specfun.hpp"

namespace bohr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("weights: requires r in [0,1)");
}

// Truncation index with r^n / (1-r) < tol.
std::size_t geometric_order(double r, double tol) {
  if (r == 0.0) return 2;
  const double target = tol * (1.0 - r);
  std::size_t n = static_cast<std::size_t>(std::ceil(std::log(target) / std::log(r))) + 1;
  return std::clamp<std::size_t>(n, 4, 60000000);
}

// gamma_{k+1}/gamma_k for the 2F1 coefficients.
double hyp_ratio(double a, double b, double c, std::size_t k) {
  return (a + k) * (b + k) / ((c + k) * (k + 1.0));
}

}  // namespace

WeightFamily WeightFamily::monomial() {
  return {WeightKind::monomial, 0.0, 0.0, 0.0, 0.0};
}

WeightFamily WeightFamily::shifted_monomial() {
  return {WeightKind::shifted_monomial, 0.0, 0.0, 0.0, 0.0};
}

WeightFamily WeightFamily::power(double alpha) {
  return {WeightKind::power, alpha, 0.0, 0.0, 0.0};
}

WeightFamily WeightFamily::hypergeometric(double a, double b, double c) {
  if (!(a > -1.0 && b > -1.0 && c > -1.0) || c == 0.0) {
    throw std::invalid_argument("hypergeometric weights: requires a,b,c > -1 and c != 0");
  }
  // gamma_0 = 1; for k >= 1 successive ratios (a+k)(b+k)/((c+k)(1+k)) are
  // positive, so the sign is fixed by gamma_1 = ab/c.  The sampled prefix
  // re-checks this numerically.
  double g = 1.0;
  for (std::size_t k = 0; k < 200; ++k) {
    g *= hyp_ratio(a, b, c, k);
    if (g < 0.0) {
      throw std::invalid_argument(
          "hypergeometric weights: coefficients change sign; family not admissible");
    }
  }
  return {WeightKind::hypergeometric, 0.0, a, b, c};
}

WeightFamily WeightFamily::cesaro_basis(double alpha) {
  if (!(alpha > -1.0)) {
    throw std::invalid_argument("cesaro_basis weights: requires alpha > -1");
  }
  return {WeightKind::cesaro_basis, alpha, 0.0, 0.0, 0.0};
}

std::string WeightFamily::name() const {
  switch (kind_) {
    case WeightKind::monomial: return "monomial";
    case WeightKind::shifted_monomial: return "shifted";
    case WeightKind::power: return "power";
    case WeightKind::hypergeometric: return "hypergeom";
    case WeightKind::cesaro_basis: return "cesaro";
  }
  return "?";
}

double weight_at(const WeightFamily& w, std::size_t k, double r, double tol) {
  check_r(r);
  switch (w.kind()) {
    case WeightKind::monomial:
      return std::pow(r, static_cast<double>(k));
    case WeightKind::shifted_monomial:
      return (k + 1.0) * std::pow(r, static_cast<double>(k));
    case WeightKind::power:
      if (k == 0) return 1.0;
      return std::pow(static_cast<double>(k), w.alpha()) * std::pow(r, static_cast<double>(k));
    case WeightKind::hypergeometric: {
      double g = 1.0;
      for (std::size_t j = 0; j < k; ++j) g *= hyp_ratio(w.hyp_a(), w.hyp_b(), w.hyp_c(), j);
      return std::abs(g) * std::pow(r, static_cast<double>(k));
    }
    case WeightKind::cesaro_basis:
      break;
  }
  // cesaro basis: sum_{j>=k} A_{j-k}^alpha / A_j^{alpha+1} r^j, coefficients
  // in [0,1], so the tail past J is below r^J/(1-r)
  if (r == 0.0) return k == 0 ? 1.0 : 0.0;
  const std::size_t j_max = std::max<std::size_t>(geometric_order(r, tol), k + 2);
  CesaroContext ctx(w.alpha(), j_max);
  double sum = 0.0;
  double rj = std::pow(r, static_cast<double>(k));
  for (std::size_t j = k; j < j_max; ++j, rj *= r) {
    sum += ctx.a_coeff(j - k) / ctx.a_coeff_up(j) * rj;
  }
  return sum;
}

std::vector<double> weight_vector(const WeightFamily& w, std::size_t count, double r,
                                  double tol) {
  check_r(r);
  std::vector<double> out(count);
  if (count == 0) return out;
  if (w.kind() != WeightKind::cesaro_basis) {
    for (std::size_t k = 0; k < count; ++k) out[k] = weight_at(w, k, r, tol);
    return out;
  }
  if (r == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const std::size_t j_max = std::max(geometric_order(r, tol), count + 2);
  CesaroContext ctx(w.alpha(), j_max);
  std::vector<double> powers(j_max);
  double rj = 1.0;
  for (std::size_t j = 0; j < j_max; ++j, rj *= r) powers[j] = rj;
  for (std::size_t n = 0; n < count; ++n) {
    double sum = 0.0;
    for (std::size_t j = n; j < j_max; ++j) {
      sum += ctx.a_coeff(j - n) / ctx.a_coeff_up(j) * powers[j];
    }
    out[n] = sum;
  }
  return out;
}

EvalResult tail_sum(const WeightFamily& w, double r, double tol) {
  check_r(r);
  switch (w.kind()) {
    case WeightKind::monomial: {
      const double v = r / (1.0 - r);
      return {v, 4.0 * kEps * (v + 1.0)};
    }
    case WeightKind::shifted_monomial: {
      const double u = 1.0 / (1.0 - r);
      const double v = u * u - 1.0;
      return {v, 4.0 * kEps * (v + 1.0)};
    }
    case WeightKind::power: {
      const double alpha = w.alpha();
      if (alpha == 1.0) {
        const double v = r / ((1.0 - r) * (1.0 - r));
        return {v, 4.0 * kEps * (v + 1.0)};
      }
      if (alpha == 2.0) {
        const double d = 1.0 - r;
        const double v = r * (1.0 + r) / (d * d * d);
        return {v, 4.0 * kEps * (v + 1.0)};
      }
      if (r == 0.0) return {0.0, 0.0};
      double term = r, sum = r;  // k = 1
      for (std::size_t k = 1;; ++k) {
        term *= r * std::pow((k + 1.0) / k, alpha);
        sum += term;
        const double rho = alpha <= 0.0 ? r : r * std::pow(1.0 + 1.0 / (k + 1.0), alpha);
        if (rho < 1.0) {
          const double tail = term * rho / (1.0 - rho);
          if (tail < tol) return {sum, tail + (k + 2.0) * kEps * (sum + 1.0)};
        }
        if (k > 100000000UL) throw std::runtime_error("tail_sum: power series stalled");
      }
    }
    case WeightKind::hypergeometric: {
      EvalResult f = specfun::hyp2f1(w.hyp_a(), w.hyp_b(), w.hyp_c(), r, tol);
      return {std::abs(f.value - 1.0), f.error_bound + 2.0 * kEps};
    }
    case WeightKind::cesaro_basis:
      break;
  }
  // sum phi_n = 1/(1-r) exactly, and phi_0 = (alpha+1) Phi(r,1,alpha+1)
  const double a1 = w.alpha() + 1.0;
  EvalResult phi0 = specfun::lerch_phi(r, 1.0, a1, tol / a1);
  const double v = 1.0 / (1.0 - r) - a1 * phi0.value;
  return {v, a1 * phi0.error_bound + 4.0 * kEps * (std::abs(v) + 1.0)};
}

double cesaro_full_sum(double alpha, double r) {
  if (!(alpha > -1.0)) throw std::domain_error("cesaro_full_sum: requires alpha > -1");
  check_r(r);
  return 1.0 / (1.0 - r);
}

}  // namespace bohr
