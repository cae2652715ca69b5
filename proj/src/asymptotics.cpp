#include "bohr/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bohr/specfun.hpp"

namespace bohr::asymptotics {

namespace {

constexpr double kPiSqOver6 = 1.6449340668482264365;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_open_unit(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error(std::string(who) + ": requires r in (0,1)");
  }
}

// Closed form of sum t^k phi_k(r) written in the complements u = 1-t,
// w = 1-r, which is where the callers live.
double bb_from_complements(double u, double w, double r) {
  const double v = u + (1.0 - u) * w;              // 1 - rt
  const double d = std::log1p(u * r / w);          // log((1-rt)/(1-r))
  const double num = -r * u + v * d;
  return 2.0 * num / (r * r * u * u);
}

// pi^2/6 - Li2(r^2)/r^2 without cancellation; onemx = 1 - r^2.
double li2_gap(double r, double onemx) {
  const double x = r * r;
  const double comp = specfun::dilog_complement(x).value;
  return (comp - kPiSqOver6 * onemx) / x;
}

}  // namespace

double solve_q() {
  static const double q = [] {
    auto h = [](double x) { return 3.0 * x - (3.0 + x) * std::log1p(x); };
    double lo = 1.0, hi = 100.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
      const double mid = 0.5 * (lo + hi);
      (h(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return q;
}

double lower_constant() {
  const double q = solve_q();
  return 4.0 * std::sqrt(2.0 * q) / (3.0 + q);
}

double first_term_constant() {
  return 2.0 * std::sqrt(2.0) * (std::log(4.0) - 1.0);
}

EvalResult bb_closed_sum(double t, double r) {
  if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("bb_closed_sum: requires t in [0,1)");
  check_open_unit(r, "bb_closed_sum");
  const double u = 1.0 - t;
  const double w = 1.0 - r;
  const double v = bb_from_complements(u, w, r);
  // the two summands nearly cancel once u << w; the 2w/(u r) factor tracks
  // the lost digits
  const double cancel = 2.0 * w / (u * r);
  return {v, (4.0 + cancel) * kEps * (std::abs(v) + 1.0)};
}

EvalResult phi_n_alpha1(std::size_t n, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("phi_n_alpha1: requires r in [0,1)");
  if (r == 0.0) return {n == 0 ? 1.0 : 0.0, 0.0};
  // coefficients (k-n+1)/((k+2)(k+1)) lie in (0,1], so the tail past J is
  // below 2 r^J/(1-r)
  const double target = 0.5 * tol * (1.0 - r) / 2.0;
  std::size_t j_max = static_cast<std::size_t>(std::ceil(std::log(target) / std::log(r))) + 1;
  if (j_max < n + 2) j_max = n + 2;
  double sum = 0.0;
  double rk = std::pow(r, static_cast<double>(n));
  for (std::size_t k = n; k < j_max; ++k, rk *= r) {
    sum += (k - n + 1.0) / ((k + 2.0) * (k + 1.0)) * rk;
  }
  const double tail = 2.0 * std::pow(r, static_cast<double>(j_max)) / (1.0 - r);
  const double v = 2.0 * sum;
  return {v, tail + j_max * kEps * (v + 1.0)};
}

double upper_envelope(double r) {
  check_open_unit(r, "upper_envelope");
  const double log_gap = -(std::log1p(-r) + std::log1p(r));  // log(1/(1-r^2))
  return std::sqrt(2.0) * std::sqrt(log_gap / (1.0 - r));
}

ClassicalEnvelopes classical_envelopes(double r) {
  check_open_unit(r, "classical_envelopes");
  ClassicalEnvelopes env;
  const double one_m_r2 = (1.0 - r) * (1.0 + r);
  env.bombieri = (3.0 - std::sqrt(8.0 * one_m_r2)) / r;
  env.bombieri_in_range = r >= 1.0 / 3.0 && r <= 1.0 / std::sqrt(2.0) + 1e-15;
  env.bombieri_bourgain = 1.0 / std::sqrt(one_m_r2);
  env.bb_in_range = r > 1.0 / std::sqrt(2.0);
  return env;
}

EvalResult lower_bound_profile(double r) {
  check_open_unit(r, "lower_bound_profile");
  const double q = solve_q();
  const double w = 1.0 - r;
  const double log_r = std::log1p(-w);
  const double u = -std::expm1(q * log_r);  // 1 - r^q, full relative precision
  const double sq = std::sqrt(u * (2.0 - u));  // sqrt(1 - t^2)
  const double main = sq * bb_from_complements(u, w, r);

  const double one_m_r2 = w * (2.0 - w);
  const double gap = li2_gap(r, one_m_r2);
  const double corr = sq * std::sqrt(-std::log(u)) * (2.0 / one_m_r2) *
                      std::sqrt(std::max(gap, 0.0));
  const double v = main - corr;
  return {v, 3e-9 * (std::abs(main) + std::abs(corr)) + 1e-13};
}

ProfileSample profile_sample(double r) {
  check_open_unit(r, "profile_sample");
  const double q = solve_q();
  const double w = 1.0 - r;
  const double scale = std::sqrt(w);
  const double log_r = std::log1p(-w);
  const double u = -std::expm1(q * log_r);
  const double sq = std::sqrt(u * (2.0 - u));
  const double one_m_r2 = w * (2.0 - w);

  ProfileSample s;
  s.r = r;
  s.main_scaled = scale * sq * bb_from_complements(u, w, r);
  s.correction_scaled = scale * sq * std::sqrt(-std::log(u)) * (2.0 / one_m_r2) *
                        std::sqrt(std::max(li2_gap(r, one_m_r2), 0.0));
  s.profile_scaled = s.main_scaled - s.correction_scaled;
  return s;
}

AsymptoticReport asymptotic_report(std::span<const double> rs) {
  AsymptoticReport rep;
  rep.q = solve_q();
  rep.lower_constant = lower_constant();
  rep.secondary_constant = first_term_constant();
  rep.samples.reserve(rs.size());
  for (double r : rs) rep.samples.push_back(profile_sample(r));
  return rep;
}

}  // namespace bohr::asymptotics
