#include "bohr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "bohr/kernels.hpp"

namespace bohr {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Weight vector phi_0..phi_{len-1} plus the certified envelope for the
// uncovered tail sum_{k>=len} phi_k(r) (family tail sum minus the covered
// prefix; the identity is exact, so only rounding and the tail_sum bound
// enter).
std::vector<double> weights_with_envelope(const WeightFamily& w, double r,
                                          std::size_t len, double tol,
                                          double* envelope_out) {
  std::vector<double> weights = weight_vector(w, len, r, tol / (8.0 * len));
  const EvalResult full = tail_sum(w, r, 0.125 * tol);
  double covered = 0.0;
  for (std::size_t k = 1; k < weights.size(); ++k) covered += weights[k];
  *envelope_out = std::max(0.0, full.value - covered) + full.error_bound +
                  len * 1e-16 * (covered + 1.0);
  return weights;
}

}  // namespace

MobiusWitness mobius_moduli(double a, std::size_t order) {
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("mobius_moduli: requires a in [0,1)");
  MobiusWitness wit;
  wit.a = a;
  wit.moduli.resize(order + 1);
  wit.moduli[0] = a;
  const double head = 1.0 - a * a;
  double pow_a = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    wit.moduli[k] = head * pow_a;
    pow_a *= a;
  }
  return wit;
}

SchurSample sample_schur(std::uint64_t seed, std::size_t order) {
  std::mt19937_64 rng(seed);
  const int degree = static_cast<int>(rng() % 5);

  SchurSample sample;
  sample.seed = seed;
  sample.descriptor = "blaschke-deg" + std::to_string(degree);
  sample.moduli.assign(order + 1, 0.0);

  if (degree == 0) {
    sample.moduli[0] = 1.0;  // unimodular constant
    return sample;
  }

  // zeros a_j: area-uniform on the disk of radius 0.9 (keeps the
  // coefficient decay certifiable at this truncation order)
  std::vector<std::complex<double>> zeros(degree);
  for (auto& z : zeros) {
    const double rad = 0.9 * std::sqrt(uniform01(rng));
    const double ang = 2.0 * 3.14159265358979323846 * uniform01(rng);
    z = std::polar(rad, ang);
  }

  // numerator prod (z - a_j), denominator prod (1 - conj(a_j) z)
  std::vector<std::complex<double>> num{1.0}, den{1.0};
  for (const auto& a : zeros) {
    std::vector<std::complex<double>> n2(num.size() + 1), d2(den.size() + 1);
    for (std::size_t i = 0; i < num.size(); ++i) {
      n2[i] += num[i] * (-a);
      n2[i + 1] += num[i];
    }
    for (std::size_t i = 0; i < den.size(); ++i) {
      d2[i] += den[i];
      d2[i + 1] += den[i] * (-std::conj(a));
    }
    num = std::move(n2);
    den = std::move(d2);
  }

  // Taylor coefficients by long division: c_n = p_n - sum q_m c_{n-m}
  std::vector<std::complex<double>> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::complex<double> acc = n < num.size() ? num[n] : 0.0;
    const std::size_t m_max = std::min<std::size_t>(n, den.size() - 1);
    for (std::size_t m = 1; m <= m_max; ++m) acc -= den[m] * c[n - m];
    c[n] = acc;
    sample.moduli[n] = std::abs(acc);
  }
  return sample;
}

double bohr_functional_with_weights(double p, std::span<const double> moduli,
                                    std::span<const double> weights) {
  if (moduli.empty() || weights.empty()) return 0.0;
  const std::size_t n = std::min(moduli.size(), weights.size());
  double v = std::pow(moduli[0], p) * weights[0];
  v += kernels::dot(moduli.subspan(1, n - 1), weights.subspan(1, n - 1));
  return v;
}

double bohr_functional(const WeightFamily& w, double p, std::span<const double> moduli,
                       double r, double tol) {
  if (moduli.empty()) throw std::invalid_argument("bohr_functional: empty moduli");
  for (double m : moduli) {
    if (m < 0.0) throw std::invalid_argument("bohr_functional: moduli must be nonnegative");
  }
  double env = 0.0;
  std::vector<double> weights = weights_with_envelope(w, r, moduli.size(), tol, &env);
  // Schwarz-Pick keeps every modulus past the prefix below 1 - |a_0|^2
  const double sp = std::clamp(1.0 - moduli[0] * moduli[0], 0.0, 1.0);
  if (sp * env > tol) {
    throw std::length_error("bohr_functional: moduli prefix too short for certified "
                            "truncation at this r");
  }
  return bohr_functional_with_weights(p, moduli, weights);
}

CertificationReport certify_radius(const WeightFamily& w, double p, double radius,
                                   const CertifyOptions& opt) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw std::domain_error("certify_radius: requires radius in (0,1)");
  }
  CertificationReport rep;
  rep.family = w.name();
  rep.p = p;
  rep.radius = radius;
  rep.below_points = opt.below_points;
  rep.schur_samples = opt.schur_samples;
  rep.seed = opt.seed;
  rep.deltas = opt.deltas;
  rep.max_scan_exponent = opt.max_scan_exponent;
  rep.max_below_slack = -1.0;

  const double mobius_as[] = {0.0,  0.3,  0.5,   0.7,
                              0.9,  0.99, 0.999, 1.0 - 0x1.0p-20};

  // witness moduli are shared across grid points; size for the largest r,
  // with headroom for polynomially growing weight coefficients
  double r_top = radius;
  if (!opt.deltas.empty()) {
    r_top += *std::max_element(opt.deltas.begin(), opt.deltas.end());
  }
  r_top = std::min(r_top, 1.0 - 1e-9);
  std::size_t order = 256;
  {
    const double need = std::log(0.01 * opt.tol * (1.0 - r_top)) / std::log(r_top);
    order = std::max<std::size_t>(order, static_cast<std::size_t>(need) + 64);
  }

  std::vector<std::vector<double>> witnesses;
  for (double a : mobius_as) witnesses.push_back(mobius_moduli(a, order).moduli);
  for (std::size_t s = 0; s < opt.schur_samples; ++s) {
    witnesses.push_back(sample_schur(opt.seed + s, order).moduli);
  }

  // (i) below the radius: B_f <= phi_0 on the sampled grid
  for (int i = 1; i <= opt.below_points; ++i) {
    const double r = radius * i / opt.below_points;
    double env = 0.0;
    std::vector<double> weights =
        weights_with_envelope(w, r, order + 1, 0.1 * opt.tol, &env);
    for (const auto& m : witnesses) {
      const double b = bohr_functional_with_weights(p, m, weights) + env;
      rep.max_below_slack = std::max(rep.max_below_slack, b - weights[0]);
    }
  }

  // (ii) just above: scan a -> 1 for a strict violation
  for (double delta : opt.deltas) {
    const double r = radius + delta;
    if (!(r < 1.0 - 1e-9)) continue;
    double env = 0.0;
    std::vector<double> weights =
        weights_with_envelope(w, r, order + 1, 0.1 * opt.tol, &env);
    for (int j = 1; j <= opt.max_scan_exponent; ++j) {
      const double a = 1.0 - std::ldexp(1.0, -j);
      const auto wit = mobius_moduli(a, order);
      const double b = bohr_functional_with_weights(p, wit.moduli, weights);
      // strict: the computed value must clear phi_0 plus every bound
      if (b - (1.0 - a * a) * env > weights[0] + opt.tol) {
        rep.violation = ViolationWitness{r, a, b, weights[0]};
        break;
      }
    }
    if (rep.violation) break;
  }
  rep.status = rep.violation ? "violation-found" : "inconclusive";
  return rep;
}

std::string report_to_json(const CertificationReport& rep, int indent) {
  nlohmann::ordered_json j;
  j["family"] = rep.family;
  j["p"] = rep.p;
  j["radius"] = rep.radius;
  j["grid"]["below_points"] = rep.below_points;
  j["grid"]["deltas"] = rep.deltas;
  j["grid"]["max_scan_exponent"] = rep.max_scan_exponent;
  j["schur_samples"] = rep.schur_samples;
  j["seed"] = rep.seed;
  j["max_below_slack"] = rep.max_below_slack;
  if (rep.violation) {
    j["violation"]["r"] = rep.violation->r;
    j["violation"]["a"] = rep.violation->a;
    j["violation"]["bohr_value"] = rep.violation->bohr_value;
    j["violation"]["phi0"] = rep.violation->phi0;
  } else {
    j["violation"] = nullptr;
  }
  j["status"] = rep.status;
  return j.dump(indent);
}

}  // namespace bohr
