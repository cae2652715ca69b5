#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bohr/weights.hpp"

namespace bohr {

/// Coefficient moduli of the Moebius self-map (z-a)/(1-az):
/// |a_0| = a, |a_k| = (1-a^2) a^{k-1} for k >= 1.
struct MobiusWitness {
  double a = 0.0;
  std::vector<double> moduli;
};

MobiusWitness mobius_moduli(double a, std::size_t order);

/// Coefficient moduli of a random finite Blaschke product, reproducible
/// from the seed.  Every sample satisfies the Schwarz-Pick bound
/// |a_k| <= 1 - |a_0|^2 and sum |a_k|^2 <= 1 (up to truncation).
struct SchurSample {
  std::vector<double> moduli;
  std::uint64_t seed = 0;
  std::string descriptor;
};

SchurSample sample_schur(std::uint64_t seed, std::size_t order);

/// B_f(phi, p, r) = |a_0|^p phi_0(r) + sum_{k>=1} |a_k| phi_k(r).
/// The moduli list must be long enough that the certified tail envelope
/// (Schwarz-Pick bound times the family tail) is below tol.
double bohr_functional(const WeightFamily& w, double p, std::span<const double> moduli,
                       double r, double tol = 1e-12);

/// Same with a precomputed weight vector phi_0..phi_{n-1} at r.
double bohr_functional_with_weights(double p, std::span<const double> moduli,
                                    std::span<const double> weights);

struct ViolationWitness {
  double r = 0.0;
  double a = 0.0;
  double bohr_value = 0.0;
  double phi0 = 0.0;
};

struct CertificationReport {
  std::string family;
  double p = 0.0;
  double radius = 0.0;
  int below_points = 0;
  std::size_t schur_samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> deltas;
  int max_scan_exponent = 0;
  double max_below_slack = 0.0;  // max over the grid of B_f - phi_0 (<= 0 expected)
  std::optional<ViolationWitness> violation;
  std::string status;  // "violation-found" or "inconclusive"
};

struct CertifyOptions {
  int below_points = 12;
  std::vector<double> deltas{1e-3, 1e-2};
  int max_scan_exponent = 20;  // witness scan a = 1 - 2^{-j}, j = 1..max
  std::size_t schur_samples = 32;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

/// Checks B_f <= phi_0(r) below R over Moebius and Schur witnesses, then
/// searches just above R for a witness with B_f > phi_0(r).  Failure to
/// find one is reported as "inconclusive", never as safety.
CertificationReport certify_radius(const WeightFamily& w, double p, double radius,
                                   const CertifyOptions& opt = {});

/// JSON text of the report (stable field order, round-trip exact numbers).
std::string report_to_json(const CertificationReport& rep, int indent = 2);

}  // namespace bohr
