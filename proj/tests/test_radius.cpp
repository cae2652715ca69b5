#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bohr/radius.hpp"
#include "bohr/specfun.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {
// 30-digit references for the series-defined radii
constexpr double kCesaroR0 = 0.533589233919994846750659957461;
constexpr double kCesaroR1 = 0.645007451334584398233937420924;
constexpr double kCesaroRm05 = 0.449138125715953166177729786308;
constexpr double kPower2R = 0.206783494527815587953969792245;
}  // namespace

TEST_CASE("classical Bohr radius and the other closed-form families") {
  RootResult mono = general_radius({WeightFamily::monomial(), 1.0, 1e-12});
  REQUIRE(mono.status == RootStatus::found);
  CHECK(std::abs(mono.radius - 1.0 / 3.0) < 1e-10);

  RootResult shift = general_radius({WeightFamily::shifted_monomial(), 1.0, 1e-12});
  CHECK(std::abs(shift.radius - (1.0 - std::sqrt(2.0 / 3.0))) < 1e-10);

  RootResult pw2 = general_radius({WeightFamily::power(2.0), 1.0, 1e-12});
  CHECK(std::abs(pw2.radius - kPower2R) < 1e-10);
  // independent oracle: bisection on the cubic p(1-r)^3 - 2r(1+r)
  const double cubic_root =
      oracle::bisect([](double r) { return std::pow(1.0 - r, 3) - 2.0 * r * (1.0 + r); },
                     0.0, 0.9);
  CHECK(std::abs(pw2.radius - cubic_root) < 1e-10);
}

TEST_CASE("closed_form_radius formulas") {
  CHECK(closed_form_radius(ClosedFormKind::r1, 2.0) == doctest::Approx(0.5));
  CHECK(closed_form_radius(ClosedFormKind::r3, 1.0) ==
        doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
  CHECK(closed_form_radius(ClosedFormKind::r2, 2.0) ==
        doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(closed_form_radius(ClosedFormKind::r1, 2.5), std::domain_error);
  CHECK_THROWS_AS(closed_form_radius(ClosedFormKind::r1, 0.0), std::domain_error);
}

TEST_CASE("general solver agrees with each closed form over p") {
  for (double p : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    RootResult r1 = general_radius({WeightFamily::monomial(), p, 1e-12});
    CHECK(std::abs(r1.radius - closed_form_radius(ClosedFormKind::r1, p)) < 1e-10);
    RootResult r2 = general_radius({WeightFamily::shifted_monomial(), p, 1e-12});
    CHECK(std::abs(r2.radius - closed_form_radius(ClosedFormKind::r2, p)) < 1e-10);
    RootResult r3 = general_radius({WeightFamily::power(1.0), p, 1e-12});
    CHECK(std::abs(r3.radius - closed_form_radius(ClosedFormKind::r3, p)) < 1e-10);
  }
}

TEST_CASE("hypergeometric radius: closed form 1 - (2/(2+p))^{1/a}") {
  RootResult classical = hypergeometric_radius(1.0, 1.0, 1.0, 1.0);
  CHECK(std::abs(classical.radius - 1.0 / 3.0) < 1e-10);

  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    for (double p : {1.0, 2.0}) {
      RootResult res = hypergeometric_radius(a, 1.0, 1.0, p);
      const double expect = 1.0 - std::pow(2.0 / (2.0 + p), 1.0 / a);
      CHECK(std::abs(res.radius - expect) < 1e-10);
    }
  }
  // a = 1/2, p = 1: 1 - (2/3)^2 = 5/9
  RootResult half = hypergeometric_radius(0.5, 1.0, 1.0, 1.0);
  CHECK(std::abs(half.radius - 5.0 / 9.0) < 1e-10);
}

TEST_CASE("cesaro radius") {
  RootResult r0 = cesaro_radius(0.0);
  REQUIRE(r0.status == RootStatus::found);
  // the published value is the truncation "0.5335...": first four decimals
  CHECK(std::floor(r0.radius * 1e4) == 5335.0);
  CHECK(std::abs(r0.radius - kCesaroR0) < 1e-10);
  CHECK(std::abs(r0.residual) < 1e-10);

  // residual of the quoted series sum (alpha+1-2n)/(n+alpha+1) x^n via a
  // direct certified summation
  auto series_residual = [](double alpha, double x) {
    double s = 0.0, xn = 1.0;
    for (int n = 0; n < 4000; ++n, xn *= x) s += (alpha + 1.0 - 2.0 * n) / (n + alpha + 1.0) * xn;
    return s;
  };
  CHECK(std::abs(series_residual(0.0, r0.radius)) < 1e-10);

  RootResult r1 = cesaro_radius(1.0);
  CHECK(std::abs(r1.radius - kCesaroR1) < 1e-10);
  CHECK(std::abs(series_residual(1.0, r1.radius)) < 1e-10);

  RootResult rm = cesaro_radius(-0.5);
  CHECK(std::abs(rm.radius - kCesaroRm05) < 1e-10);

  // observed behaviour only: R(alpha) grows along this grid
  double prev = 0.0;
  for (double alpha : {0.0, 1.0, 2.0, 5.0, 10.0}) {
    const double r = cesaro_radius(alpha).radius;
    CHECK(r > prev);
    prev = r;
  }

  // near the alpha -> -1 edge the coefficients stay finite and the solver
  // still brackets a root
  RootResult edge = cesaro_radius(-0.99);
  CHECK(edge.status == RootStatus::found);
  CHECK(std::abs(edge.residual) < 1e-9);
  CHECK(edge.radius > 0.0);
  CHECK(edge.radius < 1.0);
}

TEST_CASE("p > 2 uses the factor-1 variant") {
  RootResult res = general_radius({WeightFamily::monomial(), 3.0, 1e-12});
  CHECK(std::abs(res.radius - 0.5) < 1e-10);  // 1 = r/(1-r)
  CHECK(effective_factor(3.0) == doctest::Approx(1.0));
  CHECK(effective_factor(1.0) == doctest::Approx(2.0));
}

TEST_CASE("bracketing invariants and the sign structure around R") {
  RootResult res = general_radius({WeightFamily::monomial(), 1.0, 1e-12});
  CHECK(res.bracket_hi - res.bracket_lo <= 1e-12);
  CHECK(res.bracket_lo <= res.radius);
  CHECK(res.radius <= res.bracket_hi);
  CHECK(res.iterations > 0);

  auto g = [](double x) { return 1.0 - 2.0 * x / (1.0 - x); };
  CHECK(g(0.99 * res.radius) > 0.0);
  CHECK(g(res.radius + 1e-6) < 0.0);
}

TEST_CASE("no radius below one is a reported outcome, not an error") {
  RootResult res = hypergeometric_radius(0.0, 1.0, 1.0, 1.0);  // F == 1
  CHECK(res.status == RootStatus::no_root_below_one);
  CHECK(res.radius == 1.0);
}

TEST_CASE("auxiliary function A(x) = (1-x^p)/(1-x^2)") {
  for (double p : {0.5, 1.0, 1.5, 2.0}) {
    for (double x = 0.0; x < 0.999; x += 0.003) {
      const double a = x == 0.0 ? 1.0 : (1.0 - std::pow(x, p)) / (1.0 - x * x);
      CHECK(a >= 0.5 * p - 1e-12);
    }
  }
  for (double p : {3.0, 4.0}) {
    for (double x = 0.0; x < 0.999; x += 0.003) {
      const double a = x == 0.0 ? 1.0 : (1.0 - std::pow(x, p)) / (1.0 - x * x);
      CHECK(a >= 1.0 - 1e-12);
      CHECK(a < 0.5 * p);
    }
  }
}

TEST_CASE("invalid problems") {
  CHECK_THROWS_AS(general_radius({WeightFamily::monomial(), 0.0, 1e-12}),
                  std::domain_error);
  CHECK_THROWS_AS(cesaro_radius(-1.0), std::invalid_argument);
}
