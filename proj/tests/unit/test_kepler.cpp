#include <gtest/gtest.h>

#include <cmath>

#include "hydrorad/constants.hpp"
#include "hydrorad/errors.hpp"
#include "hydrorad/kepler/fourier.hpp"
#include "hydrorad/kepler/orbit.hpp"
#include "hydrorad/level.hpp"
#include "support/oracles.hpp"

using namespace hydrorad;
using namespace hydrorad::kepler;

TEST(Orbit, EccentricityAndScales) {
  EXPECT_NEAR(orbit_eccentricity(1, 0), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(orbit_eccentricity(30, 15), std::sqrt(1.0 - std::pow(15.5 / 30.0, 2)), 1e-15);
  EXPECT_NEAR(orbit_eccentricity(30, 15), 0.85618, 1e-5);

  const auto& k = codata2018();
  const auto g1 = orbit_from_level(Level(1, 1, 0), k);
  EXPECT_NEAR(g1.semimajor_axis / k.bohr_radius, 1.0, 1e-14);
  const auto g3 = orbit_from_level(Level(1, 3, 2), k);
  EXPECT_NEAR(g3.angular_frequency, k.alpha * k.alpha * k.electron_energy / (27 * k.hbar), 1e3);
  EXPECT_NEAR(g3.angular_frequency / 1.5305e15, 1.0, 1e-3);
  // Z scaling: a ~ n^2 / Z, Omega ~ Z^2 / n^3
  const auto gz = orbit_from_level(Level(3, 3, 2), k);
  EXPECT_NEAR(gz.semimajor_axis * 3 / g3.semimajor_axis, 1.0, 1e-14);
  EXPECT_NEAR(gz.angular_frequency / (9 * g3.angular_frequency), 1.0, 1e-14);
  for (int n = 1; n <= 40; ++n)
    for (int l = 0; l < n; ++l) {
      const double e = orbit_eccentricity(n, l);
      EXPECT_NEAR(e * e + std::pow((l + 0.5) / n, 2), 1.0, 1e-14);
    }
}

TEST(Orbit, KeplerEquationSolution) {
  for (double ecc : {0.0, 0.2, 0.6, 0.95, 0.999}) {
    for (double M = -10.0; M <= 10.0; M += 0.37) {
      const double E = eccentric_anomaly(M, ecc);
      const double residual = std::remainder(E - ecc * std::sin(E) - M, 2 * oracle::kPi);
      EXPECT_NEAR(residual, 0.0, 1e-13) << ecc << " " << M;
    }
  }
  EXPECT_THROW(eccentric_anomaly(1.0, 1.0), DomainError);
  EXPECT_THROW(eccentric_anomaly(1.0, -0.1), DomainError);
}

TEST(Orbit, KeplerPositionLandmarks) {
  const auto p0 = kepler_position(0.0, 2.0, 1.0, 0.0);
  EXPECT_NEAR(p0.x, 2.0, 1e-15);
  EXPECT_NEAR(p0.y, 0.0, 1e-15);
  EXPECT_NEAR(kepler_position(0.7, 1.0, 1.0, 0.0).x, 0.3, 1e-15);
  const auto aph = kepler_position(0.5, 1.0, 1.0, oracle::kPi);
  EXPECT_NEAR(aph.x, -1.5, 1e-14);
  EXPECT_NEAR(aph.y, 0.0, 1e-14);
  // Kepler's second law: r^2 dphi/dt is constant
  const double ecc = 0.6;
  auto areal = [&](double t) {
    const double h = 1e-6;
    const auto a = kepler_position(ecc, 1.0, 1.0, t - h), b = kepler_position(ecc, 1.0, 1.0, t + h);
    const auto c = kepler_position(ecc, 1.0, 1.0, t);
    return c.x * (b.y - a.y) / (2 * h) - c.y * (b.x - a.x) / (2 * h);
  };
  const double expected = std::sqrt(1 - ecc * ecc);
  for (double t : {0.1, 1.0, 2.5, 4.0}) EXPECT_NEAR(areal(t), expected, 1e-8);
}

TEST(Fourier, CircularOrbit) {
  const auto t2 = fourier_triple(2, 0.0);
  EXPECT_EQ(t2.A, 0.5);
  EXPECT_EQ(t2.B, -0.5);
  EXPECT_EQ(t2.C, 0.5);
  for (int k : {1, 3, 4, 7, 20}) {
    const auto t = fourier_triple(k, 0.0);
    EXPECT_EQ(t.A, 0.0);
    EXPECT_EQ(t.B, 0.0);
    EXPECT_EQ(t.C, 0.0);
  }
  const auto o2 = fourier_oracle(2, 0.0);
  EXPECT_NEAR(o2.A, 0.5, 1e-15);
  EXPECT_NEAR(o2.B, -0.5, 1e-15);
  EXPECT_NEAR(o2.C, 0.5, 1e-15);
}

TEST(Fourier, MatchesTimeDomainProjection) {
  // Direct projection in t, through the Newton solver and kepler_position.
  for (double ecc : {0.3, 0.6, 0.9}) {
    for (int k : {1, 2, 3, 5, 8}) {
      auto proj = [&](auto&& g) { return oracle::integrate(g, 0.0, 2 * oracle::kPi, 256) / oracle::kPi; };
      const double A = proj([&](double t) {
        const auto p = kepler_position(ecc, 1.0, 1.0, t);
        return p.x * p.x * std::cos(k * t);
      });
      const double B = proj([&](double t) {
        const auto p = kepler_position(ecc, 1.0, 1.0, t);
        return p.y * p.y * std::cos(k * t);
      });
      const double C = proj([&](double t) {
        const auto p = kepler_position(ecc, 1.0, 1.0, t);
        return p.x * p.y * std::sin(k * t);
      });
      const auto f = fourier_triple(k, ecc);
      EXPECT_NEAR(f.A, A, 1e-10) << ecc << " " << k;
      EXPECT_NEAR(f.B, B, 1e-10) << ecc << " " << k;
      EXPECT_NEAR(f.C, C, 1e-10) << ecc << " " << k;
    }
  }
}

TEST(Fourier, OracleExamples) {
  for (auto [k, ecc] : {std::pair{3, 0.6}, {5, 0.9}, {1, 0.3}}) {
    const auto f = fourier_triple(k, ecc);
    const auto o = fourier_oracle(k, ecc);
    EXPECT_LE(oracle::rel(f.A, o.A), 1e-9);
    EXPECT_LE(oracle::rel(f.B, o.B), 1e-9);
    EXPECT_LE(oracle::rel(f.C, o.C), 1e-9);
  }
}

TEST(Fourier, ConstantTermsAreTimeAverages) {
  for (double ecc : {0.0, 0.4, 0.8}) {
    auto avg = [&](auto&& g) { return oracle::integrate(g, 0.0, 2 * oracle::kPi, 128) / (2 * oracle::kPi); };
    const double x2 = avg([&](double t) { const auto p = kepler_position(ecc, 1.0, 1.0, t); return p.x * p.x; });
    const double y2 = avg([&](double t) { const auto p = kepler_position(ecc, 1.0, 1.0, t); return p.y * p.y; });
    EXPECT_NEAR(fourier_constant_a0(ecc), x2, 1e-12);
    EXPECT_NEAR(fourier_constant_b0(ecc), y2, 1e-12);
  }
}

TEST(Fourier, DecayAndContinuity) {
  for (double ecc : {0.2, 0.5, 0.8}) {
    double prev = INFINITY, peak = 0.0;
    int decreasing_run = 0;
    for (int k = 1; k <= 120; ++k) {
      const auto t = fourier_triple(k, ecc);
      const double size = std::fabs(t.A) + std::fabs(t.B) + std::fabs(t.C);
      decreasing_run = size < prev ? decreasing_run + 1 : 0;
      peak = std::max(peak, size);
      prev = size;
    }
    EXPECT_GE(decreasing_run, 60) << ecc;  // monotone tail
    EXPECT_LT(prev, 1e-6 * peak) << ecc;
  }
  for (int i = 0; i <= 999; ++i) {
    const double ecc = i * 1e-3;
    for (double k : {1.0, 2.5, 13.0}) {
      const auto t = fourier_triple(k, ecc);
      ASSERT_TRUE(std::isfinite(t.A) && std::isfinite(t.B) && std::isfinite(t.C)) << ecc << " " << k;
    }
  }
}

TEST(Fourier, RejectsBadInput) {
  EXPECT_THROW(fourier_triple(0.0, 0.5), DomainError);
  EXPECT_THROW(fourier_triple(-1.0, 0.5), DomainError);
  EXPECT_THROW(fourier_triple(2.0, 1.0), DomainError);
  EXPECT_THROW(fourier_oracle(0, 0.5), DomainError);
}
