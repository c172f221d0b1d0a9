#pragma once

// Reference computations for the tests. Nothing here calls into hydrorad:
// integrals use a composite Gauss-Legendre rule built from std::legendre,
// special functions come from <cmath>.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

struct GaussLegendre {
  std::vector<double> nodes, weights;

  explicit GaussLegendre(int order) {
    for (int i = 1; i <= order; ++i) {
      double x = std::cos(kPi * (i - 0.25) / (order + 0.5));
      for (int it = 0; it < 100; ++it) {
        const double p = std::legendre(order, x);
        const double dp = order * (x * p - std::legendre(order - 1, x)) / (x * x - 1.0);
        const double dx = p / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      const double p1 = std::legendre(order - 1, x);
      const double dp = order * (x * std::legendre(order, x) - p1) / (x * x - 1.0);
      nodes.push_back(x);
      weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
  }
};

/// Composite 32-point Gauss-Legendre over `panels` equal pieces of [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b, int panels = 64) {
  static const GaussLegendre rule(32);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

/// Bessel's integral: J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
///   - sin(nu pi)/pi int_0^inf exp(-x sinh t - nu t) dt,   x > 0.
inline double bessel_j(double nu, double x) {
  double v = integrate([&](double t) { return std::cos(nu * t - x * std::sin(t)); }, 0.0, kPi, 64) / kPi;
  const double s = std::sin(nu * kPi);
  if (s != 0.0 && std::fabs(nu - std::round(nu)) > 1e-15) {
    const double tail = integrate([&](double t) { return std::exp(-x * std::sinh(t) - nu * t); }, 0.0, 12.0, 256);
    v -= s / kPi * tail;
  }
  return v;
}

/// Hydrogen R_nl(r), Z = 1, r in Bohr radii, via std::assoc_laguerre.
inline double radial(int n, int l, double r) {
  const double rho = 2.0 * r / n;
  const double norm = std::sqrt(std::pow(2.0 / n, 3) * std::tgamma(n - l) / (2.0 * n * std::tgamma(n + l + 1)));
  return norm * std::exp(-rho / 2) * std::pow(rho, l) * std::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}

/// int_0^inf r^4 R_n'l' R_nl dr by quadrature (n <= 10 is comfortable).
inline double radial_r2(int n, int l, int nf, int lf) {
  const double rmax = 40.0 * std::max(n, nf) * std::max(n, nf) / 1.0 + 60.0;
  return integrate([&](double r) { return std::pow(r, 4) * radial(n, l, r) * radial(nf, lf, r); }, 0.0, rmax, 400);
}

/// Y_lm(theta, phi) with the Condon-Shortley phase.
inline std::complex<double> ylm(int l, int m, double theta, double phi) {
  const double base = std::sph_legendre(l, std::abs(m), theta);
  const double v = m >= 0 ? base : ((-m) % 2 ? -base : base);
  return v * std::polar(1.0, m * phi);
}

/// int over the sphere of conj(f) g, 2D tensor Gauss-Legendre.
inline std::complex<double> sphere_integral(const std::function<std::complex<double>(double, double)>& f,
                                            int panels = 8) {
  std::complex<double> total = 0.0;
  auto inner = [&](double theta, bool imag) {
    return integrate([&](double phi) {
      const auto v = f(theta, phi);
      return imag ? v.imag() : v.real();
    }, 0.0, 2.0 * kPi, panels);
  };
  const double re = integrate([&](double t) { return std::sin(t) * inner(t, false); }, 0.0, kPi, panels);
  const double im = integrate([&](double t) { return std::sin(t) * inner(t, true); }, 0.0, kPi, panels);
  total = {re, im};
  return total;
}

/// Relative difference with a symmetric denominator.
inline double rel(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

}  // namespace oracle
