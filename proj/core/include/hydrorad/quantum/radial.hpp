#pragma once

#include "hydrorad/specfun/surd.hpp"

namespace hydrorad::quantum {

inline constexpr int kMaxPrincipal = 200;

/// Normalized hydrogenic radial function R_nl(r) for nuclear charge Z, with r
/// in Bohr radii and the result in a0^(-3/2). The polynomial part is summed
/// from exact Laguerre coefficients in extended precision.
double radial_wavefunction(int n, int l, int Z, double r_bohr);

/// Exact square of the normalization constant of R_nl at Z = 1, in a0^-3.
mpq_class radial_normalization_squared(int n, int l);

/// I = integral_0^inf r^4 R_n'l'(r) R_nl(r) dr, held exactly as
/// rational * sqrt(rational) in units of a0^2 (Z scaling 1/Z^2 included).
struct RadialIntegral {
  specfun::Surd exact;
  double value_bohr2() const { return exact.to_double(); }
  int sign() const { return exact.sign(); }
};

/// Exact radial integral by term-wise Gamma integration of the Laguerre
/// expansions. Throws DomainError for invalid (n, l) or PrecisionOverflow for
/// n > kMaxPrincipal.
RadialIntegral radial_integral(int n, int l, int n_final, int l_final, int Z);

/// The Z = 1 integrals are memoized (thread-safe). The cache only avoids
/// recomputation; results are identical with it disabled.
void set_radial_cache_enabled(bool enabled);
bool radial_cache_enabled();
void clear_radial_cache();

}  // namespace hydrorad::quantum
