#pragma once

#include <span>

#include <gmpxx.h>

namespace hydrorad::specfun {

/// Exact number of the form coefficient * sqrt(radicand), both rational,
/// radicand >= 0. Zero is represented with coefficient 0 and radicand 1.
struct Surd {
  mpq_class coefficient{0};
  mpq_class radicand{1};

  static Surd rational(mpq_class q) { return Surd{std::move(q), mpq_class(1)}; }

  bool is_zero() const { return coefficient == 0 || radicand == 0; }
  int sign() const { return is_zero() ? 0 : sgn(coefficient); }
  /// coefficient^2 * radicand, exact.
  mpq_class squared() const { return coefficient * coefficient * radicand; }
  /// Correctly rounded to within a few ulp via an MPFR detour.
  double to_double() const;

  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b);
};

/// Exact rational square root if q is the square of a rational.
bool rational_sqrt(const mpq_class& q, mpq_class& root);

/// Exact sum of surds whose radicands differ only by rational squares
/// (the situation in every Wigner orthogonality sum). Throws
/// std::invalid_argument when the terms are not commensurable.
Surd exact_sum(std::span<const Surd> terms);

}  // namespace hydrorad::specfun
