#pragma once

#include <mpfr.h>

#include <gmpxx.h>

namespace hydrorad::specfun {

/// Lowest working precision any BigReal is allowed to carry.
inline constexpr int kMinDigits = 30;

/// Arbitrary-precision real backed by an MPFR value.
///
/// Every value carries its own precision (in significant decimal digits,
/// clamped to at least kMinDigits); binary operations produce a result at the
/// larger of the two operand precisions. There is no global precision state,
/// so values may be used freely from several threads.
class BigReal {
 public:
  explicit BigReal(int digits);
  BigReal(double value, int digits);
  BigReal(long value, int digits);
  BigReal(const mpq_class& value, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  double to_double() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); undefined for zero.
  long exponent2() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(double rhs);
  BigReal& operator/=(double rhs);
  BigReal operator-() const;

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, double b) { return a *= b; }
  friend BigReal operator/(BigReal a, double b) { return a /= b; }

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal pow(const BigReal& base, const BigReal& exponent);
  friend BigReal exp(const BigReal& x);
  /// Gamma function; x must not be a non-positive integer.
  friend BigReal tgamma(const BigReal& x);
  friend bool abs_less(const BigReal& a, const BigReal& b);
  friend void sin_cos(const BigReal& x, BigReal& s, BigReal& c);

  static BigReal pi(int digits);

  mpfr_srcptr get() const { return value_; }
  /// Direct access for kernels that drive MPFR themselves. The precision of
  /// the underlying value must not be changed through this handle.
  mpfr_ptr get_mutable() { return value_; }

 private:
  void widen_to(int digits);

  mpfr_t value_;
  int digits_;
};

/// Bits of mantissa needed for `digits` significant decimal digits.
long digits_to_bits(int digits);

}  // namespace hydrorad::specfun
