#include "hydrorad/specfun/big_real.hpp"

#include <algorithm>
#include <cmath>

namespace hydrorad::specfun {

namespace {
constexpr mpfr_rnd_t kRound = MPFR_RNDN;
}

long digits_to_bits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.321928094887362)) + 8;
}

BigReal::BigReal(int digits) : digits_(std::max(digits, kMinDigits)) {
  mpfr_init2(value_, digits_to_bits(digits_));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, int digits) : BigReal(digits) {
  mpfr_set_d(value_, value, kRound);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) {
  mpfr_set_si(value_, value, kRound);
}

BigReal::BigReal(const mpq_class& value, int digits) : BigReal(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  // Leave `other` as a valid minimum-precision zero so its destructor is safe.
  mpfr_init2(value_, digits_to_bits(kMinDigits));
  mpfr_swap(value_, other.value_);
  other.digits_ = kMinDigits;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

double BigReal::to_double() const { return mpfr_get_d(value_, kRound); }

int BigReal::sign() const { return mpfr_sgn(value_); }

long BigReal::exponent2() const { return mpfr_get_exp(value_); }

void BigReal::widen_to(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, digits_to_bits(digits), kRound);
  digits_ = digits;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, kRound);
  return *this;
}

BigReal& BigReal::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, kRound);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, kRound);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal out(x);
  mpfr_abs(out.value_, out.value_, kRound);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.digits_);
  mpfr_sqrt(out.value_, x.value_, kRound);
  return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(std::max(base.digits_, exponent.digits_));
  mpfr_pow(out.value_, base.value_, exponent.value_, kRound);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.digits_);
  mpfr_exp(out.value_, x.value_, kRound);
  return out;
}

BigReal tgamma(const BigReal& x) {
  BigReal out(x.digits_);
  mpfr_gamma(out.value_, x.value_, kRound);
  return out;
}

bool abs_less(const BigReal& a, const BigReal& b) {
  return mpfr_cmpabs(a.value_, b.value_) < 0;
}

void sin_cos(const BigReal& x, BigReal& s, BigReal& c) {
  s = BigReal(x.digits_);
  c = BigReal(x.digits_);
  mpfr_sin_cos(s.value_, c.value_, x.value_, MPFR_RNDN);
}

BigReal BigReal::pi(int digits) {
  BigReal out(digits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

}  // namespace hydrorad::specfun
