#include "hydrorad/specfun/surd.hpp"

#include <stdexcept>

#include "hydrorad/specfun/big_real.hpp"

namespace hydrorad::specfun {

double Surd::to_double() const {
  if (is_zero()) return 0.0;
  constexpr int kDigits = 40;
  BigReal v = BigReal(coefficient, kDigits) * sqrt(BigReal(radicand, kDigits));
  return v.to_double();
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return Surd{};
  Surd out{a.coefficient * b.coefficient, a.radicand * b.radicand};
  mpq_class root;
  if (rational_sqrt(out.radicand, root)) {
    out.coefficient *= root;
    out.radicand = 1;
  }
  return out;
}

bool operator==(const Surd& a, const Surd& b) {
  return a.sign() == b.sign() && a.squared() == b.squared();
}

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  // mpq_class is kept canonical, so q is a square iff numerator and
  // denominator are both perfect squares.
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

Surd exact_sum(std::span<const Surd> terms) {
  const Surd* base = nullptr;
  for (const auto& t : terms) {
    if (!t.is_zero()) {
      base = &t;
      break;
    }
  }
  if (base == nullptr) return Surd{};

  mpq_class total = 0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    mpq_class ratio;
    if (!rational_sqrt(t.radicand / base->radicand, ratio)) {
      throw std::invalid_argument("exact_sum: incommensurable radicands");
    }
    total += t.coefficient * ratio;
  }
  if (total == 0) return Surd{};
  return Surd{total, base->radicand};
}

}  // namespace hydrorad::specfun
