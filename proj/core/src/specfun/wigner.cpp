#include "hydrorad/specfun/wigner.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "hydrorad/errors.hpp"

namespace hydrorad::specfun {

namespace {

constexpr int kFactorialTable = 512;

const std::vector<mpz_class>& factorial_table() {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t(kFactorialTable);
    t[0] = 1;
    for (int i = 1; i < kFactorialTable; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

mpz_class factorial(int n) {
  if (n < kFactorialTable) return factorial_table()[n];
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Halves a doubled quantity that is known to be even.
int half(int twice) { return twice / 2; }

// Triangle coefficient Delta(a b c) from doubled arguments.
mpq_class triangle_coefficient(int ta, int tb, int tc) {
  return mpq_class(factorial(half(ta + tb - tc)) * factorial(half(ta - tb + tc)) *
                       factorial(half(-ta + tb + tc)),
                   factorial(half(ta + tb + tc) + 1));
}

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

void check_projection(const char* op, HalfInt j, HalfInt m) {
  if (j.twice() < 0) {
    throw DomainError(std::string(op) + ": negative angular momentum " + j.to_string());
  }
  if (std::abs(m.twice()) > j.twice() || (j.twice() - m.twice()) % 2 != 0) {
    throw DomainError(std::string(op) + ": invalid projection m=" + m.to_string() +
                      " for j=" + j.to_string());
  }
}

}  // namespace

WignerSymbol::WignerSymbol(Surd exact) : exact_(std::move(exact)), value_(exact_.to_double()) {}

bool triad(HalfInt a, HalfInt b, HalfInt c) {
  const int ta = a.twice(), tb = b.twice(), tc = c.twice();
  if (ta < 0 || tb < 0 || tc < 0) return false;
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

WignerSymbol wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                       HalfInt m3) {
  check_projection("wigner_3j", j1, m1);
  check_projection("wigner_3j", j2, m2);
  check_projection("wigner_3j", j3, m3);
  if ((m1 + m2 + m3).twice() != 0 || !triad(j1, j2, j3)) return WignerSymbol{};

  const int a1 = j1.twice(), a2 = j2.twice(), a3 = j3.twice();
  const int b1 = m1.twice(), b2 = m2.twice(), b3 = m3.twice();

  mpq_class radicand = triangle_coefficient(a1, a2, a3);
  radicand *= factorial(half(a1 + b1)) * factorial(half(a1 - b1)) * factorial(half(a2 + b2)) *
              factorial(half(a2 - b2)) * factorial(half(a3 + b3)) * factorial(half(a3 - b3));

  const int kmin = std::max({0, half(a2 - a3 - b1), half(a1 - a3 + b2)});
  const int kmax = std::min({half(a1 + a2 - a3), half(a1 - b1), half(a2 + b2)});
  mpq_class sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    const mpz_class den = factorial(k) * factorial(half(a1 + a2 - a3) - k) *
                          factorial(half(a1 - b1) - k) * factorial(half(a2 + b2) - k) *
                          factorial(half(a3 - a2 + b1) + k) * factorial(half(a3 - a1 - b2) + k);
    mpq_class term(k % 2 == 0 ? 1 : -1, 1);
    term /= den;
    sum += term;
  }
  if (sum == 0) return WignerSymbol{};
  if (std::abs(half(a1 - a2 - b3)) % 2 == 1) sum = -sum;
  return WignerSymbol(Surd{canonical(sum), canonical(radicand)});
}

WignerSymbol wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                       HalfInt j6) {
  for (HalfInt j : {j1, j2, j3, j4, j5, j6}) {
    if (j.twice() < 0) {
      throw DomainError("wigner_6j: negative angular momentum " + j.to_string());
    }
  }
  if (!triad(j1, j2, j3) || !triad(j1, j5, j6) || !triad(j4, j2, j6) || !triad(j4, j5, j3)) {
    return WignerSymbol{};
  }
  const int t1 = j1.twice(), t2 = j2.twice(), t3 = j3.twice();
  const int t4 = j4.twice(), t5 = j5.twice(), t6 = j6.twice();

  const mpq_class radicand =
      triangle_coefficient(t1, t2, t3) * triangle_coefficient(t1, t5, t6) *
      triangle_coefficient(t4, t2, t6) * triangle_coefficient(t4, t5, t3);

  const int alpha[4] = {half(t1 + t2 + t3), half(t1 + t5 + t6), half(t4 + t2 + t6),
                        half(t4 + t5 + t3)};
  const int beta[3] = {half(t1 + t2 + t4 + t5), half(t2 + t3 + t5 + t6),
                       half(t3 + t1 + t6 + t4)};
  const int tmin = *std::max_element(std::begin(alpha), std::end(alpha));
  const int tmax = *std::min_element(std::begin(beta), std::end(beta));

  mpq_class sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    mpz_class den = 1;
    for (int a : alpha) den *= factorial(t - a);
    for (int b : beta) den *= factorial(b - t);
    mpq_class term(factorial(t + 1), den);
    if (t % 2 != 0) term = -term;
    sum += term;
  }
  if (sum == 0) return WignerSymbol{};
  return WignerSymbol(Surd{canonical(sum), canonical(radicand)});
}

WignerSymbol clebsch_gordan_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                                  HalfInt M) {
  check_projection("clebsch_gordan", J, M);
  const WignerSymbol three_j = wigner_3j(j1, j2, J, m1, m2, -M);
  if (three_j.is_zero()) return WignerSymbol{};
  const int phase = half(j1.twice() - j2.twice() + M.twice());
  const Surd factor{mpq_class(std::abs(phase) % 2 == 0 ? 1 : -1), mpq_class(J.twice() + 1)};
  return WignerSymbol(factor * three_j.exact());
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  return clebsch_gordan_exact(j1, m1, j2, m2, J, M).value();
}

WignerSymbol wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  return wigner_3j(HalfInt::from_int(j1), HalfInt::from_int(j2), HalfInt::from_int(j3),
                   HalfInt::from_int(m1), HalfInt::from_int(m2), HalfInt::from_int(m3));
}

double clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M) {
  return clebsch_gordan(HalfInt::from_int(l1), HalfInt::from_int(m1), HalfInt::from_int(l2),
                        HalfInt::from_int(m2), HalfInt::from_int(L), HalfInt::from_int(M));
}

}  // namespace hydrorad::specfun
