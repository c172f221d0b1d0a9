#pragma once

#include "hydrorad/specfun/half_int.hpp"
#include "hydrorad/specfun/surd.hpp"

namespace hydrorad::specfun {

/// An angular-momentum coupling coefficient: exact (rational) * sqrt(rational)
/// value produced by integer arithmetic, plus its double view.
class WignerSymbol {
 public:
  WignerSymbol() = default;
  explicit WignerSymbol(Surd exact);

  const Surd& exact() const { return exact_; }
  double value() const { return value_; }
  bool is_zero() const { return exact_.is_zero(); }

 private:
  Surd exact_;
  double value_ = 0.0;
};

/// True when (a, b, c) satisfy the triangle rule and a + b + c is an integer.
bool triad(HalfInt a, HalfInt b, HalfInt c);

/// Racah formula for (j1 j2 j3; m1 m2 m3). Exact zero when the m's do not sum
/// to zero or the triangle rule fails. Throws DomainError on |m| > j, j < 0,
/// or j - m not integral.
WignerSymbol wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                       HalfInt m3);

/// Racah single-sum formula for {j1 j2 j3; j4 j5 j6}. Exact zero when any of
/// the four triads fails. Throws DomainError for negative entries.
WignerSymbol wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                       HalfInt j6);

/// <j1 m1 j2 m2 | J M> via its 3j representation.
WignerSymbol clebsch_gordan_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                                  HalfInt J, HalfInt M);
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                      HalfInt M);

/// Integer-argument conveniences.
WignerSymbol wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3);
double clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M);

}  // namespace hydrorad::specfun
