#pragma once

#include <optional>
#include <string>

#include "hydrorad/constants.hpp"
#include "hydrorad/specfun/half_int.hpp"

namespace hydrorad {

/// A hydrogenic bound state (Z, n, l) with optional magnetic number m or
/// total angular momentum j = l +- 1/2. Constructors validate the quantum
/// numbers and throw DomainError on violation.
class Level {
 public:
  Level(int Z, int n, int l);

  Level with_m(int m) const;
  Level with_j(specfun::HalfInt j) const;

  int Z() const { return Z_; }
  int n() const { return n_; }
  int l() const { return l_; }
  const std::optional<int>& m() const { return m_; }
  const std::optional<specfun::HalfInt>& j() const { return j_; }

  friend bool operator==(const Level&, const Level&) = default;

 private:
  int Z_;
  int n_;
  int l_;
  std::optional<int> m_;
  std::optional<specfun::HalfInt> j_;
};

/// Angular frequency of the photon emitted in n -> n_final (Balmer formula,
/// no fine structure). Throws DomainError unless 1 <= n_final < n.
double transition_omega(int n, int n_final, int Z, const PhysicalConstants& k);

}  // namespace hydrorad
