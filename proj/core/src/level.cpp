#include "hydrorad/level.hpp"

#include <cstdlib>
#include <string>

#include "hydrorad/errors.hpp"

namespace hydrorad {

Level::Level(int Z, int n, int l) : Z_(Z), n_(n), l_(l) {
  if (Z < 1) throw DomainError("level: Z must be positive, got " + std::to_string(Z));
  if (n < 1) throw DomainError("level: n must be positive, got " + std::to_string(n));
  if (l < 0 || l >= n) {
    throw DomainError("level: l must satisfy 0 <= l < n (n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ")");
  }
}

Level Level::with_m(int m) const {
  if (std::abs(m) > l_) {
    throw DomainError("level: |m| must not exceed l (l=" + std::to_string(l_) +
                      ", m=" + std::to_string(m) + ")");
  }
  Level out = *this;
  out.m_ = m;
  return out;
}

Level Level::with_j(specfun::HalfInt j) const {
  if (j.is_integer() || std::abs(j.twice() - 2 * l_) != 1 || j.twice() < 1) {
    throw DomainError("level: j must be l +- 1/2 and >= 1/2 (l=" + std::to_string(l_) +
                      ", j=" + j.to_string() + ")");
  }
  Level out = *this;
  out.j_ = j;
  return out;
}

double transition_omega(int n, int n_final, int Z, const PhysicalConstants& k) {
  if (n_final < 1 || n_final >= n) {
    throw DomainError("transition_omega: need 1 <= n' < n (n=" + std::to_string(n) +
                      ", n'=" + std::to_string(n_final) + ")");
  }
  const double rydberg = 0.5 * Z * Z * k.alpha * k.alpha * k.electron_frequency;
  return rydberg * (1.0 / (double(n_final) * n_final) - 1.0 / (double(n) * n));
}

}  // namespace hydrorad
