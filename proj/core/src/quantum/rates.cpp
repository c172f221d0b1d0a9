#include "hydrorad/quantum/rates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "hydrorad/errors.hpp"
#include "hydrorad/numerics/quadrature.hpp"
#include "hydrorad/quantum/angular.hpp"
#include "hydrorad/quantum/radial.hpp"
#include "hydrorad/specfun/wigner.hpp"

namespace hydrorad::quantum {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_same_atom(const Level& a, const Level& b) {
  if (a.Z() != b.Z()) throw DomainError("initial and final level must share Z");
}

void check_emission(const Level& initial, const Level& final_state) {
  check_same_atom(initial, final_state);
  if (final_state.n() >= initial.n()) {
    throw DomainError("spontaneous emission needs n' < n (n=" + std::to_string(initial.n()) +
                      ", n'=" + std::to_string(final_state.n()) + ")");
  }
}

ChannelRate base_record(const Level& initial, const Level& final_state, double omega) {
  ChannelRate out{.initial = initial};
  out.delta_n = initial.n() - final_state.n();
  out.delta_l = final_state.l() - initial.l();
  out.omega = omega;
  out.method = Method::quantum;
  out.multipole = Multipole::e2;
  return out;
}

}  // namespace

double rate_from_strength(double omega, double strength_bohr4, const PhysicalConstants& k) {
  const double a2 = k.bohr_radius * k.bohr_radius;
  return k.coulomb_e2 * std::pow(omega, 5) / (k.hbar * std::pow(k.c, 5)) * strength_bohr4 * a2 *
         a2;
}

QuadrupoleTensor quadrupole_tensor(const Level& initial, const Level& final_state) {
  check_same_atom(initial, final_state);
  if (!initial.m() || !final_state.m()) {
    throw DomainError("quadrupole_tensor: both levels need a magnetic quantum number");
  }
  const int l = initial.l(), m = *initial.m();
  const int lp = final_state.l(), mp = *final_state.m();
  QuadrupoleTensor q{};
  if (std::abs(l - lp) > 2 || (l + lp) % 2 != 0 || std::abs(m - mp) > 2) return q;

  const double I = radial_integral(initial.n(), l, final_state.n(), lp, initial.Z()).value_bohr2();
  auto lam = [&](int mu) { return angular_lambda(lp, mp, 2, mu, l, m); };
  const double trace = (l == lp && m == mp) ? 1.0 / 3.0 : 0.0;
  const double c2 = std::sqrt(2.0 * kPi / 15.0);
  const double c0 = std::sqrt(4.0 * kPi / 5.0);
  const double c1 = 0.5 * std::sqrt(8.0 * kPi / 15.0);
  const double lp2 = lam(2), lm2 = lam(-2), l0 = lam(0), lp1 = lam(1), lm1 = lam(-1);

  q.xx = I * (c2 * (lp2 + lm2) - c0 * l0 / 3.0 + trace);
  q.yy = I * (-c2 * (lp2 + lm2) - c0 * l0 / 3.0 + trace);
  q.zz = I * (2.0 * c0 * l0 / 3.0 + trace);
  q.xy = I * c2 * (lp2 - lm2) / cplx(0.0, 1.0);
  q.xz = I * c1 * (lm1 - lp1);
  q.yz = I * cplx(0.0, 1.0) * c1 * (lm1 + lp1);
  return q;
}

double averaged_tensor_square(const QuadrupoleTensor& q) {
  const auto sq = [](cplx z) { return std::norm(z); };
  const auto cross = [](cplx a, cplx b) { return 2.0 * (a * std::conj(b)).real(); };
  return (sq(q.xx) + sq(q.yy) + sq(q.zz)) / 15.0 + (sq(q.xy) + sq(q.xz) + sq(q.yz)) / 5.0 -
         (cross(q.xx, q.yy) + cross(q.xx, q.zz) + cross(q.yy, q.zz)) / 30.0;
}

double angular_average_oracle(const QuadrupoleTensor& q, double omega, const PhysicalConstants& k) {
  const std::array<std::array<cplx, 3>, 3> Q{{{q.xx, q.xy, q.xz}, {q.xy, q.yy, q.yz},
                                              {q.xz, q.yz, q.zz}}};
  // The integrand is |sum of O(|Q|) terms|^2, so its rounding level is set
  // by |Q|^2 rather than by its own (possibly vanishing) size.
  double scale = 0.0;
  for (const auto& row : Q)
    for (const auto& v : row) scale = std::max(scale, std::norm(v));
  const numerics::QuadratureTolerance inner{1e-15 * scale, 1e-13, 2000};
  const numerics::QuadratureTolerance tol{1e-14 * scale, 1e-11, 2000};

  auto over_psi = [&](double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    const std::array<double, 3> pol{st * cp, st * sp, ct};
    auto integrand = [&](double psi) {
      const double cs = std::cos(psi), ss = std::sin(psi);
      const std::array<double, 3> dir{cp * ct * cs - sp * ss, sp * ct * cs + cp * ss, -st * cs};
      cplx amplitude = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) amplitude += pol[i] * dir[j] * Q[i][j];
      return std::norm(amplitude);
    };
    return numerics::integrate(integrand, 0.0, 2.0 * kPi, inner).value / (2.0 * kPi);
  };
  auto over_phi = [&](double theta) {
    auto f = [&](double phi) { return over_psi(theta, phi); };
    return std::sin(theta) * numerics::integrate(f, 0.0, 2.0 * kPi, tol).value;
  };
  const double average = numerics::integrate(over_phi, 0.0, kPi, tol).value / (4.0 * kPi);
  return rate_from_strength(omega, average, k);
}

ChannelRate m_resolved_rate(const Level& initial, const Level& final_state,
                            const PhysicalConstants& k) {
  check_emission(initial, final_state);
  const double omega = transition_omega(initial.n(), final_state.n(), initial.Z(), k);
  ChannelRate out = base_record(initial, final_state, omega);
  if (!initial.m() || !final_state.m()) {
    throw DomainError("m_resolved_rate: both levels need a magnetic quantum number");
  }
  if (!e2_allowed(initial.l(), final_state.l()) || std::abs(*initial.m() - *final_state.m()) > 2) {
    return out;
  }
  out.rate = rate_from_strength(omega, averaged_tensor_square(quadrupole_tensor(initial, final_state)), k);
  return out;
}

TransitionStrength strength(const Level& initial, const Level& final_state) {
  check_same_atom(initial, final_state);
  const int l = initial.l(), lp = final_state.l();
  if (!e2_allowed(l, lp)) return {};
  const auto three_j = specfun::wigner_3j(lp, 2, l, 0, 0, 0);
  if (three_j.is_zero()) return {};
  const auto I = radial_integral(initial.n(), l, final_state.n(), lp, initial.Z());
  mpq_class s((2 * l + 1) * (2 * lp + 1), 15);
  s.canonicalize();
  return {s * three_j.exact().squared() * I.exact.squared()};
}

TransitionStrength strength_lsj(const Level& initial, const Level& final_state) {
  using specfun::HalfInt;
  if (!initial.j() || !final_state.j()) {
    throw DomainError("strength_lsj: both levels need a total angular momentum j");
  }
  const HalfInt j = *initial.j(), jp = *final_state.j();
  const auto six_j = specfun::wigner_6j(jp, HalfInt::from_int(2), j, HalfInt::from_int(initial.l()),
                                        HalfInt::from_twice(1), HalfInt::from_int(final_state.l()));
  if (six_j.is_zero()) return {};
  const TransitionStrength s = strength(initial, final_state);
  if (s.is_zero()) return {};
  return {mpq_class((j.twice() + 1) * (jp.twice() + 1)) * six_j.exact().squared() * s.exact_bohr4};
}

ChannelRate qm_rate(const Level& initial, const Level& final_state, const PhysicalConstants& k) {
  check_emission(initial, final_state);
  const double omega = transition_omega(initial.n(), final_state.n(), initial.Z(), k);
  ChannelRate out = base_record(initial, final_state, omega);
  const TransitionStrength s = strength(initial, final_state);
  if (s.is_zero()) return out;
  mpq_class averaged = s.exact_bohr4 / (2 * initial.l() + 1);
  out.rate = rate_from_strength(omega, averaged.get_d(), k);
  return out;
}

ChannelRate qm_rate_lsj(const Level& initial, const Level& final_state, const PhysicalConstants& k) {
  check_emission(initial, final_state);
  const double omega = transition_omega(initial.n(), final_state.n(), initial.Z(), k);
  ChannelRate out = base_record(initial, final_state, omega);
  const TransitionStrength s = strength_lsj(initial, final_state);
  if (s.is_zero()) return out;
  mpq_class averaged = s.exact_bohr4 / (initial.j()->twice() + 1);
  out.rate = rate_from_strength(omega, averaged.get_d(), k);
  return out;
}

std::vector<BranchingEntry> qm_branching_table(const Level& initial, const PhysicalConstants& k) {
  std::vector<BranchingEntry> entries;
  double total = 0.0;
  for (int dn = 1; dn < initial.n(); ++dn) {
    const int n_final = initial.n() - dn;
    for (int dl : {-2, 0, 2}) {
      const int l_final = initial.l() + dl;
      if (l_final < 0 || l_final >= n_final || !e2_allowed(initial.l(), l_final)) continue;
      auto rate = qm_rate(initial, Level(initial.Z(), n_final, l_final), k);
      total += rate.rate;
      entries.push_back({rate, 0.0});
    }
  }
  for (auto& e : entries) e.branching_percent = total > 0.0 ? 100.0 * e.channel.rate / total : 0.0;
  return entries;
}

}  // namespace hydrorad::quantum
