#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "hydrorad/constants.hpp"
#include "hydrorad/level.hpp"
#include "hydrorad/semiclassical/channel_rate.hpp"

namespace hydrorad::quantum {

using hydrorad::transition_omega;

/// Matrix elements Q_ij = <n' l' m'| r_i r_j |n l m> in units of a0^2.
struct QuadrupoleTensor {
  std::complex<double> xx, yy, zz, xy, xz, yz;
};

/// e^2 omega^5 / (4 pi eps0 hbar c^5) * a0^4: turns a strength in a0^4 into
/// a rate in 1/s. Every quantum rate goes through this one conversion.
double rate_from_strength(double omega, double strength_bohr4, const PhysicalConstants& k);

/// The six Cartesian quadrupole matrix elements between m-resolved levels.
/// Both levels need m set (DomainError otherwise) and must share Z.
QuadrupoleTensor quadrupole_tensor(const Level& initial, const Level& final_state);

/// Direction- and polarization-averaged |eps_i k_j Q_ij|^2 in closed form:
///   (1/15) sum |Q_ii|^2 + (1/5) sum_{i<j} |Q_ij|^2 - (1/30) sum_{i<j} 2 Re(Q_ii Q_jj*).
double averaged_tensor_square(const QuadrupoleTensor& q);

/// Same average by numerical quadrature over the polarization angles
/// (theta, phi) and the direction angle psi on the circle orthogonal to the
/// polarization. Returns a rate in 1/s. Throws ConvergenceError.
double angular_average_oracle(const QuadrupoleTensor& q, double omega,
                              const PhysicalConstants& k);

/// E2 rate n l m -> n' l' m' (n' < n). Exact 0 when a selection rule forbids it.
ChannelRate m_resolved_rate(const Level& initial, const Level& final_state,
                            const PhysicalConstants& k = codata2018());

/// S = sum_{m, m'} |...|^2 for the l-levels, or its LSJ analogue, held exactly
/// in units of a0^4.
struct TransitionStrength {
  mpq_class exact_bohr4{0};
  double value_bohr4() const { return exact_bohr4.get_d(); }
  bool is_zero() const { return exact_bohr4 == 0; }
};

/// (2l+1)(2l'+1)/15 * (l' 2 l; 0 0 0)^2 * I^2.
TransitionStrength strength(const Level& initial, const Level& final_state);

/// (2j+1)(2j'+1) {j' 2 j; l 1/2 l'}^2 * S. Both levels need j set.
TransitionStrength strength_lsj(const Level& initial, const Level& final_state);

/// Statistically averaged l-level rate, S / (2l+1) times the prefactor.
ChannelRate qm_rate(const Level& initial, const Level& final_state,
                    const PhysicalConstants& k = codata2018());

/// LSJ-level rate S_j / (2j+1) times the prefactor, at the Schroedinger
/// (fine-structure free) photon frequency.
ChannelRate qm_rate_lsj(const Level& initial, const Level& final_state,
                        const PhysicalConstants& k = codata2018());

/// All E2-allowed decays of `initial` to lower n with branching fractions in
/// percent of the total quantum E2 rate, sorted by dn then dl.
std::vector<BranchingEntry> qm_branching_table(const Level& initial,
                                               const PhysicalConstants& k = codata2018());

}  // namespace hydrorad::quantum
