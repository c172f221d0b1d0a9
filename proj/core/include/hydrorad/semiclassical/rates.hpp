#pragma once

#include "hydrorad/constants.hpp"
#include "hydrorad/level.hpp"
#include "hydrorad/semiclassical/channel_rate.hpp"
#include "hydrorad/specfun/bessel.hpp"

namespace hydrorad::semiclassical {

/// Dimensionless E2 harmonic strength:
///   dl = 0:  (k^5 / 4) (A_k + B_k)^2
///   dl = -2: (3 k^5 / 8) (A_k - B_k + 2 C_k)^2
///   dl = +2: (3 k^5 / 8) (A_k - B_k - 2 C_k)^2
double e2_reduced_rate(double k, double eccentricity, int delta_l,
                       const specfun::BesselConfig& cfg = {});

/// Dimensionless E1 harmonic strength k (J_k'(k eps) -+ sqrt(eps^-2 - 1) J_k(k eps))^2,
/// upper sign for dl = +1. At eps = 0 integer k takes the analytic limit
/// (1 for k = 1, dl = -1; 0 otherwise); non-integer k throws DomainError.
double e1_reduced_rate(double k, double eccentricity, int delta_l,
                       const specfun::BesselConfig& cfg = {});

/// Z^6 alpha^7 m_e c^2 / (60 n^7 hbar) [1/s].
double e2_rate_prefactor(int Z, int n, const PhysicalConstants& k);
/// 2 Z^4 alpha^5 m_e c^2 / (3 n^5 hbar) [1/s].
double e1_rate_prefactor(int Z, int n, const PhysicalConstants& k);

/// E2 rate radiated into harmonic k by the orbit of `level` (omega = k Omega).
ChannelRate e2_rate_fourier(const Level& level, double k, int delta_l,
                            const PhysicalConstants& constants = codata2018(),
                            const specfun::BesselConfig& cfg = {});

/// E1 rate radiated into harmonic k (omega = k Omega).
ChannelRate e1_rate_fourier(const Level& level, double k, int delta_l,
                            const PhysicalConstants& constants = codata2018(),
                            const specfun::BesselConfig& cfg = {});

/// Non-integer order k_dn = (n/2) [(1 - dn/n)^-2 - 1] that places the
/// harmonic on the Balmer line n -> n - dn. Requires 1 <= dn <= n - 1.
double rescaled_index(int n, int delta_n);

/// Weight (1 - dn/n)^-3 applied to the rate at k_dn.
double rescaling_weight(int n, int delta_n);

/// E2 rate for n -> n - dn with l -> l + dl from the rescaled harmonic.
/// omega is the Balmer frequency. Throws DomainError when the final state
/// (n', l') is not a hydrogenic level.
ChannelRate e2_rate_rescaled(const Level& initial, int delta_n, int delta_l,
                             const PhysicalConstants& constants = codata2018(),
                             const specfun::BesselConfig& cfg = {});

/// E1 counterpart of e2_rate_rescaled. Records from s states are marked
/// outside_validity.
ChannelRate e1_rate_rescaled(const Level& initial, int delta_n, int delta_l,
                             const PhysicalConstants& constants = codata2018(),
                             const specfun::BesselConfig& cfg = {});

}  // namespace hydrorad::semiclassical
