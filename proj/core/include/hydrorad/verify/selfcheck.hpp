#pragma once

#include <string>
#include <vector>

#include "hydrorad/constants.hpp"
#include "hydrorad/specfun/bessel.hpp"

namespace hydrorad::verify {

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  long cases = 0;
  double seconds = 0.0;
  bool passed() const { return max_deviation <= tolerance; }
};

/// Closed-form Fourier coefficients against the quadrature oracle for
/// k = 1..k_max and each eccentricity; largest relative deviation over A, B, C.
SuiteResult fourier_oracle_suite(int k_max = 40,
                                 std::vector<double> eccentricities = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99},
                                 const specfun::BesselConfig& cfg = {});

/// Closed-form m-resolved rate against the angular quadrature on `count`
/// random E2-allowed state pairs with n <= n_max (fixed seed).
SuiteResult angular_oracle_suite(const PhysicalConstants& k, int count = 50, int n_max = 6,
                                 unsigned long long seed = 20240611ULL);

/// sum_{m, m'} m_resolved_rate / (2l+1) against qm_rate for all n <= n_max.
SuiteResult m_sum_suite(const PhysicalConstants& k, int n_max = 8);

/// Relative spread over m of sum_{m'} m_resolved_rate, all n <= n_max.
SuiteResult m_independence_suite(const PhysicalConstants& k, int n_max = 8);

/// Degeneracy-weighted LSJ average against the l-level rate, n <= n_max.
SuiteResult lsj_average_suite(const PhysicalConstants& k, int n_max = 8);

/// Exact 3j orthogonality for every j1, j2, j3 in {0, 1/2, ..., j_max}.
/// Deviation is 0 when every sum equals 1 exactly, 1 otherwise.
SuiteResult wigner_3j_orthogonality_suite(int twice_j_max = 12);

/// Exact 6j orthogonality for every entry in {0, 1/2, ..., j_max}.
SuiteResult wigner_6j_orthogonality_suite(int twice_j_max = 12);

/// Derived constants against their primaries.
SuiteResult constants_suite(const PhysicalConstants& k);

/// All of the above with their contract tolerances.
std::vector<SuiteResult> run_selfcheck(const PhysicalConstants& k = codata2018(),
                                       const specfun::BesselConfig& cfg = {});

}  // namespace hydrorad::verify
