#pragma once

#include <string_view>

#include "hydrorad/level.hpp"

namespace hydrorad {

enum class Method { quantum, fourier, rescaled };
enum class Multipole { e1, e2 };

std::string_view to_string(Method m);
std::string_view to_string(Multipole m);

/// One decay channel of an initial level.
///
/// `delta_n` is n - n' for quantum and rescaled records and the (integer)
/// harmonic for Fourier-mode records; `harmonic` is the Bessel order actually
/// used (k for Fourier, k_dn for rescaled, 0 for quantum).
struct ChannelRate {
  Level initial;
  int delta_n = 0;
  double harmonic = 0.0;
  int delta_l = 0;
  double omega = 0.0;  // photon angular frequency [rad/s]
  double rate = 0.0;   // [1/s]
  Method method = Method::quantum;
  Multipole multipole = Multipole::e2;
  /// Set when the inputs lie outside the regime in which the method is known
  /// to be reliable (rescaled E1 from an s state).
  bool outside_validity = false;
};

/// A channel together with its share of the total of its method class.
struct BranchingEntry {
  ChannelRate channel;
  double branching_percent = 0.0;
};

/// Which rates enter the branching-ratio denominator.
enum class Denominator { e2_only, e1_and_e2 };

}  // namespace hydrorad
