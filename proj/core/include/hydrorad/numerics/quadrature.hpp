#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "hydrorad/errors.hpp"

namespace hydrorad::numerics {

struct QuadratureTolerance {
  double absolute = 1e-15;
  double relative = 1e-12;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error, abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(fc) * kKronrodWeights[7];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double lo = f(center - dx), hi = f(center + dx);
    const double sum = lo + hi;
    kronrod += kKronrodWeights[i] * sum;
    abs_sum += kKronrodWeights[i] * (std::abs(lo) + std::abs(hi));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration over the pieces
/// delimited by `breakpoints` (sorted, at least two entries). The interval
/// with the largest error estimate is bisected until the summed estimate is
/// within max(absolute, relative * |value|), or until it reaches the
/// rounding level of the integral of |f|, below which it cannot fall. Throws ConvergenceError when the
/// interval budget runs out first.
template <class F>
QuadratureResult integrate(F&& f, std::span<const double> breakpoints,
                           const QuadratureTolerance& tol = {}) {
  std::priority_queue<detail::Segment> work;
  double value = 0.0, error = 0.0, abs_value = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    auto s = detail::kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    value += s.value;
    error += s.error;
    abs_value += s.abs_value;
    work.push(s);
  }
  int intervals = static_cast<int>(work.size());
  constexpr double kRoundoff = 50.0 * 2.220446049250313e-16;
  while (error > std::max({tol.absolute, tol.relative * std::abs(value), kRoundoff * abs_value})) {
    if (intervals >= tol.max_intervals) {
      char msg[160];
      std::snprintf(msg, sizeof msg, "adaptive quadrature: error estimate %.3g (value %.3g) after %d intervals",
                    error, value, intervals);
      throw ConvergenceError(msg);
    }
    const auto worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::kronrod15(f, worst.a, mid);
    const auto right = detail::kronrod15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    work.push(left);
    work.push(right);
    ++intervals;
  }
  // Re-sum to shed the drift accumulated by the running updates.
  double resummed = 0.0;
  while (!work.empty()) {
    resummed += work.top().value;
    work.pop();
  }
  return {resummed, error, intervals};
}

template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureTolerance& tol = {}) {
  const std::array<double, 2> ends{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(ends), tol);
}

}  // namespace hydrorad::numerics
