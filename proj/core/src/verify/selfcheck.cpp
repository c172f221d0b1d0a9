#include "hydrorad/verify/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "hydrorad/kepler/fourier.hpp"
#include "hydrorad/quantum/angular.hpp"
#include "hydrorad/quantum/rates.hpp"
#include "hydrorad/specfun/wigner.hpp"

namespace hydrorad::verify {

namespace {

using specfun::HalfInt;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double relative(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

// Calls f(initial, final) for every E2-allowed l-level pair with n <= n_max.
template <class F>
void for_each_e2_pair(int n_max, F&& f) {
  for (int n = 2; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int nf = 1; nf < n; ++nf) {
        for (int lf = std::max(0, l - 2); lf <= std::min(nf - 1, l + 2); lf += 2) {
          if (!quantum::e2_allowed(l, lf)) continue;
          f(Level(1, n, l), Level(1, nf, lf));
        }
      }
    }
  }
}

}  // namespace

SuiteResult fourier_oracle_suite(int k_max, std::vector<double> eccentricities,
                                 const specfun::BesselConfig& cfg) {
  const auto t0 = Clock::now();
  SuiteResult r{"fourier closed form vs orbit quadrature", 0.0, 1e-9, 0, 0.0};
  for (double ecc : eccentricities) {
    for (int k = 1; k <= k_max; ++k) {
      const auto closed = kepler::fourier_triple(k, ecc, cfg);
      const auto oracle = kepler::fourier_oracle(k, ecc);
      const double pairs[3][2] = {{closed.A, oracle.A}, {closed.B, oracle.B}, {closed.C, oracle.C}};
      for (const auto& p : pairs) {
        r.max_deviation = std::max(r.max_deviation, relative(p[0], p[1]));
        ++r.cases;
      }
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult angular_oracle_suite(const PhysicalConstants& k, int count, int n_max,
                                 unsigned long long seed) {
  const auto t0 = Clock::now();
  SuiteResult r{"angular average quadrature vs closed form", 0.0, 1e-6, 0, 0.0};
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  while (r.cases < count) {
    const int n = uniform(2, n_max);
    const int l = uniform(0, n - 1);
    const int nf = uniform(1, n - 1);
    const int lf = l + 2 * uniform(-1, 1);
    if (lf < 0 || lf >= nf || !quantum::e2_allowed(l, lf)) continue;
    const int m = uniform(-l, l);
    const int mf = m + uniform(-2, 2);
    if (std::abs(mf) > lf) continue;
    const Level initial = Level(1, n, l).with_m(m);
    const Level final_state = Level(1, nf, lf).with_m(mf);
    const double closed = quantum::m_resolved_rate(initial, final_state, k).rate;
    const double omega = quantum::transition_omega(n, nf, 1, k);
    const double oracle =
        quantum::angular_average_oracle(quantum::quadrupole_tensor(initial, final_state), omega, k);
    r.max_deviation = std::max(r.max_deviation, relative(closed, oracle));
    ++r.cases;
  }
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult m_sum_suite(const PhysicalConstants& k, int n_max) {
  const auto t0 = Clock::now();
  SuiteResult r{"m-resolved sum vs 3j closed form", 0.0, 1e-10, 0, 0.0};
  for_each_e2_pair(n_max, [&](const Level& i, const Level& f) {
    double sum = 0.0;
    for (int m = -i.l(); m <= i.l(); ++m) {
      for (int mf = -f.l(); mf <= f.l(); ++mf) sum += quantum::m_resolved_rate(i.with_m(m), f.with_m(mf), k).rate;
    }
    sum /= 2 * i.l() + 1;
    r.max_deviation = std::max(r.max_deviation, relative(sum, quantum::qm_rate(i, f, k).rate));
    ++r.cases;
  });
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult m_independence_suite(const PhysicalConstants& k, int n_max) {
  const auto t0 = Clock::now();
  SuiteResult r{"m-independence of the summed rate", 0.0, 1e-10, 0, 0.0};
  for_each_e2_pair(n_max, [&](const Level& i, const Level& f) {
    double lo = INFINITY, hi = -INFINITY;
    for (int m = -i.l(); m <= i.l(); ++m) {
      double sum = 0.0;
      for (int mf = -f.l(); mf <= f.l(); ++mf) sum += quantum::m_resolved_rate(i.with_m(m), f.with_m(mf), k).rate;
      lo = std::min(lo, sum);
      hi = std::max(hi, sum);
    }
    r.max_deviation = std::max(r.max_deviation, relative(lo, hi));
    ++r.cases;
  });
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult lsj_average_suite(const PhysicalConstants& k, int n_max) {
  const auto t0 = Clock::now();
  SuiteResult r{"LSJ degeneracy average vs l-level rate", 0.0, 1e-12, 0, 0.0};
  for_each_e2_pair(n_max, [&](const Level& i, const Level& f) {
    // sum_j (2j+1) sum_j' R(j -> j') / (2 (2l+1))
    double weighted = 0.0;
    for (int tj = 2 * i.l() - 1; tj <= 2 * i.l() + 1; tj += 2) {
      if (tj < 1) continue;
      for (int tjf = 2 * f.l() - 1; tjf <= 2 * f.l() + 1; tjf += 2) {
        if (tjf < 1) continue;
        const auto rate = quantum::qm_rate_lsj(i.with_j(HalfInt::from_twice(tj)),
                                               f.with_j(HalfInt::from_twice(tjf)), k);
        weighted += (tj + 1) * rate.rate;
      }
    }
    weighted /= 2.0 * (2 * i.l() + 1);
    r.max_deviation = std::max(r.max_deviation, relative(weighted, quantum::qm_rate(i, f, k).rate));
    ++r.cases;
  });
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult wigner_3j_orthogonality_suite(int twice_j_max) {
  const auto t0 = Clock::now();
  SuiteResult r{"3j orthogonality (exact)", 0.0, 0.0, 0, 0.0};
  // (2 j3 + 1) sum_{m1 + m2 = M} (j1 j2 j3; m1 m2 -M)(j1 j2 j3'; m1 m2 -M) = delta_{j3 j3'}
  for (int a = 0; a <= twice_j_max; ++a) {
    for (int b = 0; b <= twice_j_max; ++b) {
      for (int c = std::abs(a - b); c <= std::min(a + b, twice_j_max); c += 2) {
        for (int cp = std::abs(a - b); cp <= std::min(a + b, twice_j_max); cp += 2) {
          const auto j1 = HalfInt::from_twice(a), j2 = HalfInt::from_twice(b);
          const auto j3 = HalfInt::from_twice(c), j3p = HalfInt::from_twice(cp);
          const int tm = c % 2;  // one projection per pair keeps the suite quick
          const auto m3 = HalfInt::from_twice(tm);
          std::vector<specfun::Surd> terms;
          for (int m1 = -a; m1 <= a; m1 += 2) {
            const int m2 = tm - m1;
            if (std::abs(m2) > b || (m2 - b) % 2 != 0) continue;
            const auto x = specfun::wigner_3j(j1, j2, j3, HalfInt::from_twice(m1), HalfInt::from_twice(m2), -m3);
            const auto y = specfun::wigner_3j(j1, j2, j3p, HalfInt::from_twice(m1), HalfInt::from_twice(m2), -m3);
            terms.push_back(x.exact() * y.exact());
          }
          specfun::Surd sum = specfun::exact_sum(terms);
          sum.coefficient *= c + 1;
          const specfun::Surd expected = specfun::Surd::rational(c == cp ? 1 : 0);
          if (!(sum == expected)) r.max_deviation = 1.0;
          ++r.cases;
        }
      }
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult wigner_6j_orthogonality_suite(int twice_j_max) {
  const auto t0 = Clock::now();
  SuiteResult r{"6j orthogonality (exact)", 0.0, 0.0, 0, 0.0};
  // sum_x (2x+1)(2e+1) {a b x; c d e}{a b x; c d e'} = delta_{e e'}
  const int J = twice_j_max;
  for (int a = 0; a <= J; ++a)
    for (int b = 0; b <= J; ++b)
      for (int c = 0; c <= J; ++c)
        for (int d = 0; d <= J; ++d)
          for (int e = 0; e <= J; ++e) {
            // e must couple with (a, d) and (c, b)
            if (!specfun::triad(HalfInt::from_twice(a), HalfInt::from_twice(d), HalfInt::from_twice(e)) ||
                !specfun::triad(HalfInt::from_twice(c), HalfInt::from_twice(b), HalfInt::from_twice(e)))
              continue;
            for (int ep = e; ep <= J; ep += 2) {
              if (!specfun::triad(HalfInt::from_twice(a), HalfInt::from_twice(d), HalfInt::from_twice(ep)) ||
                  !specfun::triad(HalfInt::from_twice(c), HalfInt::from_twice(b), HalfInt::from_twice(ep)))
                continue;
              std::vector<specfun::Surd> terms;
              for (int x = 0; x <= 2 * J; ++x) {
                const auto s1 = specfun::wigner_6j(HalfInt::from_twice(a), HalfInt::from_twice(b), HalfInt::from_twice(x),
                                                   HalfInt::from_twice(c), HalfInt::from_twice(d), HalfInt::from_twice(e));
                if (s1.is_zero()) continue;
                const auto s2 = specfun::wigner_6j(HalfInt::from_twice(a), HalfInt::from_twice(b), HalfInt::from_twice(x),
                                                   HalfInt::from_twice(c), HalfInt::from_twice(d), HalfInt::from_twice(ep));
                auto t = s1.exact() * s2.exact();
                t.coefficient *= (x + 1) * (e + 1);
                terms.push_back(t);
              }
              const auto sum = specfun::exact_sum(terms);
              if (!(sum == specfun::Surd::rational(e == ep ? 1 : 0))) r.max_deviation = 1.0;
              ++r.cases;
            }
          }
  r.seconds = seconds_since(t0);
  return r;
}

SuiteResult constants_suite(const PhysicalConstants& k) {
  const auto t0 = Clock::now();
  SuiteResult r{"constants consistency", k.consistency_deviation(), kConstantsConsistencyTolerance, 1, 0.0};
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<SuiteResult> run_selfcheck(const PhysicalConstants& k, const specfun::BesselConfig& cfg) {
  return {constants_suite(k),
          fourier_oracle_suite(40, {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}, cfg),
          angular_oracle_suite(k),
          m_sum_suite(k),
          m_independence_suite(k),
          lsj_average_suite(k),
          wigner_3j_orthogonality_suite(),
          wigner_6j_orthogonality_suite()};
}

}  // namespace hydrorad::verify
