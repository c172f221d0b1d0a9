#include <gtest/gtest.h>

#include "hydrorad/verify/selfcheck.hpp"

using namespace hydrorad;
using namespace hydrorad::verify;

TEST(Selfcheck, ConstantsProfilesAreConsistent) {
  for (const auto& name : constants_profile_names()) {
    EXPECT_TRUE(constants_suite(constants_profile(name)).passed()) << name;
  }
  EXPECT_THROW(constants_profile("codata1986"), std::invalid_argument);
}

TEST(Selfcheck, PerturbedConstantFails) {
  PhysicalConstants k = codata2018();
  k.bohr_radius *= 1.0 + 1e-9;
  EXPECT_FALSE(constants_suite(k).passed());
  k = codata2018();
  k.alpha = -k.alpha;
  EXPECT_FALSE(constants_suite(k).passed());
}

TEST(Selfcheck, FastSuitesPass) {
  const auto& k = codata2018();
  for (const auto& r : {m_sum_suite(k, 6), m_independence_suite(k, 6), lsj_average_suite(k, 6),
                        wigner_3j_orthogonality_suite(6), wigner_6j_orthogonality_suite(4),
                        fourier_oracle_suite(10, {0.2, 0.95}), angular_oracle_suite(k, 10, 5)}) {
    EXPECT_TRUE(r.passed()) << r.name << " " << r.max_deviation;
    EXPECT_GT(r.cases, 0) << r.name;
    EXPECT_GE(r.seconds, 0.0);
  }
}
