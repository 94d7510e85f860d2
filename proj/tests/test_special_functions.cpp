#include <gtest/gtest.h>

#include <cmath>

#include "fracteuler/special_functions.hpp"
#include "oracles.hpp"

using namespace fracteuler;

TEST(MlfSeries, MatchesHighPrecisionOracle) {
  for (double alpha : {0.3, 0.5, 0.7, 0.9, 1.0}) {
    for (double z : {-4.0, -1.5, -0.2, 0.0, 0.3, 1.0, 3.0, 5.0}) {
      const double ref = oracle::mlf(alpha, z);
      EXPECT_NEAR(mlf_series(alpha, z), ref, 1e-11 * std::max(1.0, std::abs(ref)))
          << "alpha=" << alpha << " z=" << z;
    }
  }
}

TEST(MlfSeries, AlphaOneIsExponential) {
  for (double z : {-3.0, -0.5, 0.7, 2.5}) EXPECT_NEAR(mlf_series(1.0, z), std::exp(z), 1e-12 * std::exp(z));
}

TEST(MlfSeries, HalfOrderMatchesErfcForm) {
  for (double z : {-3.0, -1.0, -0.25, 0.5, 1.0, 2.0}) {
    const double ref = oracle::mlf_half(z);
    EXPECT_NEAR(mlf_series(0.5, z), ref, 1e-12 * std::max(1.0, ref));
  }
}

TEST(MlfSeries, LargeNegativeArgumentFailsLoudly) {
  EXPECT_THROW((void)mlf_series(0.5, -1e4), Error);
}

TEST(MlfTwoParam, ReducesToKnownForms) {
  for (double z : {-2.0, 0.5, 1.5}) {
    EXPECT_NEAR(mlf_two_param(0.6, 1.0, z), mlf_series(0.6, z), 1e-12);
    EXPECT_NEAR(mlf_two_param(1.0, 2.0, z), std::expm1(z) / z, 1e-12);
  }
}

TEST(MlfMixture, DecayAgreesWithSeries) {
  for (double alpha : {0.3, 0.5, 0.7, 0.9}) {
    for (double lambda : {0.5, 2.0}) {
      for (double t : {0.1, 1.0, 3.0}) {
        const MlfParams p(alpha, lambda);
        const double ref = oracle::mlf(alpha, -lambda * std::pow(t, alpha));
        EXPECT_NEAR(mlf_negative_mixture(p, t, detail::dispatcher_grid(alpha)), ref, 1e-8)
            << alpha << " " << lambda << " " << t;
      }
    }
  }
}

TEST(MlfBranchCut, GrowthAgreesWithSeries) {
  for (double alpha : {0.3, 0.5, 0.7, 0.9}) {
    for (double t : {0.1, 1.0, 2.0}) {
      const MlfParams p(alpha, 1.0);
      const double ref = oracle::mlf(alpha, std::pow(t, alpha));
      EXPECT_NEAR(mlf_positive_branchcut(p, t, detail::dispatcher_grid(alpha)), ref, 1e-8 * ref)
          << alpha << " " << t;
    }
  }
}

TEST(MlfDispatcher, MatchesOracleAcrossRegimes) {
  for (double alpha : {0.25, 0.5, 0.8, 0.95, 1.0}) {
    for (double t : {0.0, 0.01, 0.5, 2.0, 10.0}) {
      const MlfParams p(alpha, 1.0);
      const double z = std::pow(t, alpha);
      const double down = oracle::mlf(alpha, -z);
      const double up = oracle::mlf(alpha, z);
      EXPECT_NEAR(mlf(p, Sign::minus, t), down, 1e-8) << alpha << " " << t;
      EXPECT_NEAR(mlf(p, Sign::plus, t), up, 1e-8 * up) << alpha << " " << t;
    }
  }
}

TEST(MlfDispatcher, LongTimeDecayIsPositiveAndMonotone) {
  const MlfParams p(0.6, 1.0);
  double previous = 1.0;
  for (double t : {1.0, 10.0, 100.0, 1e3, 1e4}) {
    const double v = mlf(p, Sign::minus, t);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, previous);
    previous = v;
  }
  // power-law tail t^-alpha / Gamma(1 - alpha)
  const double t = 1e4;
  EXPECT_NEAR(mlf(p, Sign::minus, t) * std::pow(t, 0.6) * std::tgamma(0.4), 1.0, 2e-2);
}

TEST(MlfParams, RejectsInvalidInput) {
  EXPECT_THROW(MlfParams(0.0, 1.0), DomainError);
  EXPECT_THROW(MlfParams(1.2, 1.0), DomainError);
  EXPECT_THROW(MlfParams(0.5, 0.0), DomainError);
  EXPECT_THROW(MlfParams(0.5, -1.0), DomainError);
  EXPECT_THROW((void)mlf(MlfParams(0.5, 1.0), Sign::minus, -1.0), DomainError);
  EXPECT_DOUBLE_EQ(MlfParams(0.5, 4.0).pole(), 16.0);
}
