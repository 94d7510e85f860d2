#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fracteuler/graph_laplacian.hpp"
#include "oracles.hpp"

using namespace fracteuler;

namespace {

Matrix chain3() {
  Matrix a(3, 3);
  a << -1.0, 0.5, 0.0,
        1.0, -1.0, 1.0,
        0.0, 0.5, -1.0;
  return a;
}

}  // namespace

TEST(Laplacian, AcceptsGeneratorsAndReportsViolations) {
  EXPECT_NO_THROW(GraphLaplacian{chain3()});
  Matrix bad = chain3();
  bad(0, 1) = -0.5;
  bad(1, 1) = 0.0;
  try {
    GraphLaplacian g(bad);
    FAIL() << "expected LaplacianError";
  } catch (const LaplacianError& e) {
    bool negative = false;
    for (const auto& v : e.violations()) negative |= v.kind == LaplacianViolation::Kind::off_diagonal_negative;
    EXPECT_TRUE(negative);
  }
  EXPECT_THROW(GraphLaplacian(Matrix::Zero(2, 3)), LaplacianError);
  Matrix sums = chain3();
  sums(0, 0) = -2.0;
  EXPECT_EQ(check_laplacian(sums).size(), 1U);
}

TEST(Laplacian, TwoState) {
  const auto g = GraphLaplacian::two_state(2.0, 3.0);
  Matrix expected(2, 2);
  expected << -2.0, 3.0, 2.0, -3.0;
  EXPECT_EQ(g.matrix(), expected);
}

TEST(FracPower, TwoStateClosedForm) {
  // -A = (a + b) P with P a projector, so (-A)^(1/alpha) = (a + b)^(1/alpha) P.
  for (double a : {0.3, 1.0, 2.5}) {
    for (double b : {0.5, 1.0, 4.0}) {
      const auto g = GraphLaplacian::two_state(a, b);
      for (double alpha : {0.3, 0.5, 0.9}) {
        const Matrix power = frac_power(g, alpha);
        const Matrix expected = std::pow(a + b, 1.0 / alpha) * (-g.matrix()) / (a + b);
        EXPECT_LT((power - expected).cwiseAbs().maxCoeff(), 1e-12 * expected.cwiseAbs().maxCoeff());
        EXPECT_TRUE(check_laplacian(-power).empty());
      }
    }
  }
  const auto g = GraphLaplacian::two_state(1.0, 1.0);
  Matrix two(2, 2);
  two << 2, -2, -2, 2;
  EXPECT_LT((frac_power(g, 0.5) - two).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((frac_power(g, 1.0) + g.matrix()).cwiseAbs().maxCoeff(), 0.0 + 1e-15);
}

TEST(MlfMatrix, TwoStateClosedForm) {
  const double a = 0.7;
  const double b = 1.9;
  const auto g = GraphLaplacian::two_state(a, b);
  const double alpha = 0.6;
  const double t = 1.3;
  const double e = oracle::mlf(alpha, -(a + b) * std::pow(t, alpha));
  // stationary part plus decaying part
  Matrix pi(2, 2);
  pi << b, b, a, a;
  pi /= a + b;
  const Matrix expected = pi + e * (Matrix::Identity(2, 2) - pi);
  EXPECT_LT((mlf_matrix_eig(g, alpha, t) - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((mlf_matrix_mixture(g, alpha, t, QuadratureGrid::default_for(alpha)) - expected).cwiseAbs().maxCoeff(),
            1e-8);
}

TEST(MlfMatrix, AlphaOneIsMatrixExponential) {
  std::mt19937_64 rng(1);
  for (int dim = 2; dim <= 6; ++dim) {
    const GraphLaplacian g(oracle::reversible_laplacian(dim, rng));
    const Matrix ref = oracle::expm(g.matrix() * 0.8);
    EXPECT_LT((mlf_matrix_eig(g, 1.0, 0.8) - ref).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_LT((mlf_matrix_mixture(g, 1.0, 0.8, QuadratureGrid::default_for(1.0)) - ref).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_LT((resolvent_euler_limit(g, 0.8, 1 << 16) - ref).cwiseAbs().maxCoeff(), 1e-4);
  }
}

TEST(MlfMatrix, StochasticForRandomReversibleGenerators) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const GraphLaplacian g(oracle::reversible_laplacian(2 + trial % 6, rng));
    for (double t : {0.1, 1.0, 10.0}) {
      const Matrix e = mlf_matrix_eig(g, 0.7, t);
      EXPECT_TRUE(stochastic_check(e, 1e-10).pass) << trial << " " << t;
    }
  }
  EXPECT_EQ(mlf_matrix_eig(GraphLaplacian::two_state(1, 2), 0.5, 0.0), Matrix::Identity(2, 2));
}

TEST(MlfMatrix, ComplexSpectrumIsRejected) {
  // directed 3-cycle has complex eigenvalues
  Matrix a(3, 3);
  a << -1, 0, 1,
        1, -1, 0,
        0, 1, -1;
  EXPECT_THROW((void)mlf_matrix_eig(GraphLaplacian(a), 0.5, 1.0), SpectrumError);
}

TEST(Eigendecomposition, Reconstructs) {
  std::mt19937_64 rng(3);
  const Matrix a = oracle::reversible_laplacian(5, rng);
  const auto eig = eigendecompose(a);
  EXPECT_LT((eig.reconstruct() - a).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PostWidder, WeightsNonnegativeAndNormalised) {
  for (double alpha : {0.3, 0.7, 1.0}) {
    for (std::size_t n : {1U, 5U, 64U}) {
      const auto p = post_widder_weights(alpha, n);
      double sum = 0.0;
      for (double w : p) {
        EXPECT_GE(w, 0.0);
        sum += w;
      }
      EXPECT_NEAR(sum, 1.0, 1e-13);
    }
  }
  EXPECT_THROW((void)post_widder_weights(0.5, kPostWidderMaxOrder + 1), DomainError);
}

TEST(PostWidder, ScalarMatchesDerivativesOfTransform) {
  for (double alpha : {0.4, 0.8}) {
    for (int n = 1; n <= 16; ++n) {
      const double ref = oracle::post_widder_cauchy(alpha, 1.2, 0.9, n);
      EXPECT_NEAR(post_widder_scalar(alpha, 1.2, 0.9, n), ref, 1e-9) << alpha << " " << n;
    }
  }
}

TEST(PostWidder, MatrixApproximantConverges) {
  const auto g = GraphLaplacian::two_state(1.0, 2.0);
  const Matrix exact = mlf_matrix_eig(g, 0.5, 1.0);
  const Matrix coarse = post_widder_mlf(g, 0.5, 1.0, 16);
  const Matrix fine = post_widder_mlf(g, 0.5, 1.0, 1024);
  EXPECT_GE(coarse.minCoeff(), 0.0);
  EXPECT_LT((coarse - exact).cwiseAbs().maxCoeff(), 0.05);
  EXPECT_LT((fine - exact).cwiseAbs().maxCoeff(), (coarse - exact).cwiseAbs().maxCoeff());
  EXPECT_TRUE(stochastic_check(coarse, 1e-10).pass);
}

TEST(Resolvent, InverseAndSingularity) {
  const Matrix a = chain3();
  const Matrix r = resolvent(a, 2.0);
  EXPECT_LT(((2.0 * Matrix::Identity(3, 3) - a) * r - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW((void)resolvent(a, 0.0), SingularError);
}

TEST(Stochastic, CheckAndWrapper) {
  Matrix m(2, 2);
  m << 0.3, 0.6, 0.7, 0.4;
  EXPECT_TRUE(stochastic_check(m).pass);
  m(0, 0) = -0.1;
  m(1, 0) = 1.1;
  const auto report = stochastic_check(m);
  EXPECT_FALSE(report.pass);
  EXPECT_DOUBLE_EQ(report.min_entry, -0.1);
  EXPECT_THROW(StochasticMatrix{m}, DomainError);
}
