#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's numerical routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

// E_alpha(z) by the power series in 100-digit arithmetic.
inline double mlf(double alpha, double z) {
  const Big zb(z);
  Big sum = 0;
  Big zk = 1;
  for (int k = 0; k < 4000; ++k) {
    const Big term = zk / boost::multiprecision::tgamma(Big(alpha) * k + 1);
    sum += term;
    if (k > 10 && abs(term) < Big("1e-40") * (1 + abs(sum))) break;
    zk *= zb;
  }
  return static_cast<double>(sum);
}

// E_{1/2}(z) = exp(z^2) erfc(-z).
inline double mlf_half(double z) { return std::exp(z * z) * std::erfc(-z); }

// exp(M) by scaling and squaring of a truncated Taylor series.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = norm > 0.5 ? static_cast<int>(std::ceil(std::log2(norm / 0.5))) : 0;
  const Eigen::MatrixXd a = m / std::ldexp(1.0, squarings);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * a / k;
    sum += term;
  }
  for (; squarings > 0; --squarings) sum = sum * sum;
  return sum;
}

// Reversible generator: a_ij = k_ij pi_i with k symmetric, so the spectrum is real.
inline Eigen::MatrixXd reversible_laplacian(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.1, 2.0);
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  Eigen::VectorXd pi(dim);
  for (int i = 0; i < dim; ++i) pi(i) = weight(rng);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) k(i, j) = k(j, i) = rate(rng);
  }
  Eigen::MatrixXd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = i == j ? 0.0 : k(i, j) * pi(i);
  }
  for (int j = 0; j < dim; ++j) a(j, j) = -a.col(j).sum();
  return a;
}

struct KsBound {
  double lower;  // exact statistic over the evaluated order statistics
  double upper;  // rigorous bound for the full sample (cdf is monotone)
};

// Kolmogorov-Smirnov distance evaluating the CDF only at every `stride`-th
// order statistic; monotonicity brackets the CDF in between.
inline KsBound ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf,
                            std::size_t stride = 1) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  const double nd = static_cast<double>(n);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  std::vector<double> f(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) f[k] = cdf(samples[idx[k]]);
  KsBound out{0.0, 0.0};
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double i = static_cast<double>(idx[k]);
    out.lower = std::max({out.lower, (i + 1) / nd - f[k], f[k] - i / nd});
  }
  out.upper = out.lower;
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    // order statistics idx[k] .. idx[k+1] have CDF in [f[k], f[k+1]]
    const double hi_rank = static_cast<double>(idx[k + 1]);
    const double lo_rank = static_cast<double>(idx[k]);
    out.upper = std::max({out.upper, hi_rank / nd - f[k], f[k + 1] - (lo_rank + 1) / nd + 1.0 / nd});
  }
  return out;
}

inline double binomial_se(double p, std::size_t n) {
  return std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(n));
}

// (-1)^n s^(n+1) F^(n)(s) / n! at s = n/t for F(s) = s^(alpha-1)/(s^alpha + lambda),
// the n-th Post-Widder approximant of E_alpha(-lambda t^alpha). The derivative
// comes from the Cauchy integral on a circle of radius s/2.
inline double post_widder_cauchy(double alpha, double lambda, double t, int n) {
  using C = std::complex<double>;
  const double s = n / t;
  const double r = s / 2.0;
  const int m = 512;
  C acc = 0.0;
  for (int k = 0; k < m; ++k) {
    const C e = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    const C z = s + r * e;
    const C f = std::pow(z, alpha - 1.0) / (std::pow(z, alpha) + lambda);
    acc += f * std::pow(r * e, -n);
  }
  const double coeff = (acc / static_cast<double>(m)).real();  // F^(n)(s)/n!
  return (n % 2 == 0 ? 1.0 : -1.0) * std::pow(s, n + 1) * coeff;
}

}  // namespace oracle
