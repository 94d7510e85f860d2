#pragma once

// Generalised master equation dp/dt = int K(t-u) A p(u) du, with the Markov
// (delta) and Caputo (Mittag-Leffler) kernels solved deterministically.
// Other kernels are only reachable through the CTRW simulator.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "fracteuler/core.hpp"
#include "fracteuler/euler_schemes.hpp"
#include "fracteuler/graph_laplacian.hpp"

namespace fracteuler {

/// K_hat(j, s) = coefficient * s^exponent.
struct KernelDescriptor {
  double coefficient = 1.0;
  double exponent = 0.0;

  [[nodiscard]] double evaluate(double s) const { return coefficient * std::pow(s, exponent); }
  friend bool operator==(const KernelDescriptor&, const KernelDescriptor&) = default;
};

/// Memory function of Mittag-Leffler waiting times in a state with rate
/// lambda_jj: lambda_jj s^(1-alpha). Constant (Dirac kernel) at alpha = 1.
[[nodiscard]] inline KernelDescriptor memory_kernel_mlf(double alpha, double lambda_jj) {
  const MlfParams params(alpha, lambda_jj);
  return {params.lambda(), 1.0 - params.alpha()};
}

/// psi_hat / phi_hat for Mittag-Leffler waiting times, evaluated directly
/// from the Laplace transforms of the density and survival function.
[[nodiscard]] inline double memory_kernel_from_transforms(double alpha, double lambda, double s) {
  const double phi_hat = std::pow(s, alpha - 1.0) / (lambda + std::pow(s, alpha));
  const double psi_hat = lambda / (lambda + std::pow(s, alpha));
  return psi_hat / phi_hat;
}

class MemoryKernel {
 public:
  enum class Kind { delta, caputo, custom };

  [[nodiscard]] static MemoryKernel delta() { return MemoryKernel(Kind::delta, 1.0, {}); }
  [[nodiscard]] static MemoryKernel caputo(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw DomainError(detail::concat("Caputo kernel needs 0 < alpha < 1, got ", alpha));
    }
    return MemoryKernel(Kind::caputo, alpha, {});
  }
  /// Separable kernel given by its Laplace transform per unit rate.
  [[nodiscard]] static MemoryKernel custom(std::function<double(double)> transform) {
    if (!transform) throw DomainError("custom kernel needs a transform");
    return MemoryKernel(Kind::custom, 1.0, std::move(transform));
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }

  /// K_hat(j, s) for a state with scale g(j) = |a_jj|.
  [[nodiscard]] double transform(double scale, double s) const {
    switch (kind_) {
      case Kind::delta:
        return scale;
      case Kind::caputo:
        return memory_kernel_mlf(alpha_, scale).evaluate(s);
      case Kind::custom:
        return scale * transform_(s);
    }
    return 0.0;
  }

 private:
  MemoryKernel(Kind kind, double alpha, std::function<double(double)> transform)
      : kind_(kind), alpha_(alpha), transform_(std::move(transform)) {}

  Kind kind_;
  double alpha_;
  std::function<double(double)> transform_;
};

/// Tolerance on the total mass of a probability vector.
inline constexpr double kMassTolerance = 1e-12;
/// Negative entries above this are floating-point noise and get clamped.
inline constexpr double kClampTolerance = 1e-10;

class ProbabilityVector {
 public:
  explicit ProbabilityVector(Vector p) : p_(std::move(p)) {
    if (p_.size() == 0) throw DomainError("probability vector is empty");
    for (Eigen::Index i = 0; i < p_.size(); ++i) {
      if (!(p_(i) >= 0.0)) {
        throw DomainError(detail::concat("probability entry ", i, " = ", p_(i), " is negative"));
      }
    }
    if (std::abs(p_.sum() - 1.0) > kMassTolerance) {
      throw DomainError(detail::concat("probabilities sum to ", p_.sum(), " instead of 1"));
    }
  }

  /// Clamps entries in [-1e-10, 0) to zero and renormalises; larger
  /// violations mean the solver failed and raise ConvergenceError.
  [[nodiscard]] static ProbabilityVector from_solver(Vector raw, Diagnostics* diag = nullptr) {
    const double most_negative = raw.size() == 0 ? 0.0 : raw.minCoeff();
    if (!std::isfinite(raw.sum())) throw ConvergenceError("solver produced non-finite probabilities");
    if (most_negative < -kClampTolerance) {
      throw ConvergenceError(detail::concat("solver produced probability ", most_negative,
                                            " below the clamp tolerance"));
    }
    if (most_negative < 0.0 && diag != nullptr) {
      diag->warn(detail::concat("clamped negative probability ", most_negative, " to zero"));
    }
    raw = raw.cwiseMax(0.0);
    const double mass = raw.sum();
    if (!(mass > 0.0)) throw ConvergenceError("solver produced zero total probability");
    if (std::abs(mass - 1.0) > kClampTolerance && diag != nullptr) {
      diag->warn(detail::concat("renormalised total probability ", mass));
    }
    return ProbabilityVector(raw / mass);
  }

  [[nodiscard]] const Vector& values() const noexcept { return p_; }
  [[nodiscard]] Eigen::Index size() const noexcept { return p_.size(); }
  [[nodiscard]] double operator[](Eigen::Index i) const { return p_(i); }

  /// Point mass at state j.
  [[nodiscard]] static ProbabilityVector unit(Eigen::Index dim, Eigen::Index j) {
    if (j < 0 || j >= dim) throw DomainError("unit probability vector index out of range");
    Vector p = Vector::Zero(dim);
    p(j) = 1.0;
    return ProbabilityVector(std::move(p));
  }

 private:
  Vector p_;
};

namespace detail {

inline void require_matching(const GraphLaplacian& a, const ProbabilityVector& p0) {
  if (a.dim() != p0.size()) {
    throw DomainError(concat("dimension mismatch: Laplacian is ", a.dim(), " but p0 has ", p0.size(),
                             " entries"));
  }
}

}  // namespace detail

/// p(t) = E_alpha(A t^alpha) p0 for each requested time.
[[nodiscard]] inline std::vector<ProbabilityVector> solve_fractional_master_mlf(
    const GraphLaplacian& a, double alpha, const ProbabilityVector& p0,
    const std::vector<double>& times, Diagnostics* diag = nullptr) {
  detail::require_matching(a, p0);
  std::vector<ProbabilityVector> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back(ProbabilityVector::from_solver(mlf_matrix_eig(a, alpha, t) * p0.values(), diag));
  }
  return out;
}

/// Raw iterates of the explicit Caputo recursion with A in place of -lambda:
///   y_j = (I + h^alpha Gamma(1-alpha) A) y_{j-1} + sum_{k=2}^{j} (y_{j-k} - y_{j-k+1}) / k^alpha.
[[nodiscard]] inline Vector fractional_master_timestep_raw(const Matrix& a, double alpha,
                                                           const Vector& p0, double t,
                                                           std::size_t n) {
  detail::require_fractional_order(alpha);
  detail::require_steps(n);
  if (!(t > 0.0)) throw DomainError(detail::concat("time must be positive, got ", t));
  const double h = t / static_cast<double>(n);
  const Eigen::Index dim = a.rows();
  const Matrix step = Matrix::Identity(dim, dim) + std::pow(h, alpha) * std::tgamma(1.0 - alpha) * a;

  std::vector<double> inv_power(n + 1, 0.0);
  for (std::size_t k = 2; k <= n; ++k) inv_power[k] = std::pow(static_cast<double>(k), -alpha);

  std::vector<Vector> y(n + 1);
  y[0] = p0;
  // Differences d_m = y_m - y_{m+1}, so the memory term is sum_k d_{j-k} / k^alpha.
  std::vector<Vector> diff(n);
  for (std::size_t j = 1; j <= n; ++j) {
    Vector next = step * y[j - 1];
    for (Eigen::Index i = 0; i < dim; ++i) {
      CompensatedSum memory;
      for (std::size_t k = 2; k <= j; ++k) memory.add(diff[j - k](i) * inv_power[k]);
      next(i) += memory.value();
    }
    y[j] = std::move(next);
    diff[j - 1] = y[j - 1] - y[j];
  }
  return y[n];
}

[[nodiscard]] inline ProbabilityVector solve_fractional_master_timestep(
    const GraphLaplacian& a, double alpha, const ProbabilityVector& p0, double t, std::size_t n,
    Diagnostics* diag = nullptr) {
  detail::require_matching(a, p0);
  return ProbabilityVector::from_solver(
      fractional_master_timestep_raw(a.matrix(), alpha, p0.values(), t, n), diag);
}

/// exp(t A) p0 for a generator A (nonnegative off-diagonal, zero column
/// sums) by uniformisation: every term of the series is nonnegative.
[[nodiscard]] inline Vector expm_action(const SparseMatrix& a, const Vector& p0, double t,
                                       double tol = 1e-14) {
  if (a.rows() != a.cols() || a.rows() != p0.size()) {
    throw DomainError("expm_action: dimension mismatch");
  }
  if (!(t >= 0.0)) throw DomainError(detail::concat("time must be nonnegative, got ", t));
  double rate = 0.0;
  for (Eigen::Index j = 0; j < a.outerSize(); ++j) {
    for (SparseMatrix::InnerIterator it(a, j); it; ++it) {
      if (it.row() == it.col()) rate = std::max(rate, -it.value());
    }
  }
  if (t == 0.0 || rate == 0.0) return p0;
  const double lt = rate * t;
  // Poisson(lt) weights, summed until the remaining tail is below tol.
  Vector term = p0;
  Vector result = Vector::Zero(p0.size());
  double cumulative = 0.0;
  const auto cap = static_cast<std::size_t>(lt + 20.0 * std::sqrt(lt) + 100.0);
  for (std::size_t k = 0; k <= cap; ++k) {
    const double log_weight = -lt + static_cast<double>(k) * std::log(lt) - std::lgamma(static_cast<double>(k) + 1.0);
    const double weight = std::exp(log_weight);
    result += weight * term;
    cumulative += weight;
    if (static_cast<double>(k) > lt && 1.0 - cumulative < tol) break;
    term = term + (a * term) / rate;
  }
  return result;
}

[[nodiscard]] inline Vector expm_action(const Matrix& a, const Vector& p0, double t,
                                       double tol = 1e-14) {
  return expm_action(SparseMatrix(a.sparseView()), p0, t, tol);
}

/// Implicit Grunwald-Letnikov solver for D^alpha p = A p:
///   (I - h^alpha A) y_m = y_0 + h^alpha A sum_{j<m} w_{m-j} y_j.
/// Works with sparse generators of any size; cost O(n^2 dim).
[[nodiscard]] inline Vector solve_fractional_master_gl(const SparseMatrix& a, double alpha,
                                                       const Vector& p0, double t, std::size_t n) {
  detail::require_fractional_order(alpha);
  detail::require_steps(n);
  if (!(t > 0.0)) throw DomainError(detail::concat("time must be positive, got ", t));
  const double h_alpha = std::pow(t / static_cast<double>(n), alpha);
  const Eigen::Index dim = a.rows();
  SparseMatrix identity(dim, dim);
  identity.setIdentity();
  const SparseMatrix system = identity - h_alpha * a;
  Eigen::SparseLU<SparseMatrix> lu;
  lu.compute(system);
  if (lu.info() != Eigen::Success) throw SingularError("Grunwald-Letnikov system is singular");
  const std::vector<double> w = gl_weights(alpha, n);

  std::vector<Vector> y;
  y.reserve(n + 1);
  y.push_back(p0);
  for (std::size_t m = 1; m <= n; ++m) {
    Vector history = Vector::Zero(dim);
    for (std::size_t j = 0; j < m; ++j) history += w[m - j] * y[j];
    const Vector rhs = p0 + h_alpha * (a * history);
    y.push_back(lu.solve(rhs));
  }
  return y[n];
}

/// Solves the master equation for the delta (exp(At)) or Caputo kernel.
[[nodiscard]] inline std::vector<ProbabilityVector> solve_master(const MemoryKernel& kernel,
                                                                 const GraphLaplacian& a,
                                                                 const ProbabilityVector& p0,
                                                                 const std::vector<double>& times,
                                                                 Diagnostics* diag = nullptr) {
  detail::require_matching(a, p0);
  switch (kernel.kind()) {
    case MemoryKernel::Kind::delta: {
      const SparseMatrix sparse = a.matrix().sparseView();
      std::vector<ProbabilityVector> out;
      out.reserve(times.size());
      for (double t : times) out.push_back(ProbabilityVector::from_solver(expm_action(sparse, p0.values(), t), diag));
      return out;
    }
    case MemoryKernel::Kind::caputo:
      return solve_fractional_master_mlf(a, kernel.alpha(), p0, times, diag);
    case MemoryKernel::Kind::custom:
      break;
  }
  throw DomainError("custom memory kernels are only supported through the CTRW simulator");
}

}  // namespace fracteuler
