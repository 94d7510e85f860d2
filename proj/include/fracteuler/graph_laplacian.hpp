#pragma once

// Graph Laplacians (nonnegative off-diagonal, zero column sums) and their
// Mittag-Leffler matrix functions: by diagonalisation, by the exponential
// mixture over (-A)^(1/alpha), and by the Post-Widder resolvent limit.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "fracteuler/core.hpp"
#include "fracteuler/mixture_densities.hpp"
#include "fracteuler/special_functions.hpp"

namespace fracteuler {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

struct LaplacianViolation {
  enum class Kind { not_square, off_diagonal_negative, column_sum_nonzero, not_finite };
  Kind kind;
  std::size_t row = 0;  // entry row (off-diagonal) or unused
  std::size_t col = 0;  // entry or column index
  double value = 0.0;   // offending entry or column sum

  [[nodiscard]] std::string describe() const {
    switch (kind) {
      case Kind::not_square:
        return "matrix is not square";
      case Kind::off_diagonal_negative:
        return detail::concat("off-diagonal entry (", row, ", ", col, ") = ", value, " is negative");
      case Kind::column_sum_nonzero:
        return detail::concat("column ", col, " sums to ", value, " instead of 0");
      case Kind::not_finite:
        return detail::concat("entry (", row, ", ", col, ") is not finite");
    }
    return {};
  }
};

class LaplacianError : public DomainError {
 public:
  explicit LaplacianError(std::vector<LaplacianViolation> violations)
      : DomainError(summarise(violations)), violations_(std::move(violations)) {}

  [[nodiscard]] const std::vector<LaplacianViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string summarise(const std::vector<LaplacianViolation>& v) {
    std::string out = "not a graph Laplacian:";
    for (const auto& item : v) out += " " + item.describe() + ";";
    return out;
  }

  std::vector<LaplacianViolation> violations_;
};

/// Complex or defective spectrum: the matrix functions here need real
/// eigenvalues and a well-conditioned eigenbasis.
class SpectrumError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace detail {

inline double inf_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace detail

/// All structural violations (empty means A is a graph Laplacian).
[[nodiscard]] inline std::vector<LaplacianViolation> check_laplacian(const Matrix& a) {
  using Kind = LaplacianViolation::Kind;
  std::vector<LaplacianViolation> out;
  if (a.rows() != a.cols()) {
    out.push_back({Kind::not_square, 0, 0, 0.0});
    return out;
  }
  const auto n = static_cast<std::size_t>(a.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j))) out.push_back({Kind::not_finite, i, j, a(i, j)});
    }
  }
  if (!out.empty()) return out;
  const double threshold = 1e-12 * std::max(detail::inf_norm(a), 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    CompensatedSum column;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j && a(i, j) < 0.0) out.push_back({Kind::off_diagonal_negative, i, j, a(i, j)});
      column.add(a(i, j));
    }
    if (std::abs(column.value()) > threshold) {
      out.push_back({Kind::column_sum_nonzero, 0, j, column.value()});
    }
  }
  return out;
}

/// A validated graph Laplacian.
class GraphLaplacian {
 public:
  explicit GraphLaplacian(Matrix a) : a_(std::move(a)) {
    auto violations = check_laplacian(a_);
    if (!violations.empty()) throw LaplacianError(std::move(violations));
  }

  [[nodiscard]] const Matrix& matrix() const noexcept { return a_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return a_.rows(); }

  /// [[-a, b], [a, -b]].
  [[nodiscard]] static GraphLaplacian two_state(double a, double b) {
    Matrix m(2, 2);
    m << -a, b, a, -b;
    return GraphLaplacian(std::move(m));
  }

 private:
  Matrix a_;
};

[[nodiscard]] inline GraphLaplacian validate_laplacian(const Matrix& a) { return GraphLaplacian(a); }

/// Maximum eigenvector condition number before a matrix counts as defective.
inline constexpr double kMaxEigenvectorCondition = 1e8;

/// Real diagonalisation A = V diag(lambda) V^{-1}.
struct Eigendecomposition {
  Vector eigenvalues;
  Matrix vectors;
  Matrix inverse;
  double condition = 1.0;

  /// V diag(f(lambda_i)) V^{-1}.
  template <class F>
  [[nodiscard]] Matrix apply(F&& f) const {
    Vector mapped(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) mapped(i) = f(eigenvalues(i));
    return vectors * mapped.asDiagonal() * inverse;
  }

  [[nodiscard]] Matrix reconstruct() const { return apply([](double x) { return x; }); }
};

/// Diagonalises a matrix with real spectrum. Eigenvalues within
/// dim * eps * ||M|| of zero are set to exactly zero.
[[nodiscard]] inline Eigendecomposition eigendecompose(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("eigendecomposition needs a square matrix");
  const Eigen::Index n = m.rows();
  const double norm = detail::inf_norm(m);
  const double zero_tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                          std::max(norm, 1.0) * 16.0;
  Eigendecomposition out;
  if (m == m.transpose()) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) throw SpectrumError("symmetric eigensolver failed");
    out.eigenvalues = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    out.inverse = out.vectors.transpose();
    out.condition = 1.0;
  } else {
    Eigen::EigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) throw SpectrumError("eigensolver failed");
    const Eigen::VectorXcd values = solver.eigenvalues();
    const double imag_tol = 1e-10 * std::max(norm, 1.0);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(values(i).imag()) > imag_tol) {
        throw SpectrumError(detail::concat("complex eigenvalue ", values(i).real(), " + ",
                                           values(i).imag(), "i"));
      }
    }
    out.eigenvalues = values.real();
    out.vectors = solver.eigenvectors().real();
    Eigen::PartialPivLU<Matrix> lu(out.vectors);
    out.inverse = lu.inverse();
    out.condition = detail::inf_norm(out.vectors) * detail::inf_norm(out.inverse);
    if (!std::isfinite(out.condition) || out.condition > kMaxEigenvectorCondition) {
      throw SpectrumError(detail::concat("matrix is defective or nearly so (eigenvector condition ",
                                         out.condition, ")"));
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(out.eigenvalues(i)) <= zero_tol) out.eigenvalues(i) = 0.0;
  }
  return out;
}

namespace detail {

inline Eigendecomposition laplacian_spectrum(const GraphLaplacian& a) {
  Eigendecomposition eig = eigendecompose(a.matrix());
  const double tol = 1e-10 * std::max(inf_norm(a.matrix()), 1.0);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues(i) > tol) {
      throw SpectrumError(concat("Laplacian has positive eigenvalue ", eig.eigenvalues(i)));
    }
    eig.eigenvalues(i) = std::min(eig.eigenvalues(i), 0.0);
  }
  return eig;
}

}  // namespace detail

/// (-A)^(1/alpha); alpha = 1 returns -A exactly.
[[nodiscard]] inline Matrix frac_power(const GraphLaplacian& a, double alpha) {
  (void)MlfParams(alpha, 1.0);
  if (alpha == 1.0) return -a.matrix();
  const auto eig = detail::laplacian_spectrum(a);
  return eig.apply([alpha](double lambda) { return std::pow(-lambda, 1.0 / alpha); });
}

/// E_alpha(A t^alpha) = V diag(E_alpha(lambda_i t^alpha)) V^{-1}.
[[nodiscard]] inline Matrix mlf_matrix_eig(const GraphLaplacian& a, double alpha, double t) {
  (void)MlfParams(alpha, 1.0);
  if (!(t >= 0.0)) throw DomainError(detail::concat("time must be nonnegative, got ", t));
  const Eigen::Index n = a.dim();
  if (t == 0.0) return Matrix::Identity(n, n);
  const auto eig = detail::laplacian_spectrum(a);
  return eig.apply([&](double lambda) {
    return lambda == 0.0 ? 1.0 : mlf(MlfParams(alpha, -lambda), Sign::minus, t);
  });
}

/// sum_k w_{-,1}(s_k) ds_k exp(-s_k (-A)^(1/alpha) t), with the exponentials
/// taken through a fresh diagonalisation of (-A)^(1/alpha).
[[nodiscard]] inline Matrix mlf_matrix_mixture(const GraphLaplacian& a, double alpha, double t,
                                               const QuadratureGrid& grid,
                                               Diagnostics* diag = nullptr) {
  (void)MlfParams(alpha, 1.0);
  if (!(t >= 0.0)) throw DomainError(detail::concat("time must be nonnegative, got ", t));
  if (alpha == 1.0) {
    const auto eig = detail::laplacian_spectrum(a);
    return eig.apply([t](double lambda) { return std::exp(lambda * t); });
  }
  const Matrix b = frac_power(a, alpha);
  const auto eig_b = eigendecompose(b);
  const MlfParams unit(alpha, 1.0);
  return eig_b.apply([&](double mu) {
    const double rate = std::max(mu, 0.0) * t;
    auto integral = [&](const QuadratureGrid& g) {
      return trapezoid(g, [&](double x) {
        const double v = detail::branch_cut_v(alpha, 1.0, +1.0, std::exp(alpha * x));
        return rate == 0.0 ? v : v * std::exp(-std::exp(x) * rate);
      });
    };
    return checked_quadrature(grid, integral, diag, "mlf_matrix_mixture");
  });
}

/// (sI - A)^{-1}; SingularError when s is (numerically) an eigenvalue.
[[nodiscard]] inline Matrix resolvent(const Matrix& a, double s) {
  if (a.rows() != a.cols()) throw DomainError("resolvent needs a square matrix");
  const Eigen::Index n = a.rows();
  const Matrix m = s * Matrix::Identity(n, n) - a;
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    throw SingularError(detail::concat("resolvent is singular at s = ", s));
  }
  return lu.inverse();
}

/// (I - (t/n) A)^{-n} by binary powering of one inverse.
[[nodiscard]] inline Matrix resolvent_euler_limit(const GraphLaplacian& a, double t, std::size_t n) {
  if (n < 1) throw DomainError("number of steps must be at least 1");
  const double step = t / static_cast<double>(n);
  if (step <= 0.0) {
    if (t == 0.0) return Matrix::Identity(a.dim(), a.dim());
    throw DomainError("resolvent Euler limit needs t >= 0");
  }
  Matrix base = resolvent(a.matrix(), 1.0 / step) / step;
  Matrix result = Matrix::Identity(a.dim(), a.dim());
  for (std::size_t e = n; e > 0; e >>= 1) {
    if (e & 1U) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

/// Upper bound on the Post-Widder order (cost grows linearly in n).
inline constexpr std::size_t kPostWidderMaxOrder = 4096;

/// Normalised Post-Widder weights p_k, k = 0 .. n+1 (p_0 = 0):
///   (-1)^n s^(n+1) F^(n)(s) / n! = sum_k p_k (I - A s^-alpha)^(-k)
/// for F(s) = s^(alpha-1) (s^alpha - A)^(-1). They are nonnegative and sum to one.
[[nodiscard]] inline std::vector<double> post_widder_weights(double alpha, std::size_t n) {
  (void)MlfParams(alpha, 1.0);
  if (n > kPostWidderMaxOrder) {
    throw DomainError(detail::concat("Post-Widder order must not exceed ", kPostWidderMaxOrder));
  }
  std::vector<double> p(n + 2, 0.0);
  p[1] = 1.0;
  std::vector<double> q(n + 2, 0.0);
  for (std::size_t m = 1; m <= n; ++m) {
    std::fill(q.begin(), q.end(), 0.0);
    const double md = static_cast<double>(m);
    for (std::size_t k = 1; k <= m; ++k) {
      const double ka = static_cast<double>(k) * alpha;
      q[k] += (md - ka) * p[k];
      q[k + 1] += ka * p[k];
    }
    for (std::size_t k = 1; k <= m + 1; ++k) p[k] = q[k] / md;
  }
  return p;
}

/// n-th Post-Widder approximant sum_k p_k (I - (t/n)^alpha A)^(-k).
[[nodiscard]] inline Matrix post_widder_mlf(const GraphLaplacian& a, double alpha, double t,
                                            std::size_t n) {
  if (n < 1) throw DomainError("Post-Widder order must be at least 1");
  if (!(t > 0.0)) throw DomainError(detail::concat("Post-Widder needs t > 0, got ", t));
  const auto p = post_widder_weights(alpha, n);
  const Eigen::Index dim = a.dim();
  const double scale = std::pow(t / static_cast<double>(n), alpha);
  const Matrix m = Matrix::Identity(dim, dim) - scale * a.matrix();
  const Matrix step = Eigen::PartialPivLU<Matrix>(m).inverse();
  Matrix power = step;
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t k = 1; k < p.size(); ++k) {
    sum += p[k] * power;
    power = power * step;
  }
  return sum;
}

/// Scalar version: sum_k p_k (1 + (t/n)^alpha lambda)^(-k) for E_alpha(-lambda t^alpha).
[[nodiscard]] inline double post_widder_scalar(double alpha, double lambda, double t, std::size_t n) {
  if (n < 1) throw DomainError("Post-Widder order must be at least 1");
  const auto p = post_widder_weights(alpha, n);
  const double base = 1.0 / (1.0 + std::pow(t / static_cast<double>(n), alpha) * lambda);
  double power = base;
  CompensatedSum sum;
  for (std::size_t k = 1; k < p.size(); ++k) {
    sum.add(p[k] * power);
    power *= base;
  }
  return sum.value();
}

/// Tolerance for stochasticity checks.
inline constexpr double kStochasticTolerance = 1e-12;

struct StochasticReport {
  double min_entry = 0.0;
  double max_column_deviation = 0.0;
  bool pass = false;
};

/// Minimum entry and largest |column sum - 1|.
[[nodiscard]] inline StochasticReport stochastic_check(const Matrix& m,
                                                       double tol = kStochasticTolerance) {
  if (m.rows() != m.cols()) throw DomainError("stochastic check needs a square matrix");
  StochasticReport report;
  report.min_entry = m.size() == 0 ? 0.0 : m.minCoeff();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    CompensatedSum column;
    for (Eigen::Index i = 0; i < m.rows(); ++i) column.add(m(i, j));
    report.max_column_deviation = std::max(report.max_column_deviation, std::abs(column.value() - 1.0));
  }
  report.pass = report.min_entry >= -tol && report.max_column_deviation <= tol;
  return report;
}

/// A matrix whose columns are probability vectors.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Matrix m, double tol = kStochasticTolerance) : m_(std::move(m)) {
    const auto report = stochastic_check(m_, tol);
    if (!report.pass) {
      throw DomainError(detail::concat("not a stochastic matrix: min entry ", report.min_entry,
                                       ", column-sum deviation ", report.max_column_deviation));
    }
  }
  [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

}  // namespace fracteuler
