#pragma once

// Shared vocabulary: error types, validated parameter records, the
// log-substituted quadrature grid and a small diagnostics sink.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracteuler {

inline constexpr const char* kVersion = "0.1.0";

// -----------------------------------------------------------------------------
// Errors
// -----------------------------------------------------------------------------

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically on top of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration did not converge within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Result would not be representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A linear system or step formula is singular.
class SingularError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class... Parts>
std::string concat(const Parts&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  return os.str();
}

}  // namespace detail

// -----------------------------------------------------------------------------
// Diagnostics
// -----------------------------------------------------------------------------

/// Collects non-fatal warnings (coarse grids, dropped quadrature nodes, ...).
/// Operations accept an optional pointer; passing nullptr skips the extra
/// work some checks need.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  [[nodiscard]] bool empty() const noexcept { return warnings.empty(); }
};

// -----------------------------------------------------------------------------
// Parameters
// -----------------------------------------------------------------------------

enum class Sign { plus, minus };

[[nodiscard]] inline double sign_value(Sign s) noexcept { return s == Sign::plus ? 1.0 : -1.0; }

/// Order and rate of E_alpha(+-lambda t^alpha): 0 < alpha <= 1, lambda > 0.
class MlfParams {
 public:
  MlfParams(double alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw DomainError(detail::concat("order alpha must lie in (0, 1], got ", alpha));
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw DomainError(detail::concat("rate lambda must be positive and finite, got ", lambda));
    }
  }

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }

  /// lambda^(1/alpha), the location of the real pole of the Laplace transform.
  [[nodiscard]] double pole() const noexcept { return std::pow(lambda_, 1.0 / alpha_); }

  friend bool operator==(const MlfParams&, const MlfParams&) = default;

 private:
  double alpha_;
  double lambda_;
};

// -----------------------------------------------------------------------------
// Quadrature
// -----------------------------------------------------------------------------

/// Equally spaced trapezoidal grid in x where s = exp(x). Integrals
/// int_0^inf f(s) ds are evaluated as int v(exp(x)) dx with v(s) = s f(s).
class QuadratureGrid {
 public:
  /// |x| beyond this would overflow exp(x) long before it matters.
  static constexpr double kMaxAbsX = 700.0;

  QuadratureGrid(double x_min, double x_max, std::size_t n_points)
      : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
    if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
      throw DomainError(detail::concat("quadrature bounds must satisfy x_min < x_max, got [", x_min,
                                       ", ", x_max, "]"));
    }
    if (n_points < 2) {
      throw DomainError("quadrature grid needs at least two points");
    }
    if (std::max(std::abs(x_min), std::abs(x_max)) > kMaxAbsX) {
      throw DomainError(detail::concat("quadrature bounds exceed |x| <= ", kMaxAbsX));
    }
  }

  /// x in [-40/alpha, 40/alpha] (clamped to the exp range), 4001 points.
  [[nodiscard]] static QuadratureGrid default_for(double alpha) {
    const double half_width = std::min(40.0 / alpha, kMaxAbsX);
    return {-half_width, half_width, 4001};
  }

  [[nodiscard]] double x_min() const noexcept { return x_min_; }
  [[nodiscard]] double x_max() const noexcept { return x_max_; }
  [[nodiscard]] std::size_t n_points() const noexcept { return n_points_; }
  [[nodiscard]] double spacing() const noexcept {
    return (x_max_ - x_min_) / static_cast<double>(n_points_ - 1);
  }
  [[nodiscard]] double x(std::size_t k) const noexcept {
    return x_min_ + spacing() * static_cast<double>(k);
  }
  [[nodiscard]] double s(std::size_t k) const noexcept { return std::exp(x(k)); }

  /// Trapezoid weight in x (spacing, halved at both ends).
  [[nodiscard]] double weight(std::size_t k) const noexcept {
    const double h = spacing();
    return (k == 0 || k + 1 == n_points_) ? 0.5 * h : h;
  }

  /// Same bounds, spacing halved.
  [[nodiscard]] QuadratureGrid refined() const { return {x_min_, x_max_, 2 * n_points_ - 1}; }

  friend bool operator==(const QuadratureGrid&, const QuadratureGrid&) = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      carry_ += (sum_ - t) + value;
    } else {
      carry_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Trapezoidal value of int v(x) dx over the grid.
template <class Integrand>
[[nodiscard]] double trapezoid(const QuadratureGrid& grid, Integrand&& v) {
  CompensatedSum acc;
  for (std::size_t k = 0; k < grid.n_points(); ++k) {
    acc.add(grid.weight(k) * v(grid.x(k)));
  }
  return acc.value();
}

/// Relative refinement tolerance: doubling the grid may move a value by at
/// most 10 * kGridTolerance * (1 + |value|) before a warning is raised.
inline constexpr double kGridTolerance = 1e-12;

/// Evaluates `integral(grid)` and, when a sink is supplied, compares with the
/// refined grid and records a warning if they disagree.
template <class Integral>
[[nodiscard]] double checked_quadrature(const QuadratureGrid& grid, Integral&& integral,
                                        Diagnostics* diag, const char* what) {
  const double value = integral(grid);
  if (diag != nullptr) {
    const double fine = integral(grid.refined());
    if (std::abs(fine - value) > 10.0 * kGridTolerance * (1.0 + std::abs(value))) {
      diag->warn(detail::concat(what, ": grid too coarse, refinement moved the value by ",
                                std::abs(fine - value)));
    }
  }
  return value;
}

}  // namespace fracteuler
