#pragma once

// Scalar Mittag-Leffler functions: power series (with automatic extended
// precision when the alternating series cancels), the exponential-mixture
// representation for negative arguments, the pole-plus-branch-cut
// representation for positive arguments, and a dispatcher.

#include <cmath>
#include <cstddef>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

#include "fracteuler/core.hpp"

namespace fracteuler {

/// Maximum number of series terms before giving up.
inline constexpr std::size_t kSeriesTermCap = 2000;
/// Default truncation tolerance for the power series.
inline constexpr double kSeriesTolerance = 1e-12;
/// |lambda t^alpha| at or below which the dispatcher prefers the series.
inline constexpr double kSeriesSwitch = 5.0;

/// Gamma function; throws PoleError at 0, -1, -2, ...
[[nodiscard]] inline double gamma_fn(double z) {
  if (z <= 0.0 && z == std::floor(z)) {
    throw PoleError(detail::concat("Gamma has a pole at ", z));
  }
  return std::tgamma(z);
}

namespace detail {

struct SeriesPlan {
  std::size_t terms = 0;      // number of terms to sum (k = 0 .. terms-1)
  double max_log_term = -std::numeric_limits<double>::infinity();
};

// Locates the truncation point in log space so the summation precision can
// be chosen before any cancellation happens.
inline SeriesPlan plan_series(double alpha, double beta, double z, double tol) {
  SeriesPlan plan;
  if (z == 0.0) {
    plan.terms = 1;
    plan.max_log_term = -std::lgamma(beta);
    return plan;
  }
  const double log_abs_z = std::log(std::abs(z));
  const double log_tol = std::log(tol);
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kSeriesTermCap; ++k) {
    const double log_term =
        static_cast<double>(k) * log_abs_z - std::lgamma(alpha * static_cast<double>(k) + beta);
    plan.max_log_term = std::max(plan.max_log_term, log_term);
    const bool decreasing = log_term < previous;
    // Absolute threshold relative to the largest term seen: for a
    // non-cancelling sum this is the tol*(1+|sum|) rule; with cancellation
    // the final sum is O(1) so tol is the right scale anyway.
    const double scale = z > 0.0 ? std::max(0.0, plan.max_log_term) : 0.0;
    if (k > 0 && decreasing && log_term < log_tol + scale) {
      plan.terms = k + 1;
      return plan;
    }
    previous = log_term;
  }
  throw ConvergenceError(concat("Mittag-Leffler series did not converge within ", kSeriesTermCap,
                                " terms (alpha=", alpha, ", z=", z, ")"));
}

template <class Real>
double sum_series(double alpha, double beta, double z, std::size_t terms) {
  using boost::math::tgamma;
  const Real a(alpha);
  const Real b(beta);
  const Real zz(z);
  Real power(1);
  Real sum(0);
  for (std::size_t k = 0; k < terms; ++k) {
    sum += power / tgamma(a * Real(static_cast<double>(k)) + b);
    power *= zz;
  }
  return static_cast<double>(sum);
}

inline double sum_series_double(double alpha, double beta, double z, std::size_t terms) {
  CompensatedSum sum;
  const double log_abs_z = z == 0.0 ? 0.0 : std::log(std::abs(z));
  for (std::size_t k = 0; k < terms; ++k) {
    if (k > 0 && z == 0.0) break;
    const double kd = static_cast<double>(k);
    const double magnitude = std::exp(kd * log_abs_z - std::lgamma(alpha * kd + beta));
    sum.add((z < 0.0 && (k % 2 == 1)) ? -magnitude : magnitude);
  }
  return sum.value();
}

inline double generalized_series(double alpha, double beta, double z, double tol) {
  if (!(alpha > 0.0)) {
    throw DomainError(concat("series order must be positive, got ", alpha));
  }
  if (!(beta > 0.0)) {
    throw DomainError(concat("series parameter beta must be positive, got ", beta));
  }
  if (!(tol > 0.0)) {
    throw DomainError(concat("series tolerance must be positive, got ", tol));
  }
  if (!std::isfinite(z)) {
    throw DomainError("series argument must be finite");
  }
  const SeriesPlan plan = plan_series(alpha, beta, z, tol);
  constexpr double kLn10 = 2.302585092994046;
  const double lost_digits = plan.max_log_term / kLn10;
  if (z >= 0.0) {
    if (plan.max_log_term > 700.0) {
      throw OverflowError(concat("Mittag-Leffler series overflows double at z=", z));
    }
    return sum_series_double(alpha, beta, z, plan.terms);
  }
  // Alternating series: working precision must absorb the largest term.
  if (lost_digits <= 3.0) {
    return sum_series_double(alpha, beta, z, plan.terms);
  }
  if (lost_digits <= 15.0) {
    return sum_series<boost::multiprecision::float128>(alpha, beta, z, plan.terms);
  }
  if (lost_digits <= 80.0) {
    return sum_series<boost::multiprecision::cpp_bin_float_100>(alpha, beta, z, plan.terms);
  }
  throw ConvergenceError(concat("Mittag-Leffler series cancellation (", lost_digits,
                                " digits) exceeds extended precision at z=", z));
}

// v(s) = s * w(s) written in r = s^alpha so that it stays finite for large s.
inline double branch_cut_v(double alpha, double lambda, double cos_term_sign, double r) {
  const double sin_a = std::sin(alpha * std::numbers::pi);
  const double cos_a = std::cos(alpha * std::numbers::pi);
  const double denominator =
      r >= 1.0 ? r + cos_term_sign * 2.0 * lambda * cos_a + lambda * lambda / r
               : (r * r + cos_term_sign * 2.0 * lambda * r * cos_a + lambda * lambda) / r;
  return lambda * sin_a / std::numbers::pi / denominator;
}

}  // namespace detail

/// One-parameter series sum_k z^k / Gamma(alpha k + 1).
[[nodiscard]] inline double mlf_series(double alpha, double z, double tol = kSeriesTolerance) {
  return detail::generalized_series(alpha, 1.0, z, tol);
}

/// Two-parameter series sum_k z^k / Gamma(alpha k + beta).
[[nodiscard]] inline double mlf_two_param(double alpha, double beta, double z,
                                          double tol = kSeriesTolerance) {
  return detail::generalized_series(alpha, beta, z, tol);
}

/// E_alpha(-lambda t^alpha) as the exponential mixture int w_-(s) exp(-s t) ds.
[[nodiscard]] inline double mlf_negative_mixture(const MlfParams& params, double t,
                                                 const QuadratureGrid& grid,
                                                 Diagnostics* diag = nullptr) {
  if (!(t >= 0.0)) throw DomainError(detail::concat("time must be nonnegative, got ", t));
  if (params.alpha() >= 1.0) {
    throw DomainError("mixture representation requires alpha < 1");
  }
  const double alpha = params.alpha();
  const double lambda = params.lambda();
  auto integral = [&](const QuadratureGrid& g) {
    return trapezoid(g, [&](double x) {
      const double v = detail::branch_cut_v(alpha, lambda, +1.0, std::exp(alpha * x));
      return t == 0.0 ? v : v * std::exp(-std::exp(x) * t);
    });
  };
  return checked_quadrature(grid, integral, diag, "mlf_negative_mixture");
}

/// Branch-cut integral int w_+(s) exp(-s t) ds (without the pole term).
[[nodiscard]] inline double branch_cut_integral(const MlfParams& params, double t,
                                                const QuadratureGrid& grid,
                                                Diagnostics* diag = nullptr) {
  if (!(t >= 0.0)) throw DomainError(detail::concat("time must be nonnegative, got ", t));
  if (params.alpha() >= 1.0) {
    throw DomainError("branch-cut representation requires alpha < 1");
  }
  const double alpha = params.alpha();
  const double lambda = params.lambda();
  auto integral = [&](const QuadratureGrid& g) {
    return trapezoid(g, [&](double x) {
      const double v = detail::branch_cut_v(alpha, lambda, -1.0, std::exp(alpha * x));
      return t == 0.0 ? v : v * std::exp(-std::exp(x) * t);
    });
  };
  return checked_quadrature(grid, integral, diag, "branch_cut_integral");
}

/// E_alpha(+lambda t^alpha) = exp(t lambda^(1/alpha))/alpha - int w_+(s) exp(-s t) ds.
[[nodiscard]] inline double mlf_positive_branchcut(const MlfParams& params, double t,
                                                   const QuadratureGrid& grid,
                                                   Diagnostics* diag = nullptr) {
  const double exponent = t * params.pole();
  if (exponent > 709.0) {
    throw OverflowError(detail::concat("exp(t lambda^(1/alpha)) overflows for t=", t));
  }
  const double cut = branch_cut_integral(params, t, grid, diag);
  return std::exp(exponent) / params.alpha() - cut;
}

namespace detail {

// The mixture densities sharpen as alpha -> 1; keep about 400 nodes per unit
// of the density's log-width sin(alpha pi).
inline QuadratureGrid dispatcher_grid(double alpha) {
  QuadratureGrid grid = QuadratureGrid::default_for(alpha);
  if (alpha > 0.9) {
    const double scale = std::min(100.0, std::ceil(0.1 / (1.0 - alpha)));
    const auto points = static_cast<std::size_t>(4000.0 * scale) + 1;
    return {grid.x_min(), grid.x_max(), points};
  }
  return grid;
}

}  // namespace detail

/// E_alpha(sign * lambda t^alpha). Series for |lambda t^alpha| <= 5, integral
/// representations otherwise; alpha = 1 is the exact exponential.
[[nodiscard]] inline double mlf(const MlfParams& params, Sign sign, double t) {
  if (!(t >= 0.0)) throw DomainError(detail::concat("time must be nonnegative, got ", t));
  const double sgn = sign_value(sign);
  if (params.alpha() == 1.0) return std::exp(sgn * params.lambda() * t);
  if (t == 0.0) return 1.0;
  const double z = sgn * params.lambda() * std::pow(t, params.alpha());
  if (std::abs(z) <= kSeriesSwitch || params.alpha() > 0.99) {
    try {
      return mlf_series(params.alpha(), z);
    } catch (const ConvergenceError&) {
      // fall through to the integral representation
    }
  }
  const QuadratureGrid grid = detail::dispatcher_grid(params.alpha());
  return sign == Sign::minus ? mlf_negative_mixture(params, t, grid)
                             : mlf_positive_branchcut(params, t, grid);
}

}  // namespace fracteuler
