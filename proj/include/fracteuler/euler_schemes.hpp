#pragma once

// Discrete Euler-limit constructions: classical and backward compound
// interest, the fractional recursion with power-law memory, the
// Grunwald-Letnikov implicit scheme and weighted sums of classical limits.

#include <cmath>
#include <cstddef>
#include <vector>

#include "fracteuler/core.hpp"
#include "fracteuler/mixture_densities.hpp"
#include "fracteuler/special_functions.hpp"

namespace fracteuler {

struct SchemeResult {
  std::vector<double> values;  // y_0 .. y_n
  double h = 0.0;
  double target = 0.0;
  double abs_error = 0.0;

  [[nodiscard]] double final_value() const { return values.back(); }
};

namespace detail {

inline void require_steps(std::size_t n) {
  if (n < 1) throw DomainError("number of steps must be at least 1");
}

inline void require_fractional_order(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(concat("fractional scheme needs 0 < alpha < 1, got ", alpha));
  }
}

inline SchemeResult finish(std::vector<double> values, double h, double target) {
  SchemeResult result;
  result.abs_error = std::abs(values.back() - target);
  result.values = std::move(values);
  result.h = h;
  result.target = target;
  return result;
}

// (1 + t/n)^n by n successive multiplications; shared with weighted_euler so
// that the composition identity holds bit for bit.
inline double euler_endpoint(double t, std::size_t n) {
  const double factor = 1.0 + t / static_cast<double>(n);
  double y = 1.0;
  for (std::size_t j = 0; j < n; ++j) y *= factor;
  return y;
}

}  // namespace detail

/// y_j = (1 + h) y_{j-1}, h = t/n.
[[nodiscard]] inline SchemeResult euler_classic(double t, std::size_t n) {
  detail::require_steps(n);
  const double h = t / static_cast<double>(n);
  const double factor = 1.0 + h;
  std::vector<double> values(n + 1);
  values[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) values[j] = values[j - 1] * factor;
  return detail::finish(std::move(values), h, std::exp(t));
}

/// (1 - t/n)^(-n); SingularError when t/n = 1.
[[nodiscard]] inline double euler_backward(double t, std::size_t n) {
  detail::require_steps(n);
  const double h = t / static_cast<double>(n);
  if (h == 1.0) throw SingularError("backward Euler step is singular at t/n = 1");
  return std::pow(1.0 - h, -static_cast<double>(n));
}

/// Fractional recursion
///   y_j = (1 +- h^alpha Gamma(1-alpha)) y_{j-1} + sum_{k=2}^{j} (y_{j-k} - y_{j-k+1}) / k^alpha.
/// Target is E_alpha(+-t^alpha). Cost is O(n^2).
[[nodiscard]] inline SchemeResult frac_euler(double alpha, Sign sign, double t, std::size_t n) {
  detail::require_fractional_order(alpha);
  detail::require_steps(n);
  if (!(t > 0.0)) throw DomainError(detail::concat("frac_euler needs t > 0, got ", t));
  const double h = t / static_cast<double>(n);
  const double factor = 1.0 + sign_value(sign) * std::pow(h, alpha) * std::tgamma(1.0 - alpha);

  std::vector<double> inv_power(n + 1, 0.0);
  for (std::size_t k = 2; k <= n; ++k) inv_power[k] = std::pow(static_cast<double>(k), -alpha);

  std::vector<double> values(n + 1);
  values[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    CompensatedSum memory;
    for (std::size_t k = 2; k <= j; ++k) {
      memory.add((values[j - k] - values[j - k + 1]) * inv_power[k]);
    }
    values[j] = factor * values[j - 1] + memory.value();
  }
  return detail::finish(std::move(values), h, mlf(MlfParams(alpha, 1.0), sign, t));
}

/// w_j = (-1)^j binom(-alpha, j), via w_j = w_{j-1} (j - 1 + alpha) / j.
[[nodiscard]] inline std::vector<double> gl_weights(double alpha, std::size_t n) {
  std::vector<double> w(n + 1);
  w[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    w[j] = w[j - 1] * (jd - 1.0 + alpha) / jd;
  }
  return w;
}

/// Implicit Grunwald-Letnikov scheme
///   y_m = (y_0 + h^alpha sum_{j<m} w_{m-j} y_j) / (1 - h^alpha),
/// converging to E_alpha(t^alpha).
[[nodiscard]] inline SchemeResult gl_scheme(double alpha, double t, std::size_t n) {
  detail::require_fractional_order(alpha);
  detail::require_steps(n);
  if (!(t > 0.0)) throw DomainError(detail::concat("gl_scheme needs t > 0, got ", t));
  const double h = t / static_cast<double>(n);
  const double h_alpha = std::pow(h, alpha);
  if (h_alpha == 1.0) throw SingularError("Grunwald-Letnikov step is singular at h^alpha = 1");
  const std::vector<double> w = gl_weights(alpha, n);

  std::vector<double> values(n + 1);
  values[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    CompensatedSum memory;
    for (std::size_t j = 0; j < m; ++j) memory.add(w[m - j] * values[j]);
    values[m] = (values[0] + h_alpha * memory.value()) / (1.0 - h_alpha);
  }
  return detail::finish(std::move(values), h, mlf(MlfParams(alpha, 1.0), Sign::plus, t));
}

namespace detail {

struct EulerNodes {
  std::vector<double> s;
  std::vector<double> weight;  // normalised to sum to one
};

// Discrete mixture weights on the grid. Nodes where 1 - s t/n <= -1 are
// explicit-Euler instabilities; they are dropped and reported.
inline EulerNodes euler_nodes(const DensitySpec& spec, double t, std::size_t n,
                              const QuadratureGrid& grid, Diagnostics* diag) {
  EulerNodes nodes;
  std::size_t dropped = 0;
  double first_dropped = 0.0;
  CompensatedSum total;
  for (std::size_t k = 0; k < grid.n_points(); ++k) {
    const double s = grid.s(k);
    // density_eval(s) * ds = v(s) dx
    const double w = density_eval(spec, s) * s * grid.weight(k);
    if (1.0 - s * t / static_cast<double>(n) <= -1.0) {
      if (dropped++ == 0) first_dropped = s;
      continue;
    }
    nodes.s.push_back(s);
    nodes.weight.push_back(w);
    total.add(w);
  }
  if (dropped > 0 && diag != nullptr) {
    diag->warn(concat("weighted_euler: dropped ", dropped, " unstable grid points with s >= ",
                      first_dropped, " (1 - s t/n <= -1)"));
  }
  if (nodes.s.empty()) throw DomainError("weighted_euler: every grid point is unstable for this n");
  const double norm = total.value();
  for (double& w : nodes.weight) w /= norm;
  return nodes;
}

}  // namespace detail

/// Weighted sum of classical Euler limits.
///   sign = -: sum_k w_k (1 - s_k t/n)^n                     -> E_alpha(-lambda t^alpha)
///   sign = +: (1 + t lambda^(1/alpha)/n)^n / alpha - C sum_k W_k (1 - s_k t/n)^n
///                                                          -> E_alpha(+lambda t^alpha)
[[nodiscard]] inline double weighted_euler(double alpha, double lambda, Sign sign, double t,
                                           std::size_t n, const QuadratureGrid& grid,
                                           Diagnostics* diag = nullptr) {
  detail::require_steps(n);
  const MlfParams params(alpha, lambda);
  if (!(t >= 0.0)) throw DomainError(detail::concat("weighted_euler needs t >= 0, got ", t));
  if (alpha == 1.0) {
    return detail::euler_endpoint(sign_value(sign) * lambda * t, n);
  }
  const DensityKind kind = sign == Sign::minus ? DensityKind::w_minus : DensityKind::W_plus;
  const auto nodes = detail::euler_nodes(DensitySpec(kind, params), t, n, grid, diag);
  CompensatedSum sum;
  for (std::size_t k = 0; k < nodes.s.size(); ++k) {
    sum.add(nodes.weight[k] * detail::euler_endpoint(-nodes.s[k] * t, n));
  }
  if (sign == Sign::minus) return sum.value();
  const double pole_term = detail::euler_endpoint(t * params.pole(), n) / alpha;
  return pole_term - normalization_C(alpha) * sum.value();
}

/// The normalised discrete weights and nodes used by weighted_euler.
[[nodiscard]] inline std::vector<std::pair<double, double>> weighted_euler_nodes(
    double alpha, double lambda, Sign sign, double t, std::size_t n, const QuadratureGrid& grid) {
  const DensityKind kind = sign == Sign::minus ? DensityKind::w_minus : DensityKind::W_plus;
  const auto nodes = detail::euler_nodes(DensitySpec(kind, MlfParams(alpha, lambda)), t, n, grid, nullptr);
  std::vector<std::pair<double, double>> out;
  out.reserve(nodes.s.size());
  for (std::size_t k = 0; k < nodes.s.size(); ++k) out.emplace_back(nodes.s[k], nodes.weight[k]);
  return out;
}

}  // namespace fracteuler
