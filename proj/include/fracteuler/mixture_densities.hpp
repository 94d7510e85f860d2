#pragma once

// Branch-cut densities of the Mittag-Leffler function and the closed-form
// distribution machinery built on them.
//
//   w_-(s)  mixes exponentials into E_alpha(-lambda t^alpha)
//   w_+(s)  is the branch-cut weight in E_alpha(+lambda t^alpha)
//   W_+(s)  = w_+(s) / C with C = 1/alpha - 1, a probability density
//
// g is an antiderivative of w_+ that is continuous on (0, inf) with
// g(0+) = -C and g(inf) = 0, so G = 1 + g/C is the CDF of W_+.

#include <cmath>
#include <numbers>

#include "fracteuler/core.hpp"
#include "fracteuler/special_functions.hpp"

namespace fracteuler {

enum class DensityKind { w_minus, w_plus, W_plus, w_minus_unit };

/// Density selector. Requires 0 < alpha < 1; w_minus_unit pins lambda = 1.
class DensitySpec {
 public:
  DensitySpec(DensityKind kind, const MlfParams& params)
      : kind_(kind),
        params_(kind == DensityKind::w_minus_unit ? MlfParams(params.alpha(), 1.0) : params) {
    if (params.alpha() >= 1.0) {
      throw DomainError("branch-cut densities need alpha < 1 (alpha = 1 is a point mass)");
    }
  }

  [[nodiscard]] DensityKind kind() const noexcept { return kind_; }
  [[nodiscard]] const MlfParams& params() const noexcept { return params_; }
  [[nodiscard]] double alpha() const noexcept { return params_.alpha(); }
  [[nodiscard]] double lambda() const noexcept { return params_.lambda(); }

 private:
  DensityKind kind_;
  MlfParams params_;
};

/// C = 1/alpha - 1, the total mass of w_+.
[[nodiscard]] inline double normalization_C(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(detail::concat("normalization constant needs 0 < alpha < 1, got ", alpha));
  }
  return 1.0 / alpha - 1.0;
}

[[nodiscard]] inline double density_eval(const DensitySpec& spec, double s) {
  if (!(s > 0.0)) throw DomainError(detail::concat("density argument must be positive, got ", s));
  const bool minus = spec.kind() == DensityKind::w_minus || spec.kind() == DensityKind::w_minus_unit;
  const double r = std::pow(s, spec.alpha());
  const double v = detail::branch_cut_v(spec.alpha(), spec.lambda(), minus ? 1.0 : -1.0, r);
  const double w = v / s;
  return spec.kind() == DensityKind::W_plus ? w / normalization_C(spec.alpha()) : w;
}

/// Trapezoidal value of int_0^inf w_+(s) ds in the log variable.
[[nodiscard]] inline double normalization_C_numeric(double alpha, double lambda,
                                                    const QuadratureGrid& grid,
                                                    Diagnostics* diag = nullptr) {
  const MlfParams params(alpha, lambda);
  if (alpha >= 1.0) throw DomainError("normalization constant needs alpha < 1");
  return branch_cut_integral(params, 0.0, grid, diag);
}

namespace detail {

struct ArcTanParts {
  double first;   // ArcTan term singular at s_1
  double second;  // ArcTan term singular at s_2
  bool below_s1;  // denominator of the first term is negative
  bool below_s2;  // denominator of the second term is negative
};

// Singular points use the right-hand limit ArcTan(+-inf) = +-pi/2; the case
// corrections switch on the same denominator signs so g stays continuous.
inline ArcTanParts arctan_parts(double alpha, double lambda, double s) {
  const double r = std::pow(s, alpha);
  const double c = std::cos(alpha * std::numbers::pi);
  const double tan_half = std::tan(alpha * std::numbers::pi / 2.0);

  const double num1 = -lambda + r - 2.0 * lambda * c;
  const double den1 = lambda + r - 2.0 * lambda * c;
  const double num2 = lambda + r;
  const double den2 = r - lambda;

  ArcTanParts parts{};
  parts.first = den1 == 0.0 ? std::copysign(std::numbers::pi / 2.0, num1)
                            : std::atan(num1 / den1 * tan_half);
  parts.second = den2 == 0.0 ? std::copysign(std::numbers::pi / 2.0, num2)
                             : std::atan(num2 / den2 * tan_half);
  parts.below_s1 = den1 < 0.0;
  parts.below_s2 = den2 < 0.0;
  return parts;
}

inline void require_plus_kind(const DensitySpec& spec, const char* what) {
  if (spec.kind() != DensityKind::w_plus && spec.kind() != DensityKind::W_plus) {
    throw DomainError(concat(what, " is defined for the w_plus / W_plus densities only"));
  }
}

}  // namespace detail

/// s_1 = (2 lambda cos(alpha pi) - lambda)^(1/alpha); NaN unless alpha < 1/3.
[[nodiscard]] inline double singular_point_s1(const MlfParams& params) {
  const double base = 2.0 * params.lambda() * std::cos(params.alpha() * std::numbers::pi) -
                      params.lambda();
  return base > 0.0 ? std::pow(base, 1.0 / params.alpha()) : std::nan("");
}

/// s_2 = lambda^(1/alpha).
[[nodiscard]] inline double singular_point_s2(const MlfParams& params) { return params.pole(); }

/// The raw ArcTan expression (discontinuous at s_1, s_2).
[[nodiscard]] inline double antiderivative_g_tilde(const DensitySpec& spec, double s) {
  detail::require_plus_kind(spec, "g_tilde");
  if (!(s > 0.0)) throw DomainError(detail::concat("g_tilde needs s > 0, got ", s));
  const auto parts = detail::arctan_parts(spec.alpha(), spec.lambda(), s);
  return (parts.first - parts.second) / (2.0 * spec.alpha() * std::numbers::pi);
}

/// Continuous antiderivative of w_+ with g(inf) = 0.
[[nodiscard]] inline double antiderivative_g(const DensitySpec& spec, double s) {
  detail::require_plus_kind(spec, "antiderivative g");
  if (!(s > 0.0)) throw DomainError(detail::concat("antiderivative g needs s > 0, got ", s));
  const double alpha = spec.alpha();
  const auto parts = detail::arctan_parts(alpha, spec.lambda(), s);
  double g = (parts.first - parts.second) / (2.0 * alpha * std::numbers::pi);
  if (parts.below_s1) g -= 1.0 / (2.0 * alpha);
  if (parts.below_s2) g -= 1.0 / (2.0 * alpha);
  return g;
}

/// CDF of W_+: G(T) = 1 + g(T)/C.
[[nodiscard]] inline double cdf_G(const DensitySpec& spec, double T) {
  detail::require_plus_kind(spec, "cdf_G");
  if (!(T > 0.0)) throw DomainError(detail::concat("cdf_G needs T > 0, got ", T));
  return 1.0 + antiderivative_g(spec, T) / normalization_C(spec.alpha());
}

/// Q(v) = lambda (sin(alpha pi (1+2v)) - sin(alpha pi)) / sin(2 alpha pi (1+v)).
/// Evaluated as lambda sin(alpha pi v) / sin(alpha pi (1+v)): sum-to-product
/// cancels the common factor cos(alpha pi (1+v)), which vanishes inside (0, C)
/// whenever alpha < 1/2.
[[nodiscard]] inline double inverse_cdf_Q(const MlfParams& params, double v) {
  const double a_pi = params.alpha() * std::numbers::pi;
  return params.lambda() * std::sin(a_pi * v) / std::sin(a_pi * (1.0 + v));
}

/// Inverse of cdf_G: T = Q(C u)^(1/alpha).
[[nodiscard]] inline double inv_cdf_G(const DensitySpec& spec, double u) {
  detail::require_plus_kind(spec, "inv_cdf_G");
  if (!(u > 0.0 && u < 1.0)) throw DomainError(detail::concat("inv_cdf_G needs 0 < u < 1, got ", u));
  const double C = normalization_C(spec.alpha());
  return std::pow(inverse_cdf_Q(spec.params(), C * u), 1.0 / spec.alpha());
}

/// CDF of w_- (any lambda): F(T) = 1 - atan2(sin(alpha pi), T^alpha/lambda + cos(alpha pi)) / (alpha pi).
[[nodiscard]] inline double cdf_w_minus(const MlfParams& params, double T) {
  if (!(T > 0.0)) throw DomainError(detail::concat("cdf_w_minus needs T > 0, got ", T));
  if (params.alpha() >= 1.0) throw DomainError("cdf_w_minus needs alpha < 1");
  const double a_pi = params.alpha() * std::numbers::pi;
  const double x = std::pow(T, params.alpha()) / params.lambda();
  return 1.0 - std::atan2(std::sin(a_pi), x + std::cos(a_pi)) / a_pi;
}

/// F^{-1}(u) = lambda^(1/alpha) (sin(pi alpha)/tan(pi alpha (1-u)) - cos(pi alpha))^(1/alpha).
[[nodiscard]] inline double inv_cdf_w_minus(const MlfParams& params, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError(detail::concat("inv_cdf_w_minus needs 0 < u < 1, got ", u));
  if (params.alpha() >= 1.0) throw DomainError("inv_cdf_w_minus needs alpha < 1");
  const double a_pi = params.alpha() * std::numbers::pi;
  const double base = std::sin(a_pi) / std::tan(a_pi * (1.0 - u)) - std::cos(a_pi);
  return params.pole() * std::pow(base, 1.0 / params.alpha());
}

/// phi_{W+}(t) = int W_+(s) exp(-s t) ds, a completely monotone survival function.
[[nodiscard]] inline double survival_phi_Wplus(const DensitySpec& spec, double t,
                                               const QuadratureGrid& grid,
                                               Diagnostics* diag = nullptr) {
  detail::require_plus_kind(spec, "survival_phi_Wplus");
  return branch_cut_integral(spec.params(), t, grid, diag) / normalization_C(spec.alpha());
}

/// Laplace transform of phi_{W+}, valid for s > lambda^(1/alpha).
[[nodiscard]] inline double laplace_phi_Wplus(const DensitySpec& spec, double s) {
  detail::require_plus_kind(spec, "laplace_phi_Wplus");
  const double alpha = spec.alpha();
  const double pole = spec.params().pole();
  if (s == pole) throw PoleError(detail::concat("Laplace transform has a pole at s = ", pole));
  if (!(s > pole)) {
    throw DomainError(detail::concat("Laplace transform needs s > lambda^(1/alpha) = ", pole));
  }
  const double first = 1.0 / (alpha * (s - pole));
  const double second = std::pow(s, alpha - 1.0) / (std::pow(s, alpha) - spec.lambda());
  return alpha / (1.0 - alpha) * (first - second);
}

}  // namespace fracteuler
