#pragma once

// Seeded waiting-time samplers.
//
// RngStream is a Philox4x32-10 counter-based generator: the key is the
// 64-bit seed and the stream id occupies the upper half of the counter, so
// any (seed, stream) pair can be created anywhere without shared state.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/random/exponential_distribution.hpp>

#include "fracteuler/core.hpp"
#include "fracteuler/mixture_densities.hpp"

namespace fracteuler {

class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    if (next_ == buffer_.size()) refill();
    return buffer_[next_++];
  }

  /// Uniform on the open interval (0, 1); exact zero is rejected.
  double uniform_open() noexcept {
    for (;;) {
      const std::uint64_t bits = (*this)() >> 11;
      if (bits != 0) return static_cast<double>(bits) * 0x1.0p-53;
    }
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  // Four consecutive counter blocks per refill.
  void refill() noexcept {
    const auto key0 = static_cast<std::uint32_t>(seed_);
    const auto key1 = static_cast<std::uint32_t>(seed_ >> 32);
    const auto c2 = static_cast<std::uint32_t>(stream_id_);
    const auto c3 = static_cast<std::uint32_t>(stream_id_ >> 32);
    for (std::size_t b = 0; b < kBlocks; ++b) {
      std::uint32_t x0 = static_cast<std::uint32_t>(counter_);
      std::uint32_t x1 = static_cast<std::uint32_t>(counter_ >> 32);
      std::uint32_t x2 = c2;
      std::uint32_t x3 = c3;
      std::uint32_t k0 = key0;
      std::uint32_t k1 = key1;
      for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x2;
        x0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
        x1 = static_cast<std::uint32_t>(p1);
        x2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
        x3 = static_cast<std::uint32_t>(p0);
        k0 += kWeyl0;
        k1 += kWeyl1;
      }
      ++counter_;
      buffer_[2 * b] = (static_cast<std::uint64_t>(x1) << 32) | x0;
      buffer_[2 * b + 1] = (static_cast<std::uint64_t>(x3) << 32) | x2;
    }
    next_ = 0;
  }

  static constexpr std::size_t kBlocks = 4;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2 * kBlocks> buffer_{};
  std::size_t next_ = 2 * kBlocks;
};

// -----------------------------------------------------------------------------
// Closed-form transforms of uniforms (exposed for deterministic checks)
// -----------------------------------------------------------------------------

namespace detail {

// Per-order constants shared by the Mittag-Leffler and W_+ transforms.
struct MixingConstants {
  double alpha = 1.0;
  double inv_alpha = 1.0;
  double a_pi = std::numbers::pi;
  double sin_a = 0.0;
  double cos_a = -1.0;
  double C = 0.0;

  explicit MixingConstants(double a)
      : alpha(a),
        inv_alpha(1.0 / a),
        a_pi(a * std::numbers::pi),
        sin_a(std::sin(a * std::numbers::pi)),
        cos_a(std::cos(a * std::numbers::pi)),
        C(a < 1.0 ? 1.0 / a - 1.0 : 0.0) {}

  // Mixing variable of w_-,1: sin(pi a)/tan(pi a (1-u)) - cos(pi a).
  [[nodiscard]] double mlf_mixing(double u) const { return sin_a / std::tan(a_pi * (1.0 - u)) - cos_a; }
  // Mixing variable of W_+ (unit rate): Q(C u).
  [[nodiscard]] double wplus_mixing(double u) const {
    const double v = C * u;
    return std::sin(a_pi * v) / std::sin(a_pi * (1.0 + v));
  }
};

}  // namespace detail

[[nodiscard]] inline double exponential_from_uniform(double rate, double u) {
  return -std::log(u) / rate;
}

/// tau = -(1/lambda)^(1/alpha) (sin(pi a)/tan(pi a (1-u1)) - cos(pi a))^(1/alpha) log(u2).
[[nodiscard]] inline double mlf_waiting_from_uniforms(const MlfParams& params, double u1, double u2) {
  if (params.alpha() == 1.0) return exponential_from_uniform(params.lambda(), u2);
  const detail::MixingConstants k(params.alpha());
  return -std::pow(k.mlf_mixing(u1), k.inv_alpha) * std::pow(params.lambda(), -k.inv_alpha) *
         std::log(u2);
}

/// Same product form with the W_+ inverse CDF: v = C u1.
[[nodiscard]] inline double wplus_waiting_from_uniforms(const MlfParams& params, double u1, double u2) {
  if (params.alpha() >= 1.0) throw DomainError("W_plus waiting times need alpha < 1");
  const detail::MixingConstants k(params.alpha());
  return -std::pow(k.wplus_mixing(u1), k.inv_alpha) * std::pow(params.lambda(), -k.inv_alpha) *
         std::log(u2);
}

// -----------------------------------------------------------------------------
// Samplers
// -----------------------------------------------------------------------------

[[nodiscard]] inline double sample_exponential(double rate, RngStream& rng) {
  if (!(rate > 0.0)) throw DomainError(detail::concat("exponential rate must be positive, got ", rate));
  return exponential_from_uniform(rate, rng.uniform_open());
}

/// Waiting time with survival function E_alpha(-lambda t^alpha).
[[nodiscard]] inline double sample_mlf_waiting(const MlfParams& params, RngStream& rng) {
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return mlf_waiting_from_uniforms(params, u1, u2);
}

/// Waiting time with survival function phi_{W+}(t).
[[nodiscard]] inline double sample_wplus_waiting(const MlfParams& params, RngStream& rng) {
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return wplus_waiting_from_uniforms(params, u1, u2);
}

/// Waiting-time family used by the random-walk and reaction simulators.
/// The rate enters every family through a per-rate scale, so simulators can
/// cache scale(rate) per state and call sample_scaled.
class WaitingTime {
 public:
  enum class Kind { exponential, mittag_leffler, wplus };

  [[nodiscard]] static WaitingTime exponential() { return WaitingTime(Kind::exponential, 1.0); }
  [[nodiscard]] static WaitingTime mittag_leffler(double alpha) {
    (void)MlfParams(alpha, 1.0);
    return WaitingTime(Kind::mittag_leffler, alpha);
  }
  [[nodiscard]] static WaitingTime wplus(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("W_plus waiting times need 0 < alpha < 1");
    return WaitingTime(Kind::wplus, alpha);
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double alpha() const noexcept { return k_.alpha; }

  /// Time scale for a given rate: 1/rate or rate^(-1/alpha).
  [[nodiscard]] double scale(double rate) const {
    if (!(rate > 0.0)) throw DomainError(detail::concat("waiting-time rate must be positive, got ", rate));
    return kind_ == Kind::exponential ? 1.0 / rate : std::pow(rate, -k_.inv_alpha);
  }

  [[nodiscard]] double sample_scaled(double scale, RngStream& rng) const {
    switch (kind_) {
      case Kind::exponential:
        return boost::random::exponential_distribution<double>(1.0)(rng) * scale;
      case Kind::mittag_leffler: {
        const double u1 = rng.uniform_open();
        const double u2 = rng.uniform_open();
        if (k_.alpha == 1.0) return -std::log(u2) * scale;
        return -std::pow(k_.mlf_mixing(u1), k_.inv_alpha) * scale * std::log(u2);
      }
      case Kind::wplus: {
        const double u1 = rng.uniform_open();
        const double u2 = rng.uniform_open();
        return -std::pow(k_.wplus_mixing(u1), k_.inv_alpha) * scale * std::log(u2);
      }
    }
    return 0.0;
  }

  /// Draws a waiting time whose rate parameter is `rate`.
  [[nodiscard]] double sample(double rate, RngStream& rng) const {
    return sample_scaled(scale(rate), rng);
  }

  /// Probability of no event by time t at the given rate.
  [[nodiscard]] double survival(double rate, double t) const {
    switch (kind_) {
      case Kind::exponential:
        return std::exp(-rate * t);
      case Kind::mittag_leffler:
        return mlf(MlfParams(k_.alpha, rate), Sign::minus, t);
      case Kind::wplus:
        return survival_phi_Wplus(DensitySpec(DensityKind::W_plus, MlfParams(k_.alpha, rate)), t,
                                  QuadratureGrid::default_for(k_.alpha));
    }
    return 0.0;
  }

 private:
  WaitingTime(Kind kind, double alpha) : kind_(kind), k_(alpha) {}

  Kind kind_;
  detail::MixingConstants k_;
};

}  // namespace fracteuler
