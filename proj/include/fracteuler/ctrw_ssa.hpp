#pragma once

// Gillespie-style simulation with pluggable waiting times. Only the waiting
// time changes between the exponential, Mittag-Leffler and W_+ families;
// the choice of the next reaction (or jump) is the usual one.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fracteuler/core.hpp"
#include "fracteuler/graph_laplacian.hpp"
#include "fracteuler/samplers.hpp"

namespace fracteuler {

/// The runaway guard in simulate_trajectory tripped.
class EventCapError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kEventCap = 100'000'000;

// -----------------------------------------------------------------------------
// Reaction networks (one dynamic species)
// -----------------------------------------------------------------------------

struct Reaction {
  std::string name;
  long change = 0;
  std::function<double(long)> propensity;
};

class ReactionNetwork {
 public:
  ReactionNetwork(std::vector<Reaction> reactions, long initial_state)
      : reactions_(std::move(reactions)), initial_state_(initial_state) {
    if (reactions_.empty()) throw DomainError("reaction network needs at least one reaction");
    if (initial_state_ < 0) throw DomainError("initial state must be nonnegative");
    for (const auto& r : reactions_) {
      if (!r.propensity) throw DomainError(detail::concat("reaction ", r.name, " has no propensity"));
    }
  }

  [[nodiscard]] const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
  [[nodiscard]] std::size_t size() const noexcept { return reactions_.size(); }
  [[nodiscard]] long initial_state() const noexcept { return initial_state_; }

  [[nodiscard]] std::vector<double> propensities(long x) const {
    std::vector<double> a(reactions_.size());
    for (std::size_t r = 0; r < reactions_.size(); ++r) {
      a[r] = reactions_[r].propensity(x);
      if (!(a[r] >= 0.0)) {
        throw DomainError(detail::concat("propensity of ", reactions_[r].name, " at x=", x,
                                         " is negative (", a[r], ")"));
      }
      if (a[r] > 0.0 && x + reactions_[r].change < 0) {
        throw DomainError(detail::concat("reaction ", reactions_[r].name, " would make x negative"));
      }
    }
    return a;
  }

 private:
  std::vector<Reaction> reactions_;
  long initial_state_;
};

/// Cumulative propensities and waiting-time scale per state, filled on demand.
class PropensityTable {
 public:
  PropensityTable(const ReactionNetwork& network, const WaitingTime& waiting)
      : network_(&network), waiting_(waiting), stride_(network.size() + 1) {}

  /// Row for state x: cumulative sums a_1, a_1 + a_2, ..., a (the total),
  /// followed by the waiting-time scale at rate a (0 if absorbing).
  const double* row(long x) {
    const auto idx = static_cast<std::size_t>(x);
    if (idx >= filled_.size()) {
      const std::size_t grow = std::max(idx + 1, 2 * filled_.size());
      filled_.resize(grow, false);
      table_.resize(grow * stride_);
    }
    double* out = &table_[idx * stride_];
    if (!filled_[idx]) {
      const auto a = network_->propensities(x);
      double running = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        running += a[k];
        out[k] = running;
      }
      out[a.size()] = running > 0.0 ? waiting_.scale(running) : 0.0;
      filled_[idx] = true;
    }
    return out;
  }

  [[nodiscard]] const ReactionNetwork& network() const noexcept { return *network_; }
  [[nodiscard]] const WaitingTime& waiting() const noexcept { return waiting_; }

 private:
  const ReactionNetwork* network_;
  WaitingTime waiting_;
  std::size_t stride_;
  std::vector<bool> filled_;
  std::vector<double> table_;
};

struct SsaStep {
  double tau = 0.0;
  long next_state = 0;
  std::size_t reaction = 0;
};

namespace detail {

inline std::size_t pick(const double* cumulative, std::size_t count, double target) {
  std::size_t r = 0;
  while (r + 1 < count && target >= cumulative[r]) ++r;
  return r;
}

inline std::optional<SsaStep> ssa_step_cached(long state, PropensityTable& table, RngStream& rng) {
  const double* cum = table.row(state);
  const std::size_t count = table.network().size();
  const double total = cum[count - 1];
  if (total <= 0.0) return std::nullopt;
  SsaStep step;
  step.tau = table.waiting().sample_scaled(cum[count], rng);
  step.reaction = pick(cum, count, rng.uniform_open() * total);
  step.next_state = state + table.network().reactions()[step.reaction].change;
  return step;
}

}  // namespace detail

/// One event: waiting time at rate a = sum a_i, then reaction i with
/// probability a_i / a. Empty when the state is absorbing (a = 0).
[[nodiscard]] inline std::optional<SsaStep> ssa_step(long state, const ReactionNetwork& network,
                                                     const WaitingTime& waiting, RngStream& rng) {
  PropensityTable table(network, waiting);
  return detail::ssa_step_cached(state, table, rng);
}

struct Trajectory {
  long initial_state = 0;
  std::vector<double> times;  // event instants
  std::vector<long> states;   // state right after each event
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Right-continuous state at time t.
  [[nodiscard]] long state_at(double t) const {
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return initial_state;
    return states[static_cast<std::size_t>(it - times.begin()) - 1];
  }
};

/// All events up to t_end.
[[nodiscard]] inline Trajectory simulate_trajectory(const ReactionNetwork& network,
                                                    const WaitingTime& waiting, double t_end,
                                                    RngStream& rng) {
  if (!(t_end > 0.0)) throw DomainError(detail::concat("t_end must be positive, got ", t_end));
  PropensityTable table(network, waiting);
  Trajectory traj;
  traj.initial_state = network.initial_state();
  traj.seed = rng.seed();
  traj.stream = rng.stream_id();
  long x = network.initial_state();
  double t = 0.0;
  for (;;) {
    const auto step = detail::ssa_step_cached(x, table, rng);
    if (!step || t + step->tau > t_end) break;
    if (traj.times.size() >= kEventCap) {
      throw EventCapError(detail::concat("more than ", kEventCap, " events before t_end=", t_end));
    }
    t += step->tau;
    x = step->next_state;
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

/// States at sorted snapshot times without storing the trajectory.
[[nodiscard]] inline std::vector<long> simulate_snapshots(PropensityTable& table,
                                                          const std::vector<double>& snapshots,
                                                          RngStream& rng) {
  std::vector<long> out;
  out.reserve(snapshots.size());
  long x = table.network().initial_state();
  double t = 0.0;
  std::size_t events = 0;
  std::size_t next = 0;
  while (next < snapshots.size()) {
    const auto step = detail::ssa_step_cached(x, table, rng);
    const double t_next = step ? t + step->tau : std::numeric_limits<double>::infinity();
    while (next < snapshots.size() && snapshots[next] < t_next) {
      out.push_back(x);
      ++next;
    }
    if (!step) break;
    if (++events > kEventCap) throw EventCapError(detail::concat("more than ", kEventCap, " events"));
    t = t_next;
    x = step->next_state;
  }
  return out;
}

// -----------------------------------------------------------------------------
// Schlogl model
// -----------------------------------------------------------------------------

struct SchloglParams {
  double k1 = 3e-7;
  double k2 = 1e-4;
  double k3 = 1e-3;
  double k4 = 3.5;
  double B1 = 1e5;
  double B2 = 2e5;
  long X0 = 247;

  void validate() const {
    if (!(k1 > 0 && k2 > 0 && k3 > 0 && k4 > 0 && B1 > 0 && B2 > 0 && X0 >= 0)) {
      throw DomainError("Schlogl parameters must be positive");
    }
  }
};

/// a1 = k1 B1 x(x-1)/2, a2 = k2 x(x-1)(x-2)/6, a3 = k3 B2, a4 = k4 x.
[[nodiscard]] inline std::array<double, 4> schlogl_propensities(long x, const SchloglParams& p) {
  if (x < 0) throw DomainError(detail::concat("Schlogl state must be nonnegative, got ", x));
  const auto xd = static_cast<double>(x);
  return {p.k1 * p.B1 * xd * (xd - 1.0) / 2.0, p.k2 * xd * (xd - 1.0) * (xd - 2.0) / 6.0,
          p.k3 * p.B2, p.k4 * xd};
}

[[nodiscard]] inline ReactionNetwork schlogl_network(const SchloglParams& params = {}) {
  params.validate();
  auto rule = [params](std::size_t i) {
    return [params, i](long x) { return schlogl_propensities(x, params)[i]; };
  };
  return ReactionNetwork({{"B1 + 2X -> 3X", +1, rule(0)},
                          {"3X -> B1 + 2X", -1, rule(1)},
                          {"B2 -> X", +1, rule(2)},
                          {"X -> B2", -1, rule(3)}},
                         params.X0);
}

/// Mean-field drift k1 B1 x^2/2 - k2 x^3/6 + k3 B2 - k4 x.
[[nodiscard]] inline double schlogl_drift(double x, const SchloglParams& p) {
  return p.k1 * p.B1 * x * x / 2.0 - p.k2 * x * x * x / 6.0 + p.k3 * p.B2 - p.k4 * x;
}

/// Real roots of the mean-field drift in [0, 1000], sorted.
[[nodiscard]] inline std::vector<double> deterministic_steady_states(const SchloglParams& params = {}) {
  params.validate();
  std::vector<double> roots;
  auto f = [&](double x) { return schlogl_drift(x, params); };
  for (int i = 0; i < 1000; ++i) {
    double lo = i;
    double hi = i + 1.0;
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) {
      roots.push_back(lo);
      continue;
    }
    if ((flo < 0.0) == (fhi < 0.0)) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

/// Generator of the Schlogl chain on {0, ..., max_state}; births out of
/// max_state are suppressed (reflecting boundary). Column j holds the rates
/// out of state j.
[[nodiscard]] inline SparseMatrix schlogl_generator(const SchloglParams& params, long max_state) {
  params.validate();
  if (max_state < 1) throw DomainError("state-space cutoff must be at least 1");
  std::vector<Eigen::Triplet<double>> entries;
  for (long x = 0; x <= max_state; ++x) {
    const auto a = schlogl_propensities(x, params);
    const double birth = x < max_state ? a[0] + a[2] : 0.0;
    const double death = x > 0 ? a[1] + a[3] : 0.0;
    const auto j = static_cast<int>(x);
    if (birth > 0.0) entries.emplace_back(j + 1, j, birth);
    if (death > 0.0) entries.emplace_back(j - 1, j, death);
    entries.emplace_back(j, j, -(birth + death));
  }
  SparseMatrix gen(max_state + 1, max_state + 1);
  gen.setFromTriplets(entries.begin(), entries.end());
  return gen;
}

// -----------------------------------------------------------------------------
// Random walks on graph Laplacians
// -----------------------------------------------------------------------------

/// Jump law out of each state: lambda(i, j) = a_ij / |a_jj|.
class JumpChain {
 public:
  explicit JumpChain(const GraphLaplacian& a) {
    const auto n = static_cast<std::size_t>(a.dim());
    rates_.resize(n);
    targets_.resize(n);
    cumulative_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      rates_[j] = -a.matrix()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
      double running = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double aij = a.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (i == j || aij <= 0.0) continue;
        running += aij / rates_[j];
        targets_[j].push_back(i);
        cumulative_[j].push_back(running);
      }
    }
  }

  [[nodiscard]] std::size_t dim() const noexcept { return rates_.size(); }
  [[nodiscard]] double rate(std::size_t j) const { return rates_[j]; }
  [[nodiscard]] bool absorbing(std::size_t j) const { return targets_[j].empty(); }

  /// lambda(i, j) for all i (zero on the diagonal).
  [[nodiscard]] std::vector<double> jump_probabilities(std::size_t j) const {
    std::vector<double> p(dim(), 0.0);
    double previous = 0.0;
    for (std::size_t k = 0; k < targets_[j].size(); ++k) {
      p[targets_[j][k]] = cumulative_[j][k] - previous;
      previous = cumulative_[j][k];
    }
    return p;
  }

  [[nodiscard]] std::size_t next(std::size_t j, RngStream& rng) const {
    const auto& cum = cumulative_[j];
    const double u = rng.uniform_open() * cum.back();
    std::size_t k = 0;
    while (k + 1 < cum.size() && u >= cum[k]) ++k;
    return targets_[j][k];
  }

 private:
  std::vector<double> rates_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<std::vector<double>> cumulative_;
};

/// CTRW: wait with rate |a_jj|, then jump per lambda(i, j). Absorbing
/// states end the walk.
[[nodiscard]] inline Trajectory ctrw_on_graph(const GraphLaplacian& a, const WaitingTime& waiting,
                                              std::size_t j0, double t_end, RngStream& rng) {
  if (j0 >= static_cast<std::size_t>(a.dim())) throw DomainError("initial state out of range");
  if (!(t_end > 0.0)) throw DomainError(detail::concat("t_end must be positive, got ", t_end));
  const JumpChain chain(a);
  Trajectory traj;
  traj.initial_state = static_cast<long>(j0);
  traj.seed = rng.seed();
  traj.stream = rng.stream_id();
  std::size_t j = j0;
  double t = 0.0;
  while (!chain.absorbing(j)) {
    t += waiting.sample(chain.rate(j), rng);
    if (t > t_end) break;
    if (traj.times.size() >= kEventCap) throw EventCapError("CTRW exceeded the event cap");
    j = chain.next(j, rng);
    traj.times.push_back(t);
    traj.states.push_back(static_cast<long>(j));
  }
  return traj;
}

/// State of the walk at time t.
[[nodiscard]] inline std::size_t ctrw_state_at(const JumpChain& chain, const WaitingTime& waiting,
                                               std::size_t j0, double t_snapshot, RngStream& rng) {
  std::size_t j = j0;
  double t = 0.0;
  while (!chain.absorbing(j)) {
    t += waiting.sample(chain.rate(j), rng);
    if (t > t_snapshot) break;
    j = chain.next(j, rng);
  }
  return j;
}

// -----------------------------------------------------------------------------
// Ensembles
// -----------------------------------------------------------------------------

/// Worker count: hardware concurrency capped by FRACTEULER_THREADS.
[[nodiscard]] inline unsigned worker_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FRACTEULER_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace detail {

// Runs body(i, local) for i in [0, count) on up to `workers` threads, each
// with its own accumulator, and merges the accumulators in worker order.
// Accumulators must merge associatively and commutatively (integer counts).
template <class Acc, class Body, class Merge>
Acc parallel_accumulate(std::size_t count, unsigned workers, const Acc& init, Body body, Merge merge) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, workers), std::max<std::size_t>(count, 1)));
  std::vector<Acc> locals(workers, init);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < count; i += workers) body(i, locals[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc total = init;
  for (auto& local : locals) merge(total, local);
  return total;
}

}  // namespace detail

struct EnsembleHistogram {
  double time = 0.0;
  std::vector<std::size_t> counts;  // counts[x] = trajectories in state x
  std::size_t trajectories = 0;

  [[nodiscard]] std::size_t total() const {
    std::size_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }
};

/// N trajectories, trajectory i on RngStream(base_seed, i); histogram of the
/// state at each snapshot. Identical for any worker count.
[[nodiscard]] inline std::vector<EnsembleHistogram> ensemble_histogram(
    const ReactionNetwork& network, const WaitingTime& waiting, std::vector<double> snapshots,
    std::size_t n, std::uint64_t base_seed, unsigned workers = worker_count()) {
  if (n < 1) throw DomainError("ensemble needs at least one trajectory");
  if (snapshots.empty()) throw DomainError("ensemble needs at least one snapshot time");
  std::sort(snapshots.begin(), snapshots.end());
  if (snapshots.front() < 0.0) throw DomainError("snapshot times must be nonnegative");
  using Counts = std::vector<std::vector<std::size_t>>;
  struct Local {
    Counts counts;
    std::optional<PropensityTable> table;
  };
  const Local init{Counts(snapshots.size()), std::nullopt};
  auto body = [&](std::size_t i, Local& local) {
    if (!local.table) local.table.emplace(network, waiting);
    RngStream rng(base_seed, i);
    const auto states = simulate_snapshots(*local.table, snapshots, rng);
    for (std::size_t s = 0; s < states.size(); ++s) {
      auto& c = local.counts[s];
      const auto x = static_cast<std::size_t>(states[s]);
      if (x >= c.size()) c.resize(x + 1, 0);
      ++c[x];
    }
  };
  auto merge = [](Local& total, const Local& local) {
    for (std::size_t s = 0; s < total.counts.size(); ++s) {
      auto& dst = total.counts[s];
      const auto& src = local.counts[s];
      if (src.size() > dst.size()) dst.resize(src.size(), 0);
      for (std::size_t x = 0; x < src.size(); ++x) dst[x] += src[x];
    }
  };
  const Local total = detail::parallel_accumulate(n, workers, init, body, merge);
  std::vector<EnsembleHistogram> out;
  for (std::size_t s = 0; s < snapshots.size(); ++s) {
    out.push_back({snapshots[s], total.counts[s], n});
  }
  return out;
}

/// Marginal occupation frequencies of a CTRW at time t from state j0.
[[nodiscard]] inline std::vector<double> ctrw_marginals(const GraphLaplacian& a,
                                                        const WaitingTime& waiting, std::size_t j0,
                                                        double t, std::size_t n,
                                                        std::uint64_t base_seed,
                                                        unsigned workers = worker_count()) {
  if (n < 1) throw DomainError("ensemble needs at least one trajectory");
  const JumpChain chain(a);
  if (j0 >= chain.dim()) throw DomainError("initial state out of range");
  using Counts = std::vector<std::size_t>;
  const Counts counts = detail::parallel_accumulate(
      n, workers, Counts(chain.dim(), 0),
      [&](std::size_t i, Counts& local) {
        RngStream rng(base_seed, i);
        ++local[ctrw_state_at(chain, waiting, j0, t, rng)];
      },
      [](Counts& total, const Counts& local) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += local[k];
      });
  std::vector<double> freq(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    freq[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
  }
  return freq;
}

// -----------------------------------------------------------------------------
// Mode detection
// -----------------------------------------------------------------------------

struct Mode {
  std::size_t location = 0;  // state index of the smoothed maximum
  double height = 0.0;       // smoothed count at the maximum
  double prominence = 0.0;   // height above the higher of the two flanking minima
};

/// Centred moving average (window truncated at the edges).
[[nodiscard]] inline std::vector<double> moving_average(const std::vector<std::size_t>& counts,
                                                        std::size_t width) {
  if (width == 0) throw DomainError("smoothing width must be positive");
  const auto half = static_cast<long>(width / 2);
  const auto n = static_cast<long>(counts.size());
  std::vector<double> out(counts.size(), 0.0);
  for (long i = 0; i < n; ++i) {
    double sum = 0.0;
    long used = 0;
    for (long k = i - half; k <= i + half; ++k) {
      if (k < 0 || k >= n) continue;
      sum += static_cast<double>(counts[static_cast<std::size_t>(k)]);
      ++used;
    }
    out[static_cast<std::size_t>(i)] = sum / static_cast<double>(used);
  }
  return out;
}

/// Local maxima of the width-smoothed histogram whose topographic prominence
/// exceeds `sigmas` Poisson standard deviations of the smoothed peak
/// (sqrt(height / width)) and `min_height` counts. Locations are half-maximum
/// centroids.
[[nodiscard]] inline std::vector<Mode> find_modes(const std::vector<std::size_t>& counts,
                                                  std::size_t width = 5, double sigmas = 4.0,
                                                  double min_height = 1.0) {
  const auto smooth = moving_average(counts, width);
  const std::size_t n = smooth.size();
  std::vector<Mode> modes;
  for (std::size_t i = 0; i < n; ++i) {
    const double h = smooth[i];
    if (h < min_height) continue;
    // Plateau-aware local maximum: strictly above the left neighbour, and
    // the plateau ends with a strict descent (or the edge).
    if (i > 0 && smooth[i - 1] >= h) continue;
    std::size_t end = i;
    while (end + 1 < n && smooth[end + 1] == h) ++end;
    if (end + 1 < n && smooth[end + 1] > h) continue;
    // Prominence: walk outwards until a higher point, tracking the minimum.
    double left_min = h;
    bool left_higher = false;
    for (std::size_t k = i; k-- > 0;) {
      if (smooth[k] > h) {
        left_higher = true;
        break;
      }
      left_min = std::min(left_min, smooth[k]);
    }
    double right_min = h;
    bool right_higher = false;
    // Ties to the right count as higher so equal twin peaks yield one mode.
    for (std::size_t k = end + 1; k < n; ++k) {
      if (smooth[k] >= h) {
        right_higher = true;
        break;
      }
      right_min = std::min(right_min, smooth[k]);
    }
    double base = 0.0;
    if (left_higher && right_higher) {
      base = std::max(left_min, right_min);
    } else if (left_higher) {
      base = left_min;
    } else if (right_higher) {
      base = right_min;
    } else {
      base = std::min(left_min, right_min);
    }
    const double prominence = h - base;
    const double noise = std::sqrt(h / static_cast<double>(width));
    if (prominence >= sigmas * noise) modes.push_back({(i + end) / 2, h, prominence});
  }
  // The argmax of a broad, flat peak wanders with noise; report instead the
  // count-weighted centroid of the half-maximum region, kept inside the
  // valleys separating neighbouring modes.
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const std::size_t peak = modes[m].location;
    std::size_t lo = 0;
    std::size_t hi = n - 1;
    if (m > 0) {
      lo = modes[m - 1].location;
      for (std::size_t k = lo; k < peak; ++k) if (smooth[k] < smooth[lo]) lo = k;
    }
    if (m + 1 < modes.size()) {
      hi = modes[m + 1].location;
      for (std::size_t k = peak; k < hi; ++k) if (smooth[k] <= smooth[hi]) hi = k;
    }
    const double half = 0.5 * modes[m].height;
    std::size_t l = peak;
    while (l > lo && smooth[l - 1] >= half) --l;
    std::size_t r = peak;
    while (r < hi && smooth[r + 1] >= half) ++r;
    double mass = 0.0;
    double first = 0.0;
    for (std::size_t k = l; k <= r; ++k) {
      mass += static_cast<double>(counts[k]);
      first += static_cast<double>(k) * static_cast<double>(counts[k]);
    }
    if (mass > 0.0) modes[m].location = static_cast<std::size_t>(std::lround(first / mass));
  }
  return modes;
}

}  // namespace fracteuler
