// fracteuler command-line front end. Every command writes CSV with '#'
// metadata lines; exit status is 0 on success, 2 on invalid input and 3
// when a numerical method fails.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "fracteuler/fracteuler.hpp"

namespace fe = fracteuler;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Records every option as key=value, in declaration order, for the metadata line.
struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, std::function<std::string()>>> fields;

  template <class T>
  void track(const std::string& key, const T& value) {
    fields.emplace_back(key, [&value] { return render(value); });
  }

  [[nodiscard]] std::string describe() const {
    std::string out = std::string("fracteuler ") + fe::kVersion + " " + command;
    for (const auto& [key, value] : fields) out += " " + key + "=" + value();
    return out;
  }

 private:
  static std::string render(double v) { return fe::csv::format(v); }
  static std::string render(const std::string& s) { return s; }
  static std::string render(std::size_t v) { return std::to_string(v); }
  static std::string render(const std::vector<double>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + fe::csv::format(v[k]);
    return out;
  }
  static std::string render(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + v[k];
    return out;
  }
};

// Output sink: a file when --output is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw fe::DomainError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

fe::Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return fe::Sign::plus;
  if (s == "-" || s == "minus") return fe::Sign::minus;
  throw fe::DomainError("--sign must be + or -, got '" + s + "'");
}

fe::WaitingTime parse_waiting(const std::string& kind, double alpha) {
  if (kind == "exp") return fe::WaitingTime::exponential();
  if (kind == "mlf") return fe::WaitingTime::mittag_leffler(alpha);
  if (kind == "wplus") return fe::WaitingTime::wplus(alpha);
  throw fe::DomainError("--waiting must be exp, mlf or wplus, got '" + kind + "'");
}

std::vector<double> linspace(double t0, double t1, std::size_t steps) {
  if (steps < 1) throw fe::DomainError("--steps must be at least 1");
  if (!(t1 >= t0)) throw fe::DomainError("--t1 must not be below --t0");
  std::vector<double> out(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    out[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(steps);
  }
  return out;
}

// -----------------------------------------------------------------------------
// mlf
// -----------------------------------------------------------------------------

struct MlfOptions {
  double alpha = 0.0;
  double lambda = 1.0;
  std::string sign = "-";
  std::vector<double> times;
  std::string method = "auto";
  double t0 = 0.0;
  double t1 = 5.0;
  std::size_t steps = 50;
  std::string output;
};

double mlf_by_method(const fe::MlfParams& params, fe::Sign sign, double t, const std::string& method) {
  if (method == "auto") return fe::mlf(params, sign, t);
  if (method == "series") {
    return fe::mlf_series(params.alpha(), fe::sign_value(sign) * params.lambda() * std::pow(t, params.alpha()));
  }
  if (method == "integral") {
    const auto grid = fe::detail::dispatcher_grid(params.alpha());
    return sign == fe::Sign::minus ? fe::mlf_negative_mixture(params, t, grid)
                                   : fe::mlf_positive_branchcut(params, t, grid);
  }
  throw fe::DomainError("--method must be auto, series or integral");
}

void cmd_mlf_eval(const MlfOptions& o, const RunConfig& cfg) {
  const fe::MlfParams params(o.alpha, o.lambda);
  const auto sign = parse_sign(o.sign);
  if (o.times.empty()) throw fe::DomainError("--t needs at least one value");
  std::vector<double> values;
  for (double t : o.times) values.push_back(mlf_by_method(params, sign, t, o.method));
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  w.header({"t", "value", "method"});
  for (std::size_t k = 0; k < values.size(); ++k) w.row_of(o.times[k], values[k], o.method);
}

void cmd_mlf_table(const MlfOptions& o, const RunConfig& cfg) {
  const fe::MlfParams params(o.alpha, o.lambda);
  const auto sign = parse_sign(o.sign);
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  w.header({"t", "value", "series", "integral"});
  const bool has_integral = o.alpha < 1.0;
  for (double t : linspace(o.t0, o.t1, o.steps)) {
    std::string series = "nan";
    try {
      series = fe::csv::format(mlf_by_method(params, sign, t, "series"));
    } catch (const fe::ConvergenceError&) {
    } catch (const fe::OverflowError&) {
    }
    const std::string integral =
        has_integral && t > 0.0 ? fe::csv::format(mlf_by_method(params, sign, t, "integral")) : "nan";
    w.row_of(t, fe::mlf(params, sign, t), series, integral);
  }
}

// -----------------------------------------------------------------------------
// euler converge
// -----------------------------------------------------------------------------

struct EulerOptions {
  std::vector<double> alphas{0.5, 0.7};
  double t = 1.0;
  std::size_t n_min = 256;
  std::size_t n_max = 16384;
  std::vector<std::string> schemes{"frac_euler", "gl_scheme", "weighted_euler"};
  std::string sign = "-";
  std::string output;
};

void cmd_euler_converge(const EulerOptions& o, const RunConfig& cfg) {
  const auto sign = parse_sign(o.sign);
  if (o.n_min < 1 || o.n_max < o.n_min) throw fe::DomainError("need 1 <= --nmin <= --nmax");
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  w.header({"scheme", "alpha", "t", "n", "value", "target", "abs_error"});
  for (const auto& scheme : o.schemes) {
    if (scheme != "frac_euler" && scheme != "gl_scheme" && scheme != "weighted_euler") {
      throw fe::DomainError("unknown scheme '" + scheme + "'");
    }
  }
  for (const auto& scheme : o.schemes) {
    for (double alpha : o.alphas) {
      for (std::size_t n = o.n_min; n <= o.n_max; n *= 2) {
        double value = 0.0;
        double target = 0.0;
        if (scheme == "frac_euler") {
          const auto r = fe::frac_euler(alpha, sign, o.t, n);
          value = r.final_value();
          target = r.target;
        } else if (scheme == "gl_scheme") {
          const auto r = fe::gl_scheme(alpha, o.t, n);
          value = r.final_value();
          target = r.target;
        } else {
          value = fe::weighted_euler(alpha, 1.0, sign, o.t, n, fe::QuadratureGrid::default_for(alpha));
          target = fe::mlf(fe::MlfParams(alpha, 1.0), sign, o.t);
        }
        w.row_of(scheme, alpha, o.t, n, value, target, std::abs(value - target));
      }
    }
  }
}

// -----------------------------------------------------------------------------
// sample
// -----------------------------------------------------------------------------

struct SampleOptions {
  double alpha = 0.0;
  double lambda = 1.0;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string output;
};

void cmd_sample(const SampleOptions& o, const RunConfig& cfg, bool wplus) {
  const fe::MlfParams params(o.alpha, o.lambda);
  if (wplus && o.alpha >= 1.0) throw fe::DomainError("W_plus sampling needs alpha < 1");
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  w.header({"index", "tau"});
  fe::RngStream rng(o.seed);
  for (std::size_t i = 0; i < o.n; ++i) {
    w.row_of(i, wplus ? fe::sample_wplus_waiting(params, rng) : fe::sample_mlf_waiting(params, rng));
  }
}

// -----------------------------------------------------------------------------
// matrix mlf
// -----------------------------------------------------------------------------

struct MatrixOptions {
  double alpha = 0.0;
  double t = 1.0;
  std::string input;
  std::string method = "eig";
  std::size_t order = 16;
  std::string output;
};

void cmd_matrix_mlf(const MatrixOptions& o, const RunConfig& cfg) {
  const fe::GraphLaplacian a(fe::csv::read_matrix(o.input));
  fe::Matrix result;
  fe::Diagnostics diag;
  if (o.method == "eig") {
    result = fe::mlf_matrix_eig(a, o.alpha, o.t);
  } else if (o.method == "mixture") {
    result = fe::mlf_matrix_mixture(a, o.alpha, o.t, fe::QuadratureGrid::default_for(o.alpha), &diag);
  } else if (o.method == "postwidder") {
    result = fe::post_widder_mlf(a, o.alpha, o.t, o.order);
  } else {
    throw fe::DomainError("--method must be eig, mixture or postwidder");
  }
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  const auto report = fe::stochastic_check(result, 1e-10);
  w.comment("stochastic_check min_entry=" + fe::csv::format(report.min_entry) +
            " max_column_deviation=" + fe::csv::format(report.max_column_deviation) +
            " pass=" + (report.pass ? "true" : "false"));
  for (const auto& warning : diag.warnings) w.comment("warning: " + warning);
  fe::csv::write_matrix(out.stream(), result);
}

// -----------------------------------------------------------------------------
// master solve
// -----------------------------------------------------------------------------

struct MasterOptions {
  double alpha = 0.0;
  double t0 = 0.0;
  double t1 = 1.0;
  std::size_t steps = 10;
  std::string input;
  std::string p0;
  std::string method = "mlf";
  std::size_t substeps = 1024;
  std::string output;
};

void cmd_master_solve(const MasterOptions& o, const RunConfig& cfg) {
  const fe::GraphLaplacian a(fe::csv::read_matrix(o.input));
  const fe::ProbabilityVector p0(fe::csv::read_vector(o.p0));
  (void)fe::MlfParams(o.alpha, 1.0);
  const auto times = linspace(o.t0, o.t1, o.steps);
  fe::Diagnostics diag;
  std::vector<fe::ProbabilityVector> solution;
  if (o.method == "mlf") {
    solution = o.alpha == 1.0 ? fe::solve_master(fe::MemoryKernel::delta(), a, p0, times, &diag)
                              : fe::solve_fractional_master_mlf(a, o.alpha, p0, times, &diag);
  } else if (o.method == "timestep") {
    for (double t : times) {
      solution.push_back(t == 0.0 ? p0
                                  : fe::solve_fractional_master_timestep(a, o.alpha, p0, t, o.substeps, &diag));
    }
  } else {
    throw fe::DomainError("--method must be mlf or timestep");
  }
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  for (const auto& warning : diag.warnings) w.comment("warning: " + warning);
  std::vector<std::string> header{"t"};
  for (Eigen::Index j = 0; j < a.dim(); ++j) header.push_back("p" + std::to_string(j + 1));
  w.header(header);
  for (std::size_t k = 0; k < times.size(); ++k) {
    std::vector<std::string> row{fe::csv::format(times[k])};
    for (Eigen::Index j = 0; j < a.dim(); ++j) row.push_back(fe::csv::format(solution[k][j]));
    w.row(row);
  }
}

// -----------------------------------------------------------------------------
// ssa schlogl
// -----------------------------------------------------------------------------

struct SsaOptions {
  double alpha = 0.7;
  std::string waiting = "exp";
  std::size_t n = 10000;
  double t = 50.0;
  std::uint64_t seed = 1;
  std::string trajectory;
  std::string output;
};

void cmd_ssa_schlogl(const SsaOptions& o, const RunConfig& cfg) {
  const auto waiting = parse_waiting(o.waiting, o.alpha);
  const auto network = fe::schlogl_network();
  const auto hist = fe::ensemble_histogram(network, waiting, {o.t}, o.n, o.seed).front();
  Output out(o.output);
  fe::csv::Writer w(out.stream());
  w.comment(cfg.describe());
  std::string modes;
  for (const auto& m : fe::find_modes(hist.counts)) modes += " " + std::to_string(m.location);
  w.comment("modes:" + modes);
  w.header({"state", "count"});
  for (std::size_t x = 0; x < hist.counts.size(); ++x) w.row_of(x, hist.counts[x]);
  if (!o.trajectory.empty()) {
    fe::RngStream rng(o.seed, 0);
    const auto traj = fe::simulate_trajectory(network, waiting, o.t, rng);
    Output tout(o.trajectory);
    fe::csv::Writer tw(tout.stream());
    tw.comment(cfg.describe());
    tw.header({"time", "state"});
    tw.row_of(0.0, traj.initial_state);
    for (std::size_t k = 0; k < traj.times.size(); ++k) tw.row_of(traj.times[k], traj.states[k]);
  }
}

// -----------------------------------------------------------------------------
// figures
// -----------------------------------------------------------------------------

struct FigureOptions {
  std::string outdir = "figures";
  std::uint64_t seed = 1;
  std::size_t n = 10000;
  double t = 50.0;
  double fig1_alpha = 0.5;
  double fig1_t = 5.0;
  std::size_t fig1_steps = 200;
  std::size_t master_steps = 400;
  std::vector<std::string> only;
};

bool wanted(const FigureOptions& o, const std::string& name) {
  return o.only.empty() || std::find(o.only.begin(), o.only.end(), name) != o.only.end();
}

std::ofstream open_figure(const FigureOptions& o, const std::string& name) {
  const auto path = std::filesystem::path(o.outdir) / name;
  std::ofstream f(path);
  if (!f) throw fe::DomainError("cannot write " + path.string());
  return f;
}

// Compound interest in discrete steps and continuously; at alpha = 1 the
// fractional columns are the classical ones.
void figure1(const FigureOptions& o, const RunConfig& cfg) {
  const double alpha = o.fig1_alpha;
  (void)fe::MlfParams(alpha, 1.0);
  const auto classical = fe::euler_classic(o.fig1_t, o.fig1_steps);
  const auto fractional =
      alpha == 1.0 ? classical : fe::frac_euler(alpha, fe::Sign::plus, o.fig1_t, o.fig1_steps);
  auto f = open_figure(o, "fig1.csv");
  fe::csv::Writer w(f);
  w.comment(cfg.describe());
  w.header({"t", "fractional_discrete", "fractional_continuous", "classical_discrete", "classical_continuous"});
  const fe::MlfParams params(alpha, 1.0);
  for (std::size_t j = 0; j <= o.fig1_steps; ++j) {
    const double t = classical.h * static_cast<double>(j);
    w.row_of(t, fractional.values[j], fe::mlf(params, fe::Sign::plus, t), classical.values[j], std::exp(t));
  }
}

// w_-(s) and v(x) = s w_-(s) with s = exp(x); alpha = 0.9, lambda = 1.
void figure3(const FigureOptions& o, const RunConfig& cfg) {
  const fe::DensitySpec spec(fe::DensityKind::w_minus, fe::MlfParams(0.9, 1.0));
  {
    auto f = open_figure(o, "fig3_density.csv");
    fe::csv::Writer w(f);
    w.comment(cfg.describe() + " panel=w_minus alpha=0.9 lambda=1");
    w.header({"s", "w_minus"});
    for (std::size_t k = 1; k <= 400; ++k) {
      const double s = 5.0 * static_cast<double>(k) / 400.0;
      w.row_of(s, fe::density_eval(spec, s));
    }
  }
  auto f = open_figure(o, "fig3_v.csv");
  fe::csv::Writer w(f);
  w.comment(cfg.describe() + " panel=v alpha=0.9 lambda=1");
  w.header({"x", "v"});
  for (std::size_t k = 0; k <= 400; ++k) {
    const double x = -10.0 + 20.0 * static_cast<double>(k) / 400.0;
    const double s = std::exp(x);
    w.row_of(x, s * fe::density_eval(spec, s));
  }
}

// Survival of unit-rate exponential, Mittag-Leffler and W_+ waiting times.
void figure4(const FigureOptions& o, const RunConfig& cfg) {
  const double alpha = 0.9;
  const auto ml = fe::WaitingTime::mittag_leffler(alpha);
  const auto wp = fe::WaitingTime::wplus(alpha);
  auto f = open_figure(o, "fig4.csv");
  fe::csv::Writer w(f);
  w.comment(cfg.describe() + " alpha=0.9 lambda=1");
  w.header({"t", "exponential", "mittag_leffler", "wplus"});
  for (std::size_t k = 0; k <= 200; ++k) {
    const double t = 10.0 * static_cast<double>(k) / 200.0;
    w.row_of(t, std::exp(-t), ml.survival(1.0, t), wp.survival(1.0, t));
  }
}

// Schlogl: master-equation distributions and SSA histograms at time t.
void figure5(const FigureOptions& o, const RunConfig& cfg) {
  const fe::SchloglParams params;
  constexpr long kCutoff = 800;
  const auto generator = fe::schlogl_generator(params, kCutoff);
  fe::Vector p0 = fe::Vector::Zero(kCutoff + 1);
  p0(params.X0) = 1.0;
  const fe::Vector exp_solution = fe::expm_action(generator, p0, o.t);
  const fe::Vector ml_solution = fe::solve_fractional_master_gl(generator, 0.7, p0, o.t, o.master_steps);
  {
    auto f = open_figure(o, "fig5_master.csv");
    fe::csv::Writer w(f);
    w.comment(cfg.describe() + " panel=master alpha=0.7 cutoff=800");
    w.header({"state", "exponential", "mittag_leffler"});
    for (long x = 0; x <= kCutoff; ++x) w.row_of(x, exp_solution(x), ml_solution(x));
  }
  const auto network = fe::schlogl_network(params);
  const auto exp_hist =
      fe::ensemble_histogram(network, fe::WaitingTime::exponential(), {o.t}, o.n, o.seed).front();
  const auto ml_hist =
      fe::ensemble_histogram(network, fe::WaitingTime::mittag_leffler(0.7), {o.t}, o.n, o.seed).front();
  auto f = open_figure(o, "fig5_ssa.csv");
  fe::csv::Writer w(f);
  w.comment(cfg.describe() + " panel=ssa alpha=0.7");
  auto modes = [](const fe::EnsembleHistogram& h) {
    std::string s;
    for (const auto& m : fe::find_modes(h.counts)) s += " " + std::to_string(m.location);
    return s;
  };
  w.comment("modes exponential:" + modes(exp_hist) + " mittag_leffler:" + modes(ml_hist));
  w.header({"state", "exponential", "mittag_leffler"});
  const std::size_t top = std::max(exp_hist.counts.size(), ml_hist.counts.size());
  for (std::size_t x = 0; x < top; ++x) {
    const std::size_t a = x < exp_hist.counts.size() ? exp_hist.counts[x] : 0;
    const std::size_t b = x < ml_hist.counts.size() ? ml_hist.counts[x] : 0;
    w.row_of(x, a, b);
  }
}

void cmd_figures(const FigureOptions& o, const RunConfig& cfg) {
  for (const auto& name : o.only) {
    if (name != "fig1" && name != "fig3" && name != "fig4" && name != "fig5") {
      throw fe::DomainError("--only accepts fig1, fig3, fig4, fig5; got '" + name + "'");
    }
  }
  std::filesystem::create_directories(o.outdir);
  if (wanted(o, "fig1")) figure1(o, cfg);
  if (wanted(o, "fig3")) figure3(o, cfg);
  if (wanted(o, "fig4")) figure4(o, cfg);
  if (wanted(o, "fig5")) figure5(o, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Euler limits, Mittag-Leffler functions and CTRW simulation"};
  app.set_version_flag("--version", fe::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::function<void()> action;

  // mlf eval / mlf table
  auto* mlf = app.add_subcommand("mlf", "Scalar Mittag-Leffler function");
  mlf->require_subcommand(1);
  MlfOptions mo;
  auto add_mlf_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", mo.alpha, "order, 0 < alpha <= 1")->required();
    sub->add_option("--lambda", mo.lambda, "rate, > 0");
    sub->add_option("--sign", mo.sign, "sign of the argument: + or -");
    sub->add_option("--method", mo.method, "auto, series or integral");
    sub->add_option("-o,--output", mo.output, "output CSV (default stdout)");
  };
  auto* mlf_eval = mlf->add_subcommand("eval", "Evaluate E_alpha(sign lambda t^alpha)");
  add_mlf_common(mlf_eval);
  mlf_eval->add_option("--t", mo.times, "one or more times")->required();
  mlf_eval->callback([&] {
    cfg.command = "mlf eval";
    cfg.track("alpha", mo.alpha);
    cfg.track("lambda", mo.lambda);
    cfg.track("sign", mo.sign);
    cfg.track("t", mo.times);
    cfg.track("method", mo.method);
    action = [&] { cmd_mlf_eval(mo, cfg); };
  });
  auto* mlf_table = mlf->add_subcommand("table", "Tabulate series, integral and dispatcher values");
  add_mlf_common(mlf_table);
  mlf_table->add_option("--t0", mo.t0);
  mlf_table->add_option("--t1", mo.t1);
  mlf_table->add_option("--steps", mo.steps);
  mlf_table->callback([&] {
    cfg.command = "mlf table";
    cfg.track("alpha", mo.alpha);
    cfg.track("lambda", mo.lambda);
    cfg.track("sign", mo.sign);
    cfg.track("t0", mo.t0);
    cfg.track("t1", mo.t1);
    cfg.track("steps", mo.steps);
    action = [&] { cmd_mlf_table(mo, cfg); };
  });

  // euler converge
  auto* euler = app.add_subcommand("euler", "Discrete Euler-limit schemes");
  euler->require_subcommand(1);
  EulerOptions eo;
  auto* converge = euler->add_subcommand("converge", "Error of each scheme as n doubles");
  converge->add_option("--alpha", eo.alphas, "orders (0, 1)");
  converge->add_option("--t", eo.t);
  converge->add_option("--nmin", eo.n_min);
  converge->add_option("--nmax", eo.n_max);
  converge->add_option("--schemes", eo.schemes, "frac_euler gl_scheme weighted_euler");
  converge->add_option("--sign", eo.sign, "sign for frac_euler and weighted_euler");
  converge->add_option("-o,--output", eo.output);
  converge->callback([&] {
    cfg.command = "euler converge";
    cfg.track("alpha", eo.alphas);
    cfg.track("t", eo.t);
    cfg.track("nmin", eo.n_min);
    cfg.track("nmax", eo.n_max);
    cfg.track("schemes", eo.schemes);
    cfg.track("sign", eo.sign);
    action = [&] { cmd_euler_converge(eo, cfg); };
  });

  // sample ml / sample wplus
  auto* sample = app.add_subcommand("sample", "Draw waiting times");
  sample->require_subcommand(1);
  SampleOptions so;
  for (const char* which : {"ml", "wplus"}) {
    auto* sub = sample->add_subcommand(which, std::string("Sample ") + which + " waiting times");
    sub->add_option("--alpha", so.alpha)->required();
    sub->add_option("--lambda", so.lambda);
    sub->add_option("--n", so.n);
    sub->add_option("--seed", so.seed);
    sub->add_option("-o,--output", so.output);
    const bool wplus = std::string(which) == "wplus";
    sub->callback([&, wplus, which] {
      cfg.command = std::string("sample ") + which;
      cfg.track("alpha", so.alpha);
      cfg.track("lambda", so.lambda);
      cfg.track("n", so.n);
      cfg.track("seed", so.seed);
      action = [&, wplus] { cmd_sample(so, cfg, wplus); };
    });
  }

  // matrix mlf
  auto* matrix = app.add_subcommand("matrix", "Matrix Mittag-Leffler functions");
  matrix->require_subcommand(1);
  MatrixOptions xo;
  auto* matrix_mlf = matrix->add_subcommand("mlf", "E_alpha(A t^alpha) of a graph Laplacian");
  matrix_mlf->add_option("--alpha", xo.alpha)->required();
  matrix_mlf->add_option("--t", xo.t);
  matrix_mlf->add_option("--input", xo.input, "matrix CSV with a dim header")->required();
  matrix_mlf->add_option("--method", xo.method, "eig, mixture or postwidder");
  matrix_mlf->add_option("--order", xo.order, "Post-Widder order");
  matrix_mlf->add_option("-o,--output", xo.output);
  matrix_mlf->callback([&] {
    cfg.command = "matrix mlf";
    cfg.track("alpha", xo.alpha);
    cfg.track("t", xo.t);
    cfg.track("input", xo.input);
    cfg.track("method", xo.method);
    cfg.track("order", xo.order);
    action = [&] { cmd_matrix_mlf(xo, cfg); };
  });

  // master solve
  auto* master = app.add_subcommand("master", "Fractional master equation");
  master->require_subcommand(1);
  MasterOptions qo;
  auto* solve = master->add_subcommand("solve", "p(t) for D^alpha p = A p");
  solve->add_option("--alpha", qo.alpha)->required();
  solve->add_option("--t0", qo.t0);
  solve->add_option("--t1", qo.t1);
  solve->add_option("--steps", qo.steps, "number of output intervals");
  solve->add_option("--input", qo.input, "Laplacian CSV")->required();
  solve->add_option("--p0", qo.p0, "initial distribution CSV")->required();
  solve->add_option("--method", qo.method, "mlf or timestep");
  solve->add_option("--substeps", qo.substeps, "time steps of the timestep method");
  solve->add_option("-o,--output", qo.output);
  solve->callback([&] {
    cfg.command = "master solve";
    cfg.track("alpha", qo.alpha);
    cfg.track("t0", qo.t0);
    cfg.track("t1", qo.t1);
    cfg.track("steps", qo.steps);
    cfg.track("input", qo.input);
    cfg.track("p0", qo.p0);
    cfg.track("method", qo.method);
    cfg.track("substeps", qo.substeps);
    action = [&] { cmd_master_solve(qo, cfg); };
  });

  // ssa schlogl
  auto* ssa = app.add_subcommand("ssa", "Stochastic simulation");
  ssa->require_subcommand(1);
  SsaOptions ao;
  auto* schlogl = ssa->add_subcommand("schlogl", "Schlogl ensemble histogram");
  schlogl->add_option("--alpha", ao.alpha);
  schlogl->add_option("--waiting", ao.waiting, "exp, mlf or wplus");
  schlogl->add_option("--n", ao.n, "number of trajectories");
  schlogl->add_option("--t", ao.t, "snapshot time");
  schlogl->add_option("--seed", ao.seed);
  schlogl->add_option("--trajectory", ao.trajectory, "also dump trajectory 0 to this CSV");
  schlogl->add_option("-o,--output", ao.output);
  schlogl->callback([&] {
    cfg.command = "ssa schlogl";
    cfg.track("alpha", ao.alpha);
    cfg.track("waiting", ao.waiting);
    cfg.track("n", ao.n);
    cfg.track("t", ao.t);
    cfg.track("seed", ao.seed);
    action = [&] { cmd_ssa_schlogl(ao, cfg); };
  });

  // figures
  FigureOptions fo;
  auto* figures = app.add_subcommand("figures", "CSV data for the figures");
  figures->add_option("--outdir", fo.outdir);
  figures->add_option("--seed", fo.seed);
  figures->add_option("--n", fo.n, "Schlogl ensemble size");
  figures->add_option("--t", fo.t, "Schlogl snapshot time");
  figures->add_option("--fig1-alpha", fo.fig1_alpha);
  figures->add_option("--fig1-t", fo.fig1_t);
  figures->add_option("--fig1-steps", fo.fig1_steps);
  figures->add_option("--master-steps", fo.master_steps, "time steps of the fractional master solve");
  figures->add_option("--only", fo.only, "subset of fig1 fig3 fig4 fig5");
  figures->callback([&] {
    cfg.command = "figures";
    cfg.track("seed", fo.seed);
    cfg.track("n", fo.n);
    cfg.track("t", fo.t);
    cfg.track("fig1_alpha", fo.fig1_alpha);
    cfg.track("fig1_t", fo.fig1_t);
    cfg.track("fig1_steps", fo.fig1_steps);
    cfg.track("master_steps", fo.master_steps);
    action = [&] { cmd_figures(fo, cfg); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (action) action();
  } catch (const fe::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const fe::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
