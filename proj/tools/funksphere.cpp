// funksphere: simulate great-circle data, reconstruct, decompose, self-test.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "funksphere/config.hpp"
#include "funksphere/errors.hpp"
#include "funksphere/io.hpp"
#include "funksphere/reconstruct.hpp"
#include "funksphere/selftest.hpp"
#include "funksphere/sht.hpp"
#include "funksphere/simulate.hpp"
#include "funksphere/vsh.hpp"
#include "funksphere/zonal.hpp"

namespace fs = std::filesystem;
using namespace funksphere;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Input problems the user can fix: bad files, bad values, inconsistent sizes.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigOptions {
  std::string config_path;
  std::optional<int> n_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> phantom;
  std::optional<double> noise_sigma;
  std::optional<std::string> forward;
  std::optional<std::string> output_dir;
  std::optional<int> truncate;

  void attach(CLI::App& app, bool experiment) {
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--output-dir", output_dir, "Directory for output files");
    app.add_option("--n-max", n_max, "Band limit");
    app.add_option("--seed", seed, "Random seed");
    if (experiment) {
      app.add_option("--phantom", phantom,
                     "random-bandlimited | 'harmonic N l' | 'gaussian-bump theta0 phi0 width'");
      app.add_option("--noise-sigma", noise_sigma, "Relative Gaussian noise on the data");
      app.add_option("--forward", forward, "spectral | quadrature")
          ->check(CLI::IsMember({"spectral", "quadrature"}));
    }
    app.add_option("--truncate", truncate, "Zero degrees above this before inverting");
  }

  ExperimentConfig resolve() const {
    ExperimentConfig c = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
    if (n_max) c.n_max = *n_max;
    if (seed) c.seed = *seed;
    if (phantom) c.phantom = PhantomSpec::parse(*phantom);
    if (noise_sigma) c.noise_sigma = *noise_sigma;
    if (forward) c.forward = *forward == "spectral" ? ForwardMode::spectral : ForwardMode::quadrature;
    if (output_dir) c.output_dir = *output_dir;
    if (truncate) c.truncate = *truncate;
    return c;
  }
};

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Sup over the nodes of a grid that oversamples the band limit.
double sup_norm(const ScalarCoeffs& c) {
  const ScalarField f = synthesis(c, make_grid(2 * c.band_limit() + 2));
  return f.values.size() ? f.values.cwiseAbs().maxCoeff() : 0.0;
}

int cmd_forward(const ConfigOptions& o) {
  const ExperimentConfig config = o.resolve();
  config.validate();
  fs::create_directories(config.output_dir);
  const auto start = std::chrono::steady_clock::now();
  const Simulation s = simulate(config);
  save_shcoeff(config.output_dir / "g.shcoeff", s.data.g);
  save_vshcoeff(config.output_dir / "h.vshcoeff", s.data.h);
  save_shcoeff(config.output_dir / "phantom.shcoeff", s.phantom);
  save_vshcoeff(config.output_dir / "grad.vshcoeff", grad_coeffs(s.phantom));
  write_json(config.output_dir / "forward.json",
             {{"config", config_to_json(config)}, {"elapsed_seconds", seconds_since(start)}});
  std::cout << "wrote g.shcoeff, h.vshcoeff, phantom.shcoeff, grad.vshcoeff to "
            << config.output_dir.string() << '\n';
  return kOk;
}

int cmd_reconstruct(const ConfigOptions& o, const std::string& g_path, const std::string& h_path,
                    const std::string& truth_path, std::optional<double> max_error) {
  const ExperimentConfig config = o.resolve();
  const auto start = std::chrono::steady_clock::now();
  FMPair pair{load_shcoeff(g_path), load_vshcoeff(h_path)};
  if (pair.g.band_limit() != pair.h.band_limit()) {
    throw UsageError("g has band limit " + std::to_string(pair.g.band_limit()) + " but h has " +
                     std::to_string(pair.h.band_limit()));
  }
  ReconstructOptions ro;
  ro.truncate = config.truncate;
  const Reconstruction r = reconstruct_full(pair, ro);

  fs::create_directories(config.output_dir);
  save_shcoeff(config.output_dir / "f.shcoeff", r.f);
  nlohmann::json report{{"n_max", r.f.band_limit()},
                        {"truncate", config.truncate},
                        {"residual_g", r.residual_g},
                        {"residual_h", r.residual_h},
                        {"consistent", r.consistent},
                        {"is_real_field", r.f.is_real_field(1e-9)}};
  bool accurate = true;
  if (!truth_path.empty()) {
    ScalarCoeffs truth = load_shcoeff(truth_path);
    if (truth.band_limit() != r.f.band_limit()) truth = truth.resized(r.f.band_limit());
    const ScalarCoeffs diff = r.f - truth;
    const double linf = sup_norm(diff);
    report["errors"] = {{"l2", diff.norm()},
                        {"linf", linf},
                        {"coefficient_max", diff.max_abs()},
                        {"relative_l2", diff.norm() / std::max(truth.norm(), 1e-300)}};
    if (max_error) accurate = linf <= *max_error;
    report["accurate"] = accurate;
  }
  report["elapsed_seconds"] = seconds_since(start);
  write_json(config.output_dir / "report.json", report);
  if (!r.consistent) {
    std::cerr << "warning: g and h look inconsistent (residuals " << r.residual_g << ", "
              << r.residual_h << "); result is best effort\n";
  }
  std::cout << report.dump(2) << '\n';
  return accurate ? kOk : kFailure;
}

int cmd_hodge(const ConfigOptions& o, const std::string& field_path, double tangent_tolerance,
              double max_discrepancy) {
  const ExperimentConfig config = o.resolve();
  const auto start = std::chrono::steady_clock::now();
  const VectorCoeffs field = load_vshcoeff(field_path);
  HodgePair split;
  try {
    split = helmholtz_hodge(field, tangent_tolerance);
  } catch (const KernelViolation& e) {
    throw UsageError(e.what());
  }
  const HodgePair oracle = hodge_oracle(field);
  fs::create_directories(config.output_dir);
  save_shcoeff(config.output_dir / "u.shcoeff", split.u);
  save_shcoeff(config.output_dir / "v.shcoeff", split.v);
  save_shcoeff(config.output_dir / "u_oracle.shcoeff", oracle.u);
  save_shcoeff(config.output_dir / "v_oracle.shcoeff", oracle.v);
  const double du = max_abs_diff(split.u, oracle.u), dv = max_abs_diff(split.v, oracle.v);
  const bool agree = du <= max_discrepancy && dv <= max_discrepancy;
  const nlohmann::json report{{"n_max", field.band_limit()},
                              {"discrepancy_u", du},
                              {"discrepancy_v", dv},
                              {"tolerance", max_discrepancy},
                              {"agree", agree},
                              {"elapsed_seconds", seconds_since(start)}};
  write_json(config.output_dir / "report.json", report);
  std::cout << report.dump(2) << '\n';
  return agree ? kOk : kFailure;
}

int cmd_selftest(const ConfigOptions& o, std::optional<int> n_max, const std::string& fault,
                 const std::string& report_path) {
  SelftestOptions s;
  if (!o.config_path.empty()) {
    const ExperimentConfig c = load_config(o.config_path);
    s.n_max = c.n_max;
    s.seed = c.seed;
  }
  if (n_max) s.n_max = *n_max;
  if (o.seed) s.seed = *o.seed;
  s.fault = fault;
  const SelftestReport report = run_selftest(s);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  error=" << c.error
              << " tol=" << c.tolerance;
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << '\n';
  }
  if (!report_path.empty()) write_json(report_path, report.to_json());
  if (!report.passed()) {
    std::cout << "selftest failed:";
    for (const auto& name : report.failures()) std::cout << " \"" << name << '"';
    std::cout << '\n';
    return kFailure;
  }
  std::cout << "selftest passed (" << report.checks.size() << " checks, n_max=" << report.n_max
            << ")\n";
  return kOk;
}

int cmd_multipliers(const std::string& kind, int n_max) {
  MultiplierSpec m;
  if (kind == "funk") m = funk_minkowski_spec(n_max);
  else if (kind == "hilbert") m = hilbert_spec(n_max);
  else if (kind == "laplace") m = laplace_beltrami_spec(n_max);
  else m = log_kernel_spec(n_max);
  std::cout << multiplier_to_json(m).dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction from great-circle means on the sphere"};
  app.require_subcommand(1);

  ConfigOptions forward_opts, recon_opts, hodge_opts, self_opts;

  auto* forward = app.add_subcommand("forward", "Write g = F f and h = F grad f for a phantom");
  forward_opts.attach(*forward, true);

  auto* recon = app.add_subcommand("reconstruct", "Recover f from g and h");
  recon_opts.attach(*recon, false);
  std::string g_path, h_path, truth_path;
  std::optional<double> max_error;
  recon->add_option("--g-file", g_path, "shcoeff file with F f")->required()->check(CLI::ExistingFile);
  recon->add_option("--h-file", h_path, "vshcoeff file with F grad f")->required()->check(CLI::ExistingFile);
  recon->add_option("--truth", truth_path, "shcoeff file with the true f")->check(CLI::ExistingFile);
  recon->add_option("--max-error", max_error, "Exit 1 if the sup error against --truth exceeds this");

  auto* hodge = app.add_subcommand("hodge", "Helmholtz-Hodge potentials of a tangent field");
  hodge_opts.attach(*hodge, false);
  std::string field_path;
  double tangent_tol = 1e-10, max_discrepancy = 1e-9;
  hodge->add_option("--field", field_path, "vshcoeff file")->required()->check(CLI::ExistingFile);
  hodge->add_option("--tangent-tolerance", tangent_tol, "Relative radial mass allowed")
      ->capture_default_str();
  hodge->add_option("--max-discrepancy", max_discrepancy,
                    "Exit 1 if the two decompositions differ by more")
      ->capture_default_str();

  auto* self = app.add_subcommand("selftest", "Run the invariant suite");
  self->add_option("--config", self_opts.config_path, "JSON config file")->check(CLI::ExistingFile);
  std::optional<int> self_n_max;
  std::string fault, report_path;
  self->add_option("--n-max", self_n_max, "Band limit (default 12)");
  self->add_option("--seed", self_opts.seed, "Random seed");
  self->add_option("--report", report_path, "Write the JSON report here");
  self->add_option("--inject-fault", fault, "Test hook: inject a known defect")
      ->check(CLI::IsMember(selftest_faults()))
      ->group("");

  auto* mult = app.add_subcommand("multipliers", "Print a multiplier sequence as JSON");
  std::string kind = "funk";
  int mult_n = 16;
  mult->add_option("--kind", kind, "funk | hilbert | laplace | log")
      ->capture_default_str()
      ->check(CLI::IsMember({"funk", "hilbert", "laplace", "log"}));
  mult->add_option("--n-max", mult_n, "Band limit")->capture_default_str()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*forward) return cmd_forward(forward_opts);
    if (*recon) return cmd_reconstruct(recon_opts, g_path, h_path, truth_path, max_error);
    if (*hodge) return cmd_hodge(hodge_opts, field_path, tangent_tol, max_discrepancy);
    if (*self) return cmd_selftest(self_opts, self_n_max, fault, report_path);
    if (*mult) return cmd_multipliers(kind, mult_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BandLimitMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
