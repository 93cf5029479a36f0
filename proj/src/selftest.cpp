#include "funksphere/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "funksphere/io.hpp"
#include "funksphere/legendre.hpp"
#include "funksphere/oracle.hpp"
#include "funksphere/phantom.hpp"
#include "funksphere/reconstruct.hpp"
#include "funksphere/sht.hpp"
#include "funksphere/simulate.hpp"
#include "funksphere/vsh.hpp"
#include "funksphere/zonal.hpp"

namespace funksphere {

namespace {

constexpr int kDecayLimit = 256;
constexpr double kPi = std::numbers::pi;

double rel(double err, double scale) { return err / std::max(1.0, scale); }

Eigen::Vector3d random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector3d v;
  do {
    v = {normal(rng), normal(rng), normal(rng)};
  } while (v.norm() < 1e-3);
  return v.normalized();
}

// Degree of the component with the largest mass outside `keep`.
double mass_outside(const ScalarCoeffs& c, int keep) {
  double worst = 0.0;
  for (int n = 0; n <= c.band_limit(); ++n) {
    if (n == keep) continue;
    for (int m = -n; m <= n; ++m) worst = std::max(worst, std::abs(c(n, m)));
  }
  return worst;
}

ScalarField gradient_component(const VectorField& v, int axis) {
  ScalarField f(v.grid);
  for (int j = 0; j < v.grid.n_theta(); ++j)
    for (int k = 0; k < v.grid.n_phi(); ++k) f.values(j, k) = v.cartesian(j, k)[axis];
  return f;
}

class Suite {
 public:
  Suite(int n_max, std::uint64_t seed, const std::string& fault)
      : L_(n_max), rng_(seed), funk_(funk_minkowski_spec(std::max(n_max, kDecayLimit))) {
    if (fault == "funk-multiplier") {
      // a multiplier that grows instead of decaying
      for (Eigen::Index n = 2; n < funk_.lambda.size(); n += 2) funk_.lambda[n] *= double(n);
    }
  }

  SelftestReport run() {
    report_.n_max = L_;
    legendre_checks();
    transform_checks();
    vector_checks();
    operator_checks();
    oracle_checks();
    reconstruction_checks();
    decay_checks();
    io_checks();
    return report_;
  }

 private:
  void record(const std::string& name, double error, double tolerance, std::string detail = {}) {
    const bool ok = std::isfinite(error) && error <= tolerance;
    report_.checks.push_back({name, ok, error, tolerance, std::move(detail)});
  }

  // Runs fn and records its error; an exception fails the check.
  void check(const std::string& name, double tolerance, const std::function<double()>& fn) {
    try {
      record(name, fn(), tolerance);
    } catch (const std::exception& e) {
      report_.checks.push_back({name, false, INFINITY, tolerance, e.what()});
    }
  }

  MultiplierSpec funk(int band) const {
    MultiplierSpec m;
    m.lambda = funk_.lambda.head(band + 1);
    m.parity = funk_.parity;
    return m;
  }

  void legendre_checks() {
    check("legendre values", 1e-12, [&] {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      double err = 0.0;
      for (int trial = 0; trial < 20; ++trial) {
        const double t = u(rng_);
        for (int n = 0; n <= L_; ++n) {
          const double zonal = assoc_legendre_normalized(n, 0, t) * std::sqrt(4 * kPi / (2 * n + 1));
          err = std::max(err, std::abs(zonal - legendre_poly(n, t)));
          err = std::max(err, std::abs(legendre_zero(n) - legendre_poly(n, 0.0)));
        }
      }
      return err;
    });
  }

  void transform_checks() {
    const SphericalGrid grid = make_grid(L_);
    check("sht round trip", 1e-11, [&] {
      const ScalarCoeffs c = random_real_coeffs(L_, rng_);
      return rel(max_abs_diff(analysis(synthesis(c, grid)), c), c.max_abs());
    });
    check("scalar orthonormality", 1e-12, [&] {
      double err = 0.0;
      for (int n = 0; n <= L_; ++n) {
        for (int m = -n; m <= n; ++m) {
          const ScalarCoeffs e = ScalarCoeffs::unit(L_, n, m);
          err = std::max(err, max_abs_diff(analysis(synthesis(e, grid)), e));
        }
      }
      return err;
    });
    check("scalar parity", 1e-11, [&] {
      // f(-xi) = f(xi) at the nodes: rows pair as j <-> n_theta-1-j, columns shift by pi
      ScalarCoeffs c = random_real_coeffs(L_, rng_);
      ScalarField f = synthesis(c, grid);
      const int nt = grid.n_theta(), np = grid.n_phi();
      ScalarField even(grid);
      for (int j = 0; j < nt; ++j)
        for (int k = 0; k < np; ++k)
          even.values(j, k) = 0.5 * (f.values(j, k) + f.values(nt - 1 - j, (k + np / 2) % np));
      return analysis(even).norm(Parity::odd_only);
    });
  }

  void vector_checks() {
    const SphericalGrid vgrid = make_grid(L_ + 1);
    check("vector orthonormality", 1e-10, [&] {
      double err = 0.0;
      for (int k = 1; k <= 3; ++k) {
        for (int n = k == 1 ? 0 : 1; n <= L_; ++n) {
          for (int m = -n; m <= n; ++m) {
            const VectorCoeffs e = VectorCoeffs::unit(L_, k, n, m);
            err = std::max(err, max_abs_diff(vector_analysis(vector_synthesis(e, vgrid), L_), e));
          }
        }
      }
      return err;
    });
    check("vector parity", 1e-10, [&] {
      std::uniform_real_distribution<double> th(0.1, kPi - 0.1), ph(0.0, 2 * kPi);
      double err = 0.0;
      for (int trial = 0; trial < 10; ++trial) {
        const double theta = th(rng_), phi = ph(rng_);
        for (int n = 0; n <= L_; ++n) {
          for (int m = -n; m <= n; ++m) {
            for (int kind = n == 0 ? 1 : 1; kind <= (n == 0 ? 1 : 3); ++kind) {
              const double sign = (kind == 3) == (n % 2 == 0) ? 1.0 : -1.0;
              const auto a = eval_vsh_normalized(kind, n, m, theta, phi);
              const auto b = eval_vsh_normalized(kind, n, m, kPi - theta, phi + kPi);
              err = std::max(err, (b - sign * a).norm());
            }
          }
        }
      }
      return err;
    });
    check("ladder gradient", 1e-10, [&] {
      // pole-safe gradient against the theta-derivative form
      std::uniform_real_distribution<double> th(0.1, kPi - 0.1), ph(0.0, 2 * kPi);
      double err = 0.0;
      for (int trial = 0; trial < 10; ++trial) {
        const double theta = th(rng_), phi = ph(rng_);
        const auto g = harmonic_gradients(L_, to_direction(theta, phi));
        for (int n = 1; n <= L_; ++n)
          for (int m = -n; m <= n; ++m)
            err = std::max(err, (g.row(ScalarCoeffs::index(n, m)).transpose() -
                                 eval_vsh(2, n, m, theta, phi)).norm() / n);
      }
      return err;
    });
    check("three-term relations", 1e-10, [&] {
      double err = 0.0;
      const int top = std::min(L_, 6);
      const SphericalGrid g = make_grid(top + 2);
      for (int n = 1; n <= top; ++n) {
        for (int m = -n; m <= n; ++m) {
          const int lim = top + 1;
          for (int which = 0; which < 3; ++which) {
            PureOrbitCoeffs p{ScalarCoeffs(lim), ScalarCoeffs(lim), ScalarCoeffs(lim)};
            int expect = n;
            if (which == 0) { p.interior(n, m) = 1.0; expect = n - 1; }
            if (which == 1) { p.exterior(n, m) = 1.0; expect = n + 1; }
            if (which == 2) p.toroidal(n, m) = 1.0;
            const VectorField f = vector_synthesis(from_pure_orbit(p), g);
            for (int axis = 0; axis < 3; ++axis) {
              const ScalarCoeffs c = analysis(gradient_component(f, axis));
              err = std::max(err, mass_outside(c, expect) / n);
            }
          }
        }
      }
      return err;
    });
    check("pure orbit round trip", 1e-13, [&] {
      VectorCoeffs v(L_);
      const ScalarCoeffs a = random_real_coeffs(L_, rng_), b = random_real_coeffs(L_, rng_, true),
                         c = random_real_coeffs(L_, rng_, true);
      v = VectorCoeffs(a, b, c);
      return rel(max_abs_diff(from_pure_orbit(to_pure_orbit(v)), v), v.max_abs());
    });
  }

  void operator_checks() {
    const SphericalGrid vgrid = make_grid(L_ + 1);
    check("laplace-beltrami eigenvalues", 1e-10, [&] {
      const ScalarCoeffs f = random_real_coeffs(L_, rng_);
      const ScalarCoeffs lap = apply_multiplier(f, laplace_beltrami_spec(L_));
      const VectorCoeffs grad = vector_analysis(vector_synthesis(grad_coeffs(f), vgrid), L_);
      const VectorCoeffs rot = vector_analysis(vector_synthesis(curl_grad_coeffs(f), vgrid), L_);
      return rel(std::max(max_abs_diff(div_coeffs(grad), lap), max_abs_diff(curl_coeffs(rot), lap)),
                 lap.max_abs());
    });
    check("gradient adjointness", 1e-10, [&] {
      const VectorCoeffs v = random_tangent_field(L_, rng_);
      const ScalarCoeffs u = random_real_coeffs(L_, rng_);
      const Complex lhs = inner_product(vector_synthesis(v, vgrid), vector_synthesis(grad_coeffs(u), vgrid));
      const Complex rhs = -inner_product(synthesis(div_coeffs(v), vgrid), synthesis(u, vgrid));
      return rel(std::abs(lhs - rhs), std::abs(lhs));
    });
    check("curl adjointness", 1e-10, [&] {
      const VectorCoeffs v = random_tangent_field(L_, rng_);
      const ScalarCoeffs u = random_real_coeffs(L_, rng_);
      const Complex lhs =
          inner_product(vector_synthesis(v, vgrid), vector_synthesis(curl_grad_coeffs(u), vgrid));
      const Complex rhs = -inner_product(synthesis(curl_coeffs(v), vgrid), synthesis(u, vgrid));
      return rel(std::abs(lhs - rhs), std::abs(lhs));
    });
    check("integration by parts with radial term", 1e-10, [&] {
      // int u grad v = -int v grad u + 2 int xi u v, componentwise
      const ScalarCoeffs u = random_real_coeffs(L_, rng_), v = random_real_coeffs(L_, rng_);
      Eigen::Vector3cd lhs = Eigen::Vector3cd::Zero(), rhs = Eigen::Vector3cd::Zero();
      for (int j = 0; j < vgrid.n_theta(); ++j) {
        for (int k = 0; k < vgrid.n_phi(); ++k) {
          const Eigen::Vector3d xi = vgrid.point(j, k);
          const double w = vgrid.weights()[j] * vgrid.phi_step();
          const Complex uv = eval_point(u, xi), vv = eval_point(v, xi);
          lhs += w * uv * eval_gradient(v, xi);
          rhs += w * (-vv * eval_gradient(u, xi) + 2.0 * uv * vv * xi.cast<Complex>());
        }
      }
      return rel((lhs - rhs).norm(), lhs.norm());
    });
  }

  void oracle_checks() {
    const SphericalGrid grid = make_grid(L_);
    check("funk oracle agreement", 1e-10, [&] {
      const ScalarCoeffs f = random_real_coeffs(L_, rng_);
      const ScalarField spectral = synthesis(apply_multiplier(f, funk(L_)), grid);
      double err = 0.0;
      for (int j = 0; j < grid.n_theta(); ++j)
        for (int k = 0; k < grid.n_phi(); ++k)
          err = std::max(err, std::abs(funk_direct(f, grid.point(j, k)) - spectral.values(j, k)));
      return rel(err, f.max_abs());
    });
    check("oracle antipodal symmetry", 1e-12, [&] {
      const ScalarCoeffs f = random_real_coeffs(L_, rng_);
      double err = 0.0;
      for (int trial = 0; trial < 5; ++trial) {
        const Eigen::Vector3d xi = random_direction(rng_);
        err = std::max(err, std::abs(funk_direct(f, xi) - funk_direct(f, -xi)));
        err = std::max(err, std::abs(hilbert_direct(f, xi, 0.1) + hilbert_direct(f, -xi, 0.1)));
      }
      return rel(err, f.max_abs());
    });
    const int hb = std::min(L_, 7);
    check("hilbert oracle agreement", 1e-6, [&] {
      const ScalarCoeffs f = random_real_coeffs(hb, rng_);
      const ScalarCoeffs sf = apply_multiplier(f, hilbert_spec(hb));
      double err = 0.0;
      for (int trial = 0; trial < 5; ++trial) {
        const Eigen::Vector3d xi = random_direction(rng_);
        err = std::max(err, std::abs(hilbert_extrapolated(f, xi) - eval_point(sf, xi)));
      }
      return rel(err, f.max_abs());
    });
    check("vector funk multipliers", 1e-9, [&] {
      double err = 0.0;
      for (int n = 1; n <= std::min(L_, 5); n += 2) {
        for (int m = -n; m <= n; ++m) {
          for (int which = 0; which < 2; ++which) {
            PureOrbitCoeffs p{ScalarCoeffs(n + 1), ScalarCoeffs(n + 1), ScalarCoeffs(n + 1)};
            (which == 0 ? p.interior : p.exterior)(n, m) = 1.0;
            const VectorCoeffs v = from_pure_orbit(p);
            const double lambda = legendre_zero(which == 0 ? n - 1 : n + 1);
            const Eigen::Vector3d xi = random_direction(rng_);
            const Eigen::Vector3cd mean = great_circle_mean(
                [&](const Eigen::Vector3d& eta) -> Eigen::Vector3cd { return eval_vector(v, eta); },
                xi, 2 * n + 6);
            err = std::max(err, (mean - lambda * eval_vector(v, xi)).norm());
          }
        }
      }
      return err;
    });
    check("vector hilbert multipliers", 1e-6, [&] {
      // componentwise p.v. convolution of the Cartesian field against vec_hilbert
      const int b = std::min(L_, 5);
      const auto q = HilbertQuadrature::for_degree(b + 1);
      const auto& eps = default_eps_schedule();
      VectorCoeffs v(random_real_coeffs(b, rng_), random_real_coeffs(b, rng_, true),
                     random_real_coeffs(b, rng_, true));
      const VectorCoeffs sv = vec_hilbert(v);
      double err = 0.0;
      for (int trial = 0; trial < 3; ++trial) {
        const Eigen::Vector3d xi = random_direction(rng_);
        std::vector<Eigen::Vector3cd> values;
        for (double e : eps) {
          values.push_back(hilbert_direct(
              [&](const Eigen::Vector3d& eta) -> Eigen::Vector3cd { return eval_vector(v, eta); },
              xi, e, q));
        }
        err = std::max(err, (richardson_odd<Eigen::Vector3cd>(eps, values) - eval_vector(sv, xi)).norm());
      }
      return rel(err, v.max_abs());
    });
    check("vector multiplier tables", 1e-13, [&] {
      // eigen-relations of the pure-orbit fields, from the scalar multipliers only
      double err = 0.0;
      const auto expect = [&](const VectorCoeffs& got, const PureOrbitCoeffs& want) {
        err = std::max(err, max_abs_diff(got, from_pure_orbit(want)));
      };
      for (int n = 0; n <= L_; ++n) {
        for (int m = -n; m <= n; ++m) {
          for (int which = 0; which < 3; ++which) {
            if (n == 0 && which != 1) continue;
            PureOrbitCoeffs p{ScalarCoeffs(L_), ScalarCoeffs(L_), ScalarCoeffs(L_)};
            ScalarCoeffs& slot = which == 0 ? p.interior : which == 1 ? p.exterior : p.toroidal;
            slot(n, m) = 1.0;
            const VectorCoeffs v = from_pure_orbit(p);
            PureOrbitCoeffs fp{ScalarCoeffs(L_), ScalarCoeffs(L_), ScalarCoeffs(L_)};
            PureOrbitCoeffs sp = fp;
            ScalarCoeffs& fslot = which == 0 ? fp.interior : which == 1 ? fp.exterior : fp.toroidal;
            ScalarCoeffs& sslot = which == 0 ? sp.interior : which == 1 ? sp.exterior : sp.toroidal;
            const bool odd = n % 2 == 1;
            if (which == 2) {
              if (!odd) fslot(n, m) = legendre_zero(n);
              if (odd) sslot(n, m) = 1.0 / (n * legendre_zero(n - 1));
            } else if (n == 0) {
              sslot(n, m) = 1.0;  // S y1_00 = y1_00
            } else if (odd) {
              fslot(n, m) = legendre_zero(which == 0 ? n - 1 : n + 1);
            } else {
              sslot(n, m) = which == 0 ? -1.0 / (n * legendre_zero(n))
                                       : 1.0 / ((n + 1) * legendre_zero(n));
            }
            expect(vec_funk(v), fp);
            expect(vec_hilbert(v), sp);
          }
        }
      }
      return err;
    });
  }

  void reconstruction_checks() {
    check("reconstruction round trip", 1e-8, [&] {
      const ScalarCoeffs f = random_real_coeffs(L_, rng_);
      const FMPair spectral{apply_multiplier(f, funk(L_)), vec_funk(grad_coeffs(f))};
      const Reconstruction a = reconstruct_full(spectral);
      const Reconstruction b = reconstruct_full(forward_quadrature(f));
      return rel(std::max(max_abs_diff(a.f, f), max_abs_diff(b.f, f)), f.max_abs());
    });
    check("commutator formulation", 1e-10, [&] {
      const ScalarCoeffs f = random_real_coeffs(L_, rng_);
      const FMPair p = forward_spectral(f);
      return rel(max_abs_diff(reconstruct_commutator(p), reconstruct_full(p).f), f.max_abs());
    });
    check("reconstruction operator ordering", 1e-6, [&] {
      // xi . S grad g with S applied to the Cartesian gradient by quadrature
      const int b = std::min(L_, 7);
      const ScalarCoeffs g = apply_multiplier(random_real_coeffs(b, rng_), funk_minkowski_spec(b));
      const ScalarCoeffs spectral = dot_radial(vec_hilbert(grad_coeffs(g)));
      const auto q = HilbertQuadrature::for_degree(b + 1);
      const auto& eps = default_eps_schedule();
      double err = 0.0;
      for (int trial = 0; trial < 3; ++trial) {
        const Eigen::Vector3d xi = random_direction(rng_);
        std::vector<Eigen::Vector3cd> values;
        for (double e : eps) {
          values.push_back(hilbert_direct(
              [&](const Eigen::Vector3d& eta) -> Eigen::Vector3cd { return eval_gradient(g, eta); },
              xi, e, q));
        }
        const Eigen::Vector3cd s = richardson_odd<Eigen::Vector3cd>(eps, values);
        err = std::max(err, std::abs(xi.cast<Complex>().dot(s) - eval_point(spectral, xi)));
      }
      return rel(err, g.max_abs());
    });
    check("hodge equivalence", 1e-9, [&] {
      double err = 0.0;
      for (int trial = 0; trial < 20; ++trial) {
        const VectorCoeffs v = random_tangent_field(L_, rng_);
        const HodgePair a = helmholtz_hodge(v), b = hodge_oracle(v);
        err = std::max({err, max_abs_diff(a.u, b.u), max_abs_diff(a.v, b.v)});
      }
      return err;
    });
    check("hodge gauge", 0.0, [&] {
      const HodgePair h = helmholtz_hodge(random_tangent_field(L_, rng_));
      return std::abs(h.u(0, 0)) + std::abs(h.v(0, 0));
    });
    check("hodge orthogonality", 1e-10, [&] {
      const SphericalGrid vgrid = make_grid(L_ + 1);
      const VectorCoeffs v = random_tangent_field(L_, rng_);
      const HodgePair h = helmholtz_hodge(v);
      const Complex ip = inner_product(vector_synthesis(grad_coeffs(h.u), vgrid),
                                       vector_synthesis(curl_grad_coeffs(h.v), vgrid));
      return rel(std::abs(ip), v.norm() * v.norm());
    });
    check("rubin inversion", 1e-7, [&] {
      const ScalarCoeffs f = random_real_coeffs(L_, rng_).restricted(Parity::even_only);
      const ScalarCoeffs g = apply_multiplier(f, funk_minkowski_spec(L_));
      return rel(std::max(max_abs_diff(invert_even_rubin(g), f),
                          max_abs_diff(invert_even_spectral(g), f)),
                 f.max_abs());
    });
  }

  // |lambda_n| sqrt(n + 1) for F on even n and |lambda_n| sqrt(n) for S on odd n
  // must stay in [0.6, 1.3].
  void decay_checks() {
    const auto band = [&](const std::string& name, const MultiplierSpec& m, int offset) {
      double lo = INFINITY, hi = -INFINITY;
      for (int n = 0; n <= kDecayLimit; ++n) {
        if (!degree_in(m.parity, n)) continue;
        const double scaled = std::abs(m.lambda[n]) * std::sqrt(double(n + offset));
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
      }
      std::ostringstream detail;
      detail << "range [" << lo << ", " << hi << "]";
      record(name, std::max({0.0, 0.6 - lo, hi - 1.3}), 0.0, detail.str());
    };
    band("funk multiplier decay", funk(kDecayLimit), 1);
    band("hilbert multiplier decay", hilbert_spec(kDecayLimit), 0);
  }

  void io_checks() {
    check("coefficient file round trip", 0.0, [&] {
      const ScalarCoeffs c = random_real_coeffs(L_, rng_);
      const VectorCoeffs v(random_real_coeffs(L_, rng_), random_real_coeffs(L_, rng_, true),
                           random_real_coeffs(L_, rng_, true));
      std::stringstream a, b;
      write_shcoeff(a, c);
      write_vshcoeff(b, v);
      const ScalarCoeffs c2 = read_shcoeff(a);
      const VectorCoeffs v2 = read_vshcoeff(b);
      const bool same = c2.values() == c.values() && v2.radial().values() == v.radial().values() &&
                        v2.gradient().values() == v.gradient().values() &&
                        v2.curl().values() == v.curl().values();
      return same ? 0.0 : 1.0;
    });
  }

  int L_;
  std::mt19937_64 rng_;
  MultiplierSpec funk_;
  SelftestReport report_;
};

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> SelftestReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

nlohmann::json SelftestReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"tolerance", c.tolerance}};
    j["error"] = std::isfinite(c.error) ? nlohmann::json(c.error) : nlohmann::json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks_json.push_back(j);
  }
  return {{"n_max", n_max}, {"passed", passed()}, {"failures", failures()}, {"checks", checks_json}};
}

const std::vector<std::string>& selftest_faults() {
  static const std::vector<std::string> faults{"funk-multiplier"};
  return faults;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  if (options.n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (!options.fault.empty()) {
    const auto& f = selftest_faults();
    if (std::find(f.begin(), f.end(), options.fault) == f.end()) {
      throw std::invalid_argument("unknown fault '" + options.fault + "'");
    }
  }
  return Suite(options.n_max, options.seed, options.fault).run();
}

}  // namespace funksphere
