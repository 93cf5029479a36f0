// Acceptance runner. `acceptance` checks every criterion, `acceptance k`
// only criterion k. One PASS/FAIL line per criterion; exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "funksphere/grid.hpp"
#include "funksphere/legendre.hpp"
#include "funksphere/oracle.hpp"
#include "funksphere/phantom.hpp"
#include "funksphere/reconstruct.hpp"
#include "funksphere/sht.hpp"
#include "funksphere/simulate.hpp"
#include "funksphere/vsh.hpp"
#include "funksphere/zonal.hpp"

using namespace funksphere;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Eigen::Vector3d random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  return v.normalized();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome multiplier_exactness() {
  const int L = 64;
  std::mt19937_64 rng(101);
  const auto t0 = Clock::now();
  double err = 0.0;
  for (int d = 0; d < 50; ++d) {
    const Eigen::Vector3d xi = random_direction(rng);
    const Eigen::VectorXcd mean = great_circle_mean(
        [&](const Eigen::Vector3d& eta) { return harmonic_values(L, eta); }, xi, 2 * L + 2);
    const Eigen::VectorXcd y = harmonic_values(L, xi);
    for (int n = 0; n <= L; ++n) {
      const double p = legendre_zero(n);
      for (int m = -n; m <= n; ++m) {
        const auto i = ScalarCoeffs::index(n, m);
        err = std::max(err, std::abs(mean[i] - p * y[i]));
      }
    }
  }
  const double t = seconds_since(t0);
  return {err <= 1e-9 && t < 30.0,
          "max |F Y - P_N(0) Y| = " + fmt(err) + " over N <= 64, 50 directions, " + fmt(t) + " s"};
}

Outcome hilbert_convergence() {
  std::mt19937_64 rng(102);
  std::vector<Eigen::Vector3d> dirs{Eigen::Vector3d::UnitZ(), -Eigen::Vector3d::UnitZ()};
  for (int i = 0; i < 8; ++i) dirs.push_back(random_direction(rng));
  double err = 0.0;
  for (int n : {1, 3, 5, 7}) {
    const ScalarCoeffs y = ScalarCoeffs::unit(n, n, 0);
    const double lambda = 1.0 / (n * legendre_zero(n - 1));
    for (const auto& xi : dirs) {
      err = std::max(err, std::abs(hilbert_extrapolated(y, xi) - lambda * eval_point(y, xi)));
    }
  }
  return {err <= 1e-6, "max extrapolation error = " + fmt(err) + " for N in {1,3,5,7}"};
}

Outcome reconstruction_round_trip() {
  const int L = 16;
  std::mt19937_64 rng(103);
  const SphericalGrid fine = make_grid(2 * L + 2);
  const auto t0 = Clock::now();
  double worst = 0.0;
  int failures = 0;
  for (int k = 0; k < 100; ++k) {
    const ScalarCoeffs f = random_real_coeffs(L, rng);
    const Reconstruction r = reconstruct_full(forward_quadrature(f));
    const double e = synthesis(r.f - f, fine).values.cwiseAbs().maxCoeff();
    worst = std::max(worst, e);
    if (!(e <= 1e-8)) ++failures;
  }
  const double t = seconds_since(t0);
  return {failures == 0 && t < 120.0, "worst L-inf error = " + fmt(worst) + " over 100 phantoms, " +
                                          std::to_string(failures) + " above 1e-8, " + fmt(t) + " s"};
}

Outcome hodge_equivalence() {
  std::mt19937_64 rng(104);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const VectorCoeffs v = random_tangent_field(16, rng);
    const HodgePair a = helmholtz_hodge(v), b = hodge_oracle(v);
    worst = std::max({worst, max_abs_diff(a.u, b.u), max_abs_diff(a.v, b.v)});
  }
  return {worst <= 1e-9, "max coefficient discrepancy = " + fmt(worst) + " over 200 fields"};
}

Outcome rubin_identity() {
  const MultiplierSpec lk = log_kernel_spec(24);
  double err = 0.0;
  for (int n = 2; n <= 24; n += 2) {
    // lambda_N = 2 pi int (ln|t| / 4 pi) P_N dt = c_N / 2
    const double c = 2.0 * lk.lambda[n];
    err = std::max(err, std::abs(c + 2.0 / (n * (n + 1) * legendre_zero(n))));
  }
  return {err <= 1e-8, "max |c_N + 2/(N(N+1)P_N(0))| = " + fmt(err) + " for even 2 <= N <= 24"};
}

// Coefficients of a normalized-channel field in the unnormalized basis
// y1, y2 = grad Y, y3 = xi x grad Y, for one (n, m).
Eigen::Vector3cd unnormalized(const VectorCoeffs& v, int n, int m) {
  const double l = std::sqrt(double(n) * (n + 1));
  Eigen::Vector3cd out(v(1, n, m), 0.0, 0.0);
  if (n > 0) {
    out[1] = v(2, n, m) / l;
    out[2] = v(3, n, m) / l;
  }
  return out;
}

Outcome lemma_tables() {
  const int L = 32;
  double err = 0.0;
  for (int n = 0; n <= L; ++n) {
    const double l2 = double(n) * (n + 1);
    const double l = std::sqrt(l2);
    for (int m = -n; m <= n; ++m) {
      for (int k = 1; k <= 3; ++k) {
        if (k > 1 && n == 0) continue;
        // unnormalized input y_k
        const VectorCoeffs in = (k == 1 ? 1.0 : l) * VectorCoeffs::unit(L, k, n, m);
        Eigen::Vector3cd f_expect = Eigen::Vector3cd::Zero(), s_expect = Eigen::Vector3cd::Zero();
        if (n % 2 == 1) {
          const double p = legendre_zero(n - 1);
          if (k == 1) f_expect[1] = p / (n + 1);
          if (k == 2) f_expect << p * n, p / (n + 1), 0.0;
          if (k == 3) s_expect[2] = 1.0 / (n * p);
        } else {
          if (k == 3) f_expect[2] = legendre_zero(n);
          if (n == 0) {
            if (k == 1) s_expect[0] = 1.0;
          } else {
            const double q = -1.0 / legendre_zero(n);
            if (k == 1) s_expect[1] = q / l2;
            if (k == 2) s_expect << q, q / l2, 0.0;
          }
        }
        const VectorCoeffs fo = vec_funk(in), so = vec_hilbert(in);
        err = std::max(err, (unnormalized(fo, n, m) - f_expect).cwiseAbs().maxCoeff());
        err = std::max(err, (unnormalized(so, n, m) - s_expect).cwiseAbs().maxCoeff());
        // nothing leaks into other degrees or orders
        VectorCoeffs rest_f = fo, rest_s = so;
        for (int c = 1; c <= 3; ++c) {
          if (c > 1 && n == 0) continue;
          rest_f(c, n, m) = 0.0;
          rest_s(c, n, m) = 0.0;
        }
        err = std::max({err, rest_f.max_abs(), rest_s.max_abs()});
      }
    }
  }
  return {err <= 1e-13, "max table deviation = " + fmt(err) + " for N <= 32, all orders"};
}

Outcome selftest_exit() {
  const std::string cmd = std::string("\"") + FUNKSPHERE_CLI + "\" selftest --n-max 12 > /dev/null";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code == 0, "funksphere selftest --n-max 12 exited with " + std::to_string(code)};
}

Outcome multiplier_decay() {
  const int L = 256;
  const MultiplierSpec f = funk_minkowski_spec(L), s = hilbert_spec(L);
  std::vector<std::string> bad;
  double lo = 1e300, hi = 0.0;
  for (int n = 1; n <= L; ++n) {
    const MultiplierSpec& m = (n % 2 == 0) ? f : s;
    const double v = std::abs(m.lambda[n]) * std::sqrt(n + 1.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (v < 0.6 || v > 1.3) bad.push_back(std::string(n % 2 == 0 ? "F" : "S") + "@N=" +
                                          std::to_string(n) + ":" + fmt(v));
  }
  std::string detail = "|lambda_N| sqrt(N+1) in [" + fmt(lo) + ", " + fmt(hi) + "]";
  if (!bad.empty()) {
    detail += ", outside [0.6, 1.3]:";
    for (const auto& b : bad) detail += " " + b;
  }
  return {bad.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"multiplier exactness", multiplier_exactness},
      {"hilbert oracle convergence", hilbert_convergence},
      {"reconstruction round trip", reconstruction_round_trip},
      {"hodge equivalence", hodge_equivalence},
      {"log-kernel identity", rubin_identity},
      {"vector multiplier tables", lemma_tables},
      {"structural invariants via selftest", selftest_exit},
      {"multiplier decay", multiplier_decay},
  };
  std::vector<int> which;
  if (argc == 1) {
    for (int k = 1; k <= int(criteria.size()); ++k) which.push_back(k);
  } else {
    for (int i = 1; i < argc; ++i) {
      const int k = std::atoi(argv[i]);
      if (k < 1 || k > int(criteria.size())) {
        std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
        return 2;
      }
      which.push_back(k);
    }
  }
  bool all = true;
  for (int k : which) {
    const auto& [name, fn] = criteria[k - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << k << " (" << name << "): "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
