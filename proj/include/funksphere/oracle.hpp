#pragma once

// Quadrature realizations of the great-circle mean and of the principal-value
// 1/(xi . eta) convolution. Slow and simple on purpose: they check the
// spectral multipliers, they are never used to compute them.

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "funksphere/coeffs.hpp"
#include "funksphere/grid.hpp"

namespace funksphere {

/// Moving triad (e1, e2, xi) with e1 = d xi / d theta, e2 = (1/sin theta) d xi / d phi.
struct LocalFrame {
  Eigen::Vector3d e1;
  Eigen::Vector3d e2;
  Eigen::Vector3d xi;
};

/// Throws std::domain_error when sin(theta) < 1e-12.
LocalFrame frame_at(double theta, double phi);

/// Any direction: frame_at off the poles, the phi -> 0 limit of the triad at a pole.
LocalFrame transverse_frame(const Eigen::Vector3d& xi);

/// Mean of fn over the great circle orthogonal to xi, trapezoid rule with
/// n_omega nodes. fn may return a scalar or an Eigen vector.
template <typename Fn>
auto great_circle_mean(Fn&& fn, const Eigen::Vector3d& xi, int n_omega) {
  if (n_omega < 1) throw std::invalid_argument("n_omega must be positive");
  const LocalFrame frame = transverse_frame(xi);
  const double step = 2.0 * std::numbers::pi / n_omega;
  using Value = std::decay_t<decltype(fn(frame.e1))>;
  Value acc = fn(frame.e1);
  for (int k = 1; k < n_omega; ++k) {
    const double w = k * step;
    acc += fn(Eigen::Vector3d(frame.e1 * std::cos(w) + frame.e2 * std::sin(w)));
  }
  // an explicit Value so no Eigen expression outlives acc
  return Value(acc / double(n_omega));
}

/// Funk-Minkowski transform of a band-limited function at xi.
/// n_omega must be at least 2 band_limit + 2.
Complex funk_direct(const ScalarCoeffs& c, const Eigen::Vector3d& xi, int n_omega);
Complex funk_direct(const ScalarCoeffs& c, const Eigen::Vector3d& xi);

/// Nodes for the epsilon-truncated principal-value integral.
struct HilbertQuadrature {
  int t_nodes;
  int omega_nodes;
  /// Exact for functions whose restriction to the sphere has degree <= band_limit.
  static HilbertQuadrature for_degree(int band_limit) {
    return {band_limit + 2, 2 * band_limit + 2};
  }
};

/// (1/4 pi) int_{|xi . eta| > eps} fn(eta) / (xi . eta) d eta.
///
/// Bands at t and -t are paired, so the integrand is
/// (circle integral at t - circle integral at -t) / t on [eps, 1].
template <typename Fn>
auto hilbert_direct(Fn&& fn, const Eigen::Vector3d& xi, double eps, HilbertQuadrature q) {
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("eps must lie in (0, 0.5]");
  const LocalFrame frame = transverse_frame(xi);
  Eigen::VectorXd x, w;
  gauss_legendre(q.t_nodes, x, w);
  const double half = 0.5 * (1.0 - eps);
  const double step = 2.0 * std::numbers::pi / q.omega_nodes;
  using Value = std::decay_t<decltype(fn(frame.xi))>;
  Value total = fn(frame.xi) * 0.0;
  for (int i = 0; i < q.t_nodes; ++i) {
    const double t = eps + half * (x[i] + 1.0);
    const double r = std::sqrt((1.0 - t) * (1.0 + t));
    Value band = total * 0.0;
    for (int k = 0; k < q.omega_nodes; ++k) {
      const double om = k * step;
      const Eigen::Vector3d u = frame.e1 * std::cos(om) + frame.e2 * std::sin(om);
      band += fn(Eigen::Vector3d(t * frame.xi + r * u));
      band -= fn(Eigen::Vector3d(-t * frame.xi + r * u));
    }
    total += band * (half * w[i] * step / t);
  }
  return Value(total / (4.0 * std::numbers::pi));
}

Complex hilbert_direct(const ScalarCoeffs& c, const Eigen::Vector3d& xi, double eps);

/// Cutoffs used for extrapolation to eps -> 0.
inline const std::vector<double>& default_eps_schedule() {
  static const std::vector<double> schedule{0.2, 0.1, 0.05, 0.025};
  return schedule;
}

/// Extrapolates values[i] measured at eps[i] to eps = 0.
///
/// The truncated p.v. integral differs from its limit by an odd function of
/// eps, so the model is a + b1 eps + b3 eps^3 + b5 eps^5 + ...
template <typename Value>
Value richardson_odd(std::span<const double> eps, std::span<const Value> values) {
  const auto k = static_cast<Eigen::Index>(eps.size());
  if (k == 0 || values.size() != eps.size()) {
    throw std::invalid_argument("richardson_odd needs matching non-empty inputs");
  }
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    a(i, 0) = 1.0;
    for (Eigen::Index p = 1; p < k; ++p) a(i, p) = std::pow(eps[i], 2 * p - 1);
  }
  // value at eps = 0 is the first solution component: row 0 of a^{-1}
  const Eigen::RowVectorXd weights = a.inverse().row(0);
  Value out = values[0] * weights[0];
  for (Eigen::Index i = 1; i < k; ++i) out += values[static_cast<std::size_t>(i)] * weights[i];
  return out;
}

/// hilbert_direct over default_eps_schedule(), extrapolated to eps = 0.
Complex hilbert_extrapolated(const ScalarCoeffs& c, const Eigen::Vector3d& xi);

}  // namespace funksphere
