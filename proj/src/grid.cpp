#include "funksphere/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace funksphere {

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
  nodes.resize(n);
  weights.resize(n);
  const double pi = std::numbers::pi;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // final derivative at converged x
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = x;
    nodes[n - 1 - i] = -x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

SphericalGrid::SphericalGrid(int n_theta, int n_phi) : n_phi_(n_phi) {
  if (n_theta < 1 || n_phi < 1) throw std::invalid_argument("grid dimensions must be positive");
  phi_step_ = 2.0 * std::numbers::pi / n_phi;
  gauss_legendre(n_theta, cos_theta_, weights_);
  theta_ = cos_theta_.array().acos();
}

int SphericalGrid::band_limit() const { return std::min(n_theta() - 1, (n_phi_ - 1) / 2); }

Eigen::Vector3d SphericalGrid::point(int j, int k) const {
  const double t = cos_theta_[j];
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  const double p = phi(k);
  return {s * std::cos(p), s * std::sin(p), t};
}

SphericalGrid make_grid(int band_limit) {
  if (band_limit < 0) throw std::invalid_argument("negative band limit");
  return SphericalGrid(band_limit + 1, 2 * band_limit + 2);
}

ScalarField::ScalarField(SphericalGrid g, Eigen::MatrixXcd v) : grid(std::move(g)), values(std::move(v)) {
  if (values.rows() != grid.n_theta() || values.cols() != grid.n_phi()) {
    throw std::invalid_argument("field dimensions do not match grid");
  }
}

}  // namespace funksphere
