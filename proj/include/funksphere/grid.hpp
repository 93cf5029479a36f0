#pragma once

#include <complex>

#include <Eigen/Core>

namespace funksphere {

/// Gauss-Legendre nodes in t = cos(theta) times equispaced longitudes.
///
/// Rows run from north to south (theta ascending, t descending); no node sits
/// on a pole. A grid with n_theta rows and n_phi columns integrates every
/// band-limited product exactly up to degree 2 n_theta - 1 in t and trig
/// degree n_phi - 1 in phi.
class SphericalGrid {
 public:
  SphericalGrid(int n_theta, int n_phi);

  int n_theta() const { return static_cast<int>(cos_theta_.size()); }
  int n_phi() const { return n_phi_; }
  /// Largest band limit the grid analyses exactly.
  int band_limit() const;

  const Eigen::VectorXd& cos_theta() const { return cos_theta_; }
  const Eigen::VectorXd& theta() const { return theta_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double phi_step() const { return phi_step_; }
  double phi(int k) const { return phi_step_ * k; }
  Eigen::Vector3d point(int j, int k) const;

  bool operator==(const SphericalGrid& other) const {
    return n_theta() == other.n_theta() && n_phi_ == other.n_phi_;
  }

 private:
  int n_phi_;
  double phi_step_;
  Eigen::VectorXd cos_theta_;
  Eigen::VectorXd theta_;
  Eigen::VectorXd weights_;
};

/// (band_limit + 1) x (2 band_limit + 2) grid. The even longitude count keeps
/// the node set closed under the antipodal map.
SphericalGrid make_grid(int band_limit);

/// Gauss-Legendre rule on [-1, 1], nodes descending.
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// Point values of a scalar function, indexed (theta row, phi column).
struct ScalarField {
  SphericalGrid grid;
  Eigen::MatrixXcd values;

  explicit ScalarField(SphericalGrid g)
      : grid(std::move(g)), values(Eigen::MatrixXcd::Zero(grid.n_theta(), grid.n_phi())) {}
  ScalarField(SphericalGrid g, Eigen::MatrixXcd v);

  template <typename Fn>
  static ScalarField sample(const SphericalGrid& g, Fn&& fn) {
    ScalarField f(g);
    for (int j = 0; j < g.n_theta(); ++j)
      for (int k = 0; k < g.n_phi(); ++k) f.values(j, k) = fn(g.point(j, k));
    return f;
  }
};

}  // namespace funksphere
