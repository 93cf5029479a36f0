#include "funksphere/oracle.hpp"

#include <string>

#include "funksphere/sht.hpp"

namespace funksphere {

LocalFrame frame_at(double theta, double phi) {
  const double s = std::sin(theta), t = std::cos(theta);
  if (std::abs(s) < 1e-12) throw std::domain_error("local frame is undefined at the poles");
  const double cp = std::cos(phi), sp = std::sin(phi);
  return {{t * cp, t * sp, -s}, {-sp, cp, 0.0}, {s * cp, s * sp, t}};
}

LocalFrame transverse_frame(const Eigen::Vector3d& xi) {
  const Eigen::Vector3d u = xi.normalized();
  const double s = std::hypot(u.x(), u.y());
  if (s >= 1e-12) {
    const Angles a = to_angles(u);
    return frame_at(a.theta, a.phi);
  }
  const double t = u.z() > 0.0 ? 1.0 : -1.0;
  return {{t, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, t}};
}

Complex funk_direct(const ScalarCoeffs& c, const Eigen::Vector3d& xi, int n_omega) {
  if (n_omega < 2 * c.band_limit() + 2) {
    throw std::invalid_argument("n_omega must be at least 2 band_limit + 2, got " +
                                std::to_string(n_omega));
  }
  return great_circle_mean([&](const Eigen::Vector3d& eta) { return eval_point(c, eta); }, xi,
                           n_omega);
}

Complex funk_direct(const ScalarCoeffs& c, const Eigen::Vector3d& xi) {
  return funk_direct(c, xi, 2 * c.band_limit() + 2);
}

Complex hilbert_direct(const ScalarCoeffs& c, const Eigen::Vector3d& xi, double eps) {
  return hilbert_direct([&](const Eigen::Vector3d& eta) { return eval_point(c, eta); }, xi, eps,
                        HilbertQuadrature::for_degree(c.band_limit()));
}

Complex hilbert_extrapolated(const ScalarCoeffs& c, const Eigen::Vector3d& xi) {
  const auto& eps = default_eps_schedule();
  std::vector<Complex> values;
  values.reserve(eps.size());
  for (double e : eps) values.push_back(hilbert_direct(c, xi, e));
  return richardson_odd<Complex>(eps, values);
}

}  // namespace funksphere
