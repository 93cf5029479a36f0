#pragma once

// Vector spherical harmonics, surface differential operators and the vector
// actions of the Funk-Minkowski and spherical Hilbert transforms.
//
// Unnormalized basis:  y1 = xi Y,  y2 = grad Y,  y3 = xi x grad Y.
// Stored basis (VectorCoeffs): y1, y2 / sqrt(n(n+1)), y3 / sqrt(n(n+1)).

#include <Eigen/Core>

#include "funksphere/coeffs.hpp"
#include "funksphere/grid.hpp"

namespace funksphere {

/// Unnormalized y^(kind)_{nm}(theta, phi) in Cartesian components.
/// Kinds 2 and 3 need n >= 1. Throws std::domain_error within 1e-12 of a pole.
Eigen::Vector3cd eval_vsh(int kind, int n, int m, double theta, double phi);

/// Same with the y2, y3 normalization of VectorCoeffs.
Eigen::Vector3cd eval_vsh_normalized(int kind, int n, int m, double theta, double phi);

/// Surface gradient of every Y_{nm}, n <= band_limit, at xi, in Cartesian
/// components and ScalarCoeffs packing. Uses the ladder relations for the
/// solid harmonics r^n Y_{nm}, so the poles are regular points.
Eigen::Matrix<Complex, Eigen::Dynamic, 3> harmonic_gradients(int band_limit,
                                                             const Eigen::Vector3d& xi);

/// grad of sum u_{nm} Y_{nm} at any point.
Eigen::Vector3cd eval_gradient(const ScalarCoeffs& c, const Eigen::Vector3d& xi);

/// The field described by v at any point, Cartesian components.
Eigen::Vector3cd eval_vector(const VectorCoeffs& v, const Eigen::Vector3d& xi);

/// Components (v1, v2, radial) in the local frame (e1, e2, xi) at each node.
struct VectorField {
  SphericalGrid grid;
  Eigen::MatrixXcd v1;
  Eigen::MatrixXcd v2;
  Eigen::MatrixXcd radial;

  explicit VectorField(SphericalGrid g);

  /// Projects Cartesian samples fn(xi) onto the local frame.
  template <typename Fn>
  static VectorField sample(const SphericalGrid& g, Fn&& fn) {
    VectorField f(g);
    for (int j = 0; j < g.n_theta(); ++j) {
      for (int k = 0; k < g.n_phi(); ++k) {
        const Eigen::Vector3cd v = fn(g.point(j, k));
        f.store(j, k, v);
      }
    }
    return f;
  }

  /// Writes a Cartesian vector at node (j, k).
  void store(int j, int k, const Eigen::Vector3cd& cartesian);
  /// Cartesian vector at node (j, k).
  Eigen::Vector3cd cartesian(int j, int k) const;
  /// Largest |radial| over the nodes.
  double max_radial() const;
};

VectorField vector_synthesis(const VectorCoeffs& v, const SphericalGrid& grid);

/// Projection onto the orthonormal basis. The tangential channels of degree n
/// need the grid to resolve degree n + 1, so band_limit must be below the
/// grid's band limit. band_limit < 0 picks the largest allowed value.
VectorCoeffs vector_analysis(const VectorField& f, int band_limit = -1);

/// Sum over nodes of w (f . conj h).
Complex inner_product(const VectorField& f, const VectorField& h);

/// grad u: channel 2 = sqrt(n(n+1)) u_{nm}.
VectorCoeffs grad_coeffs(const ScalarCoeffs& c);
/// xi x grad u: channel 3 = sqrt(n(n+1)) u_{nm}.
VectorCoeffs curl_grad_coeffs(const ScalarCoeffs& c);
/// Surface divergence including the 2 v_r term of the radial part.
ScalarCoeffs div_coeffs(const VectorCoeffs& v);
/// Scalar surface rotation of the tangential part; channel 1 is ignored.
ScalarCoeffs curl_coeffs(const VectorCoeffs& v);

/// Unnormalized pure-orbit coefficients:
/// v = sum interior h^(i) + exterior h^(e) + toroidal y3, with
/// h^(i) = n y1 + y2 and h^(e) = -(n+1) y1 + y2. At n = 0 only exterior is
/// used (h^(e)_{00} = -y1_{00}).
struct PureOrbitCoeffs {
  ScalarCoeffs interior;
  ScalarCoeffs exterior;
  ScalarCoeffs toroidal;
};

PureOrbitCoeffs to_pure_orbit(const VectorCoeffs& v);
VectorCoeffs from_pure_orbit(const PureOrbitCoeffs& p);

/// Componentwise great-circle mean of a vector field.
VectorCoeffs vec_funk(const VectorCoeffs& v);
/// Componentwise principal-value 1/(xi . eta) convolution of a vector field.
VectorCoeffs vec_hilbert(const VectorCoeffs& v);

/// xi . v.
ScalarCoeffs dot_radial(const VectorCoeffs& v);
ScalarField dot_radial(const VectorField& f);
/// xi x v.
VectorCoeffs cross_radial(const VectorCoeffs& v);
VectorField cross_radial(const VectorField& f);

}  // namespace funksphere
