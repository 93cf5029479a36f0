#pragma once

// Scalar spherical harmonic transform on Gauss-Legendre grids.

#include <Eigen/Core>

#include "funksphere/coeffs.hpp"
#include "funksphere/grid.hpp"

namespace funksphere {

/// Colatitude and longitude of a (not necessarily normalized) direction.
struct Angles {
  double theta;
  double phi;
};
Angles to_angles(const Eigen::Vector3d& xi);
Eigen::Vector3d to_direction(double theta, double phi);

/// u_{nm} = (f, Y_{nm}) by a longitude DFT followed by Gauss-Legendre
/// summation. band_limit < 0 means "the grid's own band limit".
ScalarCoeffs analysis(const ScalarField& f, int band_limit = -1);

/// sum_{nm} u_{nm} Y_{nm} at every grid node.
ScalarField synthesis(const ScalarCoeffs& c, const SphericalGrid& grid);

/// (f, h) = integral of f conj(h) over the sphere by grid quadrature.
Complex inner_product(const ScalarField& f, const ScalarField& h);

/// All Y_{nm}(xi), n <= band_limit, in ScalarCoeffs packing.
Eigen::VectorXcd harmonic_values(int band_limit, const Eigen::Vector3d& xi);

/// Direct summation of the series at one point.
Complex eval_point(const ScalarCoeffs& c, double theta, double phi);
Complex eval_point(const ScalarCoeffs& c, const Eigen::Vector3d& xi);

}  // namespace funksphere
