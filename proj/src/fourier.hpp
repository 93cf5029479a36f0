#pragma once

// Longitude transforms shared by the scalar and vector transforms.

#include <Eigen/Core>

#include "funksphere/coeffs.hpp"
#include "funksphere/grid.hpp"

namespace funksphere::detail {

/// rows(j, m + L) = phi_step * sum_k values(j, k) e^{-i m phi_k}, |m| <= L.
Eigen::MatrixXcd forward_rows(const SphericalGrid& g, const Eigen::MatrixXcd& values, int L);

/// values(j, k) = sum_m rows(j, m + L) e^{i m phi_k}.
Eigen::MatrixXcd inverse_rows(const SphericalGrid& g, const Eigen::MatrixXcd& rows, int L);

inline double phase_sign(int m) { return (m > 0 && (m & 1)) ? -1.0 : 1.0; }

}  // namespace funksphere::detail
