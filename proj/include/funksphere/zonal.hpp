#pragma once

// Fourier multiplier operators: every zonal convolution on the sphere acts
// diagonally on spherical-harmonic degree.

#include <functional>

#include <Eigen/Core>

#include "funksphere/coeffs.hpp"

namespace funksphere {

/// Degree-indexed multipliers lambda_n, n = 0..band_limit, with the set of
/// degrees the operator keeps. Degrees outside the parity are exactly zero.
struct MultiplierSpec {
  Eigen::VectorXd lambda;
  Parity parity = Parity::all;

  int band_limit() const { return static_cast<int>(lambda.size()) - 1; }
  /// Throws std::invalid_argument if an entry is non-finite or a degree
  /// outside the parity carries a nonzero multiplier.
  void validate() const;
};

/// u_{nm} -> lambda_n u_{nm}.
ScalarCoeffs apply_multiplier(const ScalarCoeffs& c, const MultiplierSpec& m);

/// Pointwise product of two multiplier sequences (operator composition).
MultiplierSpec compose(const MultiplierSpec& a, const MultiplierSpec& b);

MultiplierSpec identity_spec(int band_limit);

/// Great-circle mean: lambda_n = P_n(0) on even degrees.
MultiplierSpec funk_minkowski_spec(int band_limit);

/// Principal-value 1/(xi . eta) convolution over 4 pi: lambda_n = 1/(n P_{n-1}(0))
/// on odd degrees.
MultiplierSpec hilbert_spec(int band_limit);

/// lambda_n = -n(n+1).
MultiplierSpec laplace_beltrami_spec(int band_limit);

enum class KernelQuadrature {
  /// Plain Gauss-Legendre on [-1, 1].
  gauss_legendre,
  /// Fold onto [0, 1] and grade nodes toward t = 0 with t = s^4; for kernels
  /// with an integrable singularity at the equator.
  graded_at_origin,
};

/// Funk-Hecke multipliers lambda_n = 2 pi int_{-1}^{1} K(t) P_n(t) dt.
/// quad_order must be at least band_limit + 1; a non-finite kernel sample
/// throws std::domain_error.
MultiplierSpec funk_hecke_spec(const std::function<double(double)>& kernel, int band_limit,
                               int quad_order,
                               KernelQuadrature rule = KernelQuadrature::gauss_legendre);

/// Node count used for the ln|t| kernel.
int log_kernel_quad_order(int band_limit);

/// Funk-Hecke multipliers of K(t) = ln|t| / (4 pi).
MultiplierSpec log_kernel_spec(int band_limit);

struct PseudoInverseOptions {
  /// Largest L2 mass tolerated on annihilated degrees.
  double kernel_tolerance = 1e-8;
  /// Multipliers smaller than this on the kept degrees make the inversion ill-posed.
  double multiplier_floor = 1e-14;
};

/// Divides kept degrees by lambda_n and zeroes annihilated ones.
/// Throws KernelViolation or IllPosed.
ScalarCoeffs pseudo_inverse(const MultiplierSpec& m, const ScalarCoeffs& c,
                            const PseudoInverseOptions& options = {});

}  // namespace funksphere
