#pragma once

// Recovery of a function from its great-circle means and the means of its
// gradient, and the Helmholtz-Hodge potentials of a tangent field, both as
// compositions of the Funk-Minkowski and spherical Hilbert multipliers.

#include "funksphere/coeffs.hpp"

namespace funksphere {

/// g = F f and h = F grad f (componentwise).
struct FMPair {
  ScalarCoeffs g;
  VectorCoeffs h;
};

/// Potentials of a tangent field f = grad u + xi x grad v, both zero mean.
struct HodgePair {
  ScalarCoeffs u;
  ScalarCoeffs v;
};

struct ReconstructOptions {
  /// Zero degrees above this before inverting; negative keeps everything.
  int truncate = -1;
  /// Relative residual above which the pair is reported inconsistent.
  double consistency_tolerance = 1e-8;
};

struct Reconstruction {
  ScalarCoeffs f;
  /// ||F f - g|| / max(1, ||g||).
  double residual_g = 0.0;
  /// ||F grad f - h|| / max(1, ||h||).
  double residual_h = 0.0;
  bool consistent = true;
};

/// f = mean(g) - xi . S grad g + S (eta . h).
/// Never throws on inconsistent data; check Reconstruction::consistent.
Reconstruction reconstruct_full(const FMPair& p, const ReconstructOptions& options = {});

/// Same result through the commutator F grad f - grad F f.
ScalarCoeffs reconstruct_commutator(const FMPair& p);

/// Even part of f from g = F f by dividing by P_n(0).
/// Throws KernelViolation if g carries odd mass above tolerance.
ScalarCoeffs invert_even_spectral(const ScalarCoeffs& g, double tolerance = 1e-8);

/// Even part of f from g by mean(g) + Laplace-Beltrami of the ln|t| convolution.
ScalarCoeffs invert_even_rubin(const ScalarCoeffs& g, double tolerance = 1e-8);

/// u = S(eta . F f) - F(eta . S f), v = xi . S(eta x F f) - xi . F(eta x S f).
/// Throws KernelViolation if the radial channel exceeds tolerance.
HodgePair helmholtz_hodge(const VectorCoeffs& fvec, double tolerance = 1e-10);

/// u with grad u = fvec. Throws KernelViolation if fvec has a
/// divergence-free or radial part above tolerance.
ScalarCoeffs solve_surface_gradient(const VectorCoeffs& fvec, double tolerance = 1e-10);

/// Direct projection: u_{nm} = f2_{nm} / sqrt(n(n+1)), v_{nm} = f3_{nm} / sqrt(n(n+1)).
HodgePair hodge_oracle(const VectorCoeffs& fvec);

}  // namespace funksphere
