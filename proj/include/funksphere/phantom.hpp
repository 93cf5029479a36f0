#pragma once

// Test functions and noise for simulated experiments.

#include <cstdint>
#include <random>

#include "funksphere/coeffs.hpp"

namespace funksphere {

/// Real field with independent standard normal coefficients (real symmetry
/// enforced). zero_mean drops the (0, 0) term.
ScalarCoeffs random_real_coeffs(int band_limit, std::mt19937_64& rng, bool zero_mean = false);

/// Tangent field grad a + xi x grad b for random real zero-mean a, b.
VectorCoeffs random_tangent_field(int band_limit, std::mt19937_64& rng);

/// exp(-(1 - xi . xi0) / width^2) projected onto degrees <= band_limit.
ScalarCoeffs gaussian_bump(int band_limit, double theta0, double phi0, double width);

/// Adds sigma * rms(c) Gaussian noise to every coefficient, keeping real fields real.
void add_relative_noise(ScalarCoeffs& c, double sigma, std::mt19937_64& rng);
void add_relative_noise(VectorCoeffs& v, double sigma, std::mt19937_64& rng);

}  // namespace funksphere
