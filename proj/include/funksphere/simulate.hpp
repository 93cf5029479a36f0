#pragma once

// Phantoms and simulated measurements g = F f, h = F grad f.

#include <random>

#include "funksphere/config.hpp"
#include "funksphere/reconstruct.hpp"

namespace funksphere {

ScalarCoeffs make_phantom(const PhantomSpec& spec, int n_max, std::mt19937_64& rng);

/// Multiplier arithmetic.
FMPair forward_spectral(const ScalarCoeffs& f);

/// Great-circle means evaluated by quadrature at grid nodes, then analysed.
FMPair forward_quadrature(const ScalarCoeffs& f);

/// Phantom plus noisy data as described by the config.
struct Simulation {
  ScalarCoeffs phantom;
  FMPair data;
};
Simulation simulate(const ExperimentConfig& config);

}  // namespace funksphere
