#include "funksphere/simulate.hpp"

#include "funksphere/oracle.hpp"
#include "funksphere/parallel.hpp"
#include "funksphere/phantom.hpp"
#include "funksphere/sht.hpp"
#include "funksphere/vsh.hpp"
#include "funksphere/zonal.hpp"

namespace funksphere {

ScalarCoeffs make_phantom(const PhantomSpec& spec, int n_max, std::mt19937_64& rng) {
  switch (spec.kind) {
    case PhantomSpec::Kind::harmonic: return ScalarCoeffs::unit(n_max, spec.degree, spec.order);
    case PhantomSpec::Kind::gaussian_bump:
      return gaussian_bump(n_max, spec.theta0, spec.phi0, spec.width);
    case PhantomSpec::Kind::random_bandlimited: break;
  }
  return random_real_coeffs(n_max, rng);
}

FMPair forward_spectral(const ScalarCoeffs& f) {
  return {apply_multiplier(f, funk_minkowski_spec(f.band_limit())), vec_funk(grad_coeffs(f))};
}

FMPair forward_quadrature(const ScalarCoeffs& f) {
  const int L = f.band_limit();

  const SphericalGrid sgrid = make_grid(L);
  ScalarField g(sgrid);
  parallel_for(0, sgrid.n_theta(), [&](std::ptrdiff_t j) {
    for (int k = 0; k < sgrid.n_phi(); ++k) {
      g.values(j, k) = funk_direct(f, sgrid.point(static_cast<int>(j), k));
    }
  });

  // the Cartesian gradient components have degree L + 1
  const SphericalGrid vgrid = make_grid(L + 1);
  const int n_omega = 2 * L + 4;
  auto gradient = [&](const Eigen::Vector3d& eta) -> Eigen::Vector3cd { return eval_gradient(f, eta); };
  std::vector<Eigen::Vector3cd> means(static_cast<std::size_t>(vgrid.n_theta() * vgrid.n_phi()));
  parallel_for(0, vgrid.n_theta(), [&](std::ptrdiff_t j) {
    for (int k = 0; k < vgrid.n_phi(); ++k) {
      means[static_cast<std::size_t>(j * vgrid.n_phi() + k)] =
          great_circle_mean(gradient, vgrid.point(static_cast<int>(j), k), n_omega);
    }
  });
  VectorField h(vgrid);
  for (int j = 0; j < vgrid.n_theta(); ++j)
    for (int k = 0; k < vgrid.n_phi(); ++k) h.store(j, k, means[static_cast<std::size_t>(j * vgrid.n_phi() + k)]);

  return {analysis(g, L), vector_analysis(h, L)};
}

Simulation simulate(const ExperimentConfig& config) {
  std::mt19937_64 rng(config.seed);
  Simulation s;
  s.phantom = make_phantom(config.phantom, config.n_max, rng);
  s.data = config.forward == ForwardMode::spectral ? forward_spectral(s.phantom)
                                                   : forward_quadrature(s.phantom);
  add_relative_noise(s.data.g, config.noise_sigma, rng);
  add_relative_noise(s.data.h, config.noise_sigma, rng);
  return s;
}

}  // namespace funksphere
