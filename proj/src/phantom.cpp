#include "funksphere/phantom.hpp"

#include <cmath>

#include "funksphere/sht.hpp"
#include "funksphere/vsh.hpp"

namespace funksphere {

namespace {

// Draws u_{nm} for m >= 0 and mirrors u_{n,-m} = (-1)^m conj(u_{nm}).
void fill_real(ScalarCoeffs& c, int first_degree, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (int n = first_degree; n <= c.band_limit(); ++n) {
    c(n, 0) += scale * normal(rng);
    for (int m = 1; m <= n; ++m) {
      const Complex z{scale * normal(rng), scale * normal(rng)};
      c(n, m) += z;
      c(n, -m) += (m % 2 ? -1.0 : 1.0) * std::conj(z);
    }
  }
}

double rms(const ScalarCoeffs& c) {
  const auto count = c.values().size();
  return count ? c.norm() / std::sqrt(double(count)) : 0.0;
}

}  // namespace

ScalarCoeffs random_real_coeffs(int band_limit, std::mt19937_64& rng, bool zero_mean) {
  ScalarCoeffs c(band_limit);
  fill_real(c, zero_mean ? 1 : 0, 1.0, rng);
  return c;
}

VectorCoeffs random_tangent_field(int band_limit, std::mt19937_64& rng) {
  const ScalarCoeffs a = random_real_coeffs(band_limit, rng, true);
  const ScalarCoeffs b = random_real_coeffs(band_limit, rng, true);
  return grad_coeffs(a) + curl_grad_coeffs(b);
}

ScalarCoeffs gaussian_bump(int band_limit, double theta0, double phi0, double width) {
  const Eigen::Vector3d center = to_direction(theta0, phi0);
  const double inv = 1.0 / (width * width);
  // oversample so the projection is accurate for the smooth bump
  const SphericalGrid grid = make_grid(2 * band_limit + 16);
  const ScalarField f = ScalarField::sample(
      grid, [&](const Eigen::Vector3d& xi) { return Complex(std::exp(-(1.0 - xi.dot(center)) * inv)); });
  ScalarCoeffs c = analysis(f, band_limit);
  // the exact projection is real; remove rounding asymmetry
  for (int n = 0; n <= band_limit; ++n) {
    c(n, 0) = c(n, 0).real();
    for (int m = 1; m <= n; ++m) c(n, -m) = (m % 2 ? -1.0 : 1.0) * std::conj(c(n, m));
  }
  return c;
}

void add_relative_noise(ScalarCoeffs& c, double sigma, std::mt19937_64& rng) {
  if (sigma <= 0.0) return;
  fill_real(c, 0, sigma * rms(c), rng);
}

void add_relative_noise(VectorCoeffs& v, double sigma, std::mt19937_64& rng) {
  if (sigma <= 0.0) return;
  const double scale = sigma * v.norm() / std::sqrt(3.0 * ScalarCoeffs::size_for(v.band_limit()));
  for (int k = 1; k <= 3; ++k) {
    ScalarCoeffs noise(v.band_limit());
    fill_real(noise, k == 1 ? 0 : 1, scale, rng);
    for (int n = k == 1 ? 0 : 1; n <= v.band_limit(); ++n)
      for (int m = -n; m <= n; ++m) v(k, n, m) += noise(n, m);
  }
}

}  // namespace funksphere
