#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "funksphere/errors.hpp"
#include "funksphere/grid.hpp"
#include "funksphere/legendre.hpp"
#include "funksphere/phantom.hpp"
#include "funksphere/sht.hpp"
#include "oracles.hpp"

using namespace funksphere;

namespace {

ScalarCoeffs random_complex(int L, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ScalarCoeffs c(L);
  for (auto& v : c.values()) v = {nd(rng), nd(rng)};
  return c;
}

}  // namespace

TEST_CASE("make_grid shapes and weights") {
  const SphericalGrid g0 = make_grid(0);
  CHECK(g0.n_theta() == 1);
  CHECK(g0.n_phi() == 2);
  CHECK(g0.weights().sum() == doctest::Approx(2.0));
  const SphericalGrid g16 = make_grid(16);
  CHECK(g16.n_theta() == 17);
  CHECK(g16.n_phi() == 34);
  CHECK(g16.band_limit() == 16);
  CHECK(g16.weights().sum() == doctest::Approx(2.0).epsilon(1e-15));
  for (int j = 0; j < g16.n_theta(); ++j) {
    CHECK(g16.theta()[j] > 0.0);
    CHECK(g16.theta()[j] < oracle::pi);
    if (j > 0) CHECK(g16.theta()[j] > g16.theta()[j - 1]);
  }
}

TEST_CASE("Gauss-Legendre exactness") {
  const SphericalGrid g = make_grid(16);
  double t2 = 0.0, t33 = 0.0, t32 = 0.0;
  for (int j = 0; j < g.n_theta(); ++j) {
    const double t = g.cos_theta()[j];
    t2 += g.weights()[j] * t * t;
    t33 += g.weights()[j] * std::pow(t, 33);
    t32 += g.weights()[j] * std::pow(t, 32);
  }
  CHECK(std::abs(t2 - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(t33) < 1e-15);
  CHECK(std::abs(t32 - 2.0 / 33.0) < 1e-15);
}

TEST_CASE("analysis of constants and single harmonics") {
  const SphericalGrid g = make_grid(8);
  const ScalarField one = ScalarField::sample(g, [](const Eigen::Vector3d&) { return Complex(1.0); });
  const ScalarCoeffs c = analysis(one);
  CHECK(std::abs(c(0, 0) - std::sqrt(4 * oracle::pi)) < 1e-12);
  CHECK(c.norm() == doctest::Approx(std::sqrt(4 * oracle::pi)));

  const ScalarField y53 = ScalarField::sample(g, [](const Eigen::Vector3d& x) {
    const Angles a = to_angles(x);
    return Complex(sph_harmonic(5, 3, a.theta, a.phi));
  });
  const ScalarCoeffs d = analysis(y53);
  for (int n = 0; n <= 8; ++n)
    for (int m = -n; m <= n; ++m)
      CHECK(std::abs(d(n, m) - (n == 5 && m == 3 ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("round trips for several band limits") {
  std::mt19937_64 rng(11);
  for (int L : {0, 1, 2, 4, 8, 16, 32}) {
    const ScalarCoeffs c = random_complex(L, rng);
    const SphericalGrid g = make_grid(L);
    CHECK(max_abs_diff(analysis(synthesis(c, g)), c) < 1e-11);
  }
}

TEST_CASE("synthesis of the unit (0,0) and Parseval") {
  const SphericalGrid g = make_grid(6);
  const ScalarField f = synthesis(ScalarCoeffs::unit(6, 0, 0), g);
  CHECK((f.values.array() - 0.5 / std::sqrt(oracle::pi)).abs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(5);
  const ScalarCoeffs c = random_complex(6, rng);
  const ScalarField h = synthesis(c, g);
  CHECK(std::abs(inner_product(h, h).real() - c.norm() * c.norm()) < 1e-11 * c.norm() * c.norm());
}

TEST_CASE("synthesis on samples of Y_{7,-2} reproduces them") {
  const SphericalGrid g = make_grid(9);
  const ScalarField f = ScalarField::sample(g, [](const Eigen::Vector3d& x) {
    const Angles a = to_angles(x);
    return Complex(sph_harmonic(7, -2, a.theta, a.phi));
  });
  CHECK((synthesis(analysis(f), g).values - f.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inner products") {
  const SphericalGrid g = make_grid(4);
  const ScalarField y21 = synthesis(ScalarCoeffs::unit(4, 2, 1), g);
  const ScalarField y31 = synthesis(ScalarCoeffs::unit(4, 3, 1), g);
  const ScalarField one = ScalarField::sample(g, [](const Eigen::Vector3d&) { return Complex(1.0); });
  CHECK(std::abs(inner_product(y21, y21) - 1.0) < 1e-13);
  CHECK(std::abs(inner_product(y21, y31)) < 1e-13);
  CHECK(std::abs(inner_product(one, one) - 4 * oracle::pi) < 1e-12);
  std::mt19937_64 rng(2);
  const ScalarField a = synthesis(random_complex(4, rng), g), b = synthesis(random_complex(4, rng), g);
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-12);
  CHECK_THROWS_AS(inner_product(a, ScalarField(make_grid(5))), BandLimitMismatch);
}

TEST_CASE("quadrature exactness: Gram matrix of all harmonics") {
  const int L = 6;
  const SphericalGrid g = make_grid(L);
  std::vector<ScalarField> fields;
  for (int n = 0; n <= L; ++n)
    for (int m = -n; m <= n; ++m) fields.push_back(synthesis(ScalarCoeffs::unit(L, n, m), g));
  double worst = 0.0;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = 0; j < fields.size(); ++j)
      worst = std::max(worst, std::abs(inner_product(fields[i], fields[j]) - (i == j ? 1.0 : 0.0)));
  CHECK(worst < 1e-12);
}

TEST_CASE("parity on the antipodally closed grid") {
  const int L = 10;
  const SphericalGrid g = make_grid(L);
  std::mt19937_64 rng(9);
  const ScalarCoeffs c = random_real_coeffs(L, rng);
  const ScalarField f = synthesis(c, g);
  ScalarField even(g), odd(g);
  const int nt = g.n_theta(), np = g.n_phi();
  for (int j = 0; j < nt; ++j) {
    for (int k = 0; k < np; ++k) {
      const Complex a = f.values(j, k), b = f.values(nt - 1 - j, (k + np / 2) % np);
      even.values(j, k) = 0.5 * (a + b);
      odd.values(j, k) = 0.5 * (a - b);
    }
  }
  CHECK(analysis(even).norm(Parity::odd_only) < 1e-11);
  CHECK(analysis(odd).norm(Parity::even_only) < 1e-11);
  CHECK(max_abs_diff(analysis(even), c.restricted(Parity::even_only)) < 1e-11);
}

TEST_CASE("grid too small is rejected") {
  const ScalarCoeffs c(6);
  CHECK_THROWS_AS(synthesis(c, make_grid(5)), BandLimitMismatch);
  CHECK_THROWS_AS(analysis(ScalarField(make_grid(5)), 6), BandLimitMismatch);
}

TEST_CASE("eval_point") {
  const ScalarCoeffs one = [] {
    ScalarCoeffs c(3);
    c(0, 0) = std::sqrt(4 * oracle::pi);
    return c;
  }();
  CHECK(std::abs(eval_point(one, 1.1, 2.3) - 1.0) < 1e-14);
  CHECK(std::abs(eval_point(ScalarCoeffs::unit(2, 1, 0), 0.0, 0.0) - std::sqrt(3 / (4 * oracle::pi))) < 1e-15);

  std::mt19937_64 rng(4);
  const ScalarCoeffs c = random_complex(7, rng);
  const SphericalGrid g = make_grid(7);
  const ScalarField f = synthesis(c, g);
  for (int j = 0; j < g.n_theta(); ++j)
    for (int k = 0; k < g.n_phi(); ++k)
      CHECK(std::abs(eval_point(c, g.point(j, k)) - f.values(j, k)) < 1e-12);
}

TEST_CASE("real-field flag") {
  std::mt19937_64 rng(1);
  ScalarCoeffs c = random_real_coeffs(5, rng);
  CHECK(c.is_real_field());
  const ScalarField f = synthesis(c, make_grid(5));
  CHECK(f.values.imag().cwiseAbs().maxCoeff() < 1e-12);
  c(3, 2) += Complex(0.0, 1e-3);
  CHECK_FALSE(c.is_real_field());
}
