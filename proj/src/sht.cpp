#include "funksphere/sht.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "funksphere/errors.hpp"
#include "funksphere/legendre.hpp"
#include "funksphere/parallel.hpp"
#include "fourier.hpp"

namespace funksphere {

namespace detail {

namespace {

// exp(sign * 2 pi i k / n) for k in [0, n)
std::vector<Complex> roots_of_unity(int n, double sign) {
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = sign * 2.0 * std::numbers::pi * k / n;
    w[static_cast<std::size_t>(k)] = {std::cos(a), std::sin(a)};
  }
  return w;
}

int wrap(long long v, int n) {
  const long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

Eigen::MatrixXcd forward_rows(const SphericalGrid& g, const Eigen::MatrixXcd& values, int L) {
  const int nt = g.n_theta(), np = g.n_phi();
  const auto w = roots_of_unity(np, -1.0);
  Eigen::MatrixXcd rows(nt, 2 * L + 1);
  parallel_for(0, nt, [&](std::ptrdiff_t jj) {
    const int j = static_cast<int>(jj);
    for (int m = -L; m <= L; ++m) {
      Complex acc = 0.0;
      for (int k = 0; k < np; ++k) acc += values(j, k) * w[wrap(1LL * m * k, np)];
      rows(j, m + L) = acc * g.phi_step();
    }
  });
  return rows;
}

Eigen::MatrixXcd inverse_rows(const SphericalGrid& g, const Eigen::MatrixXcd& rows, int L) {
  const int nt = g.n_theta(), np = g.n_phi();
  const auto w = roots_of_unity(np, +1.0);
  Eigen::MatrixXcd values(nt, np);
  parallel_for(0, nt, [&](std::ptrdiff_t jj) {
    const int j = static_cast<int>(jj);
    for (int k = 0; k < np; ++k) {
      Complex acc = 0.0;
      for (int m = -L; m <= L; ++m) acc += rows(j, m + L) * w[wrap(1LL * m * k, np)];
      values(j, k) = acc;
    }
  });
  return values;
}

}  // namespace detail

using detail::phase_sign;

Angles to_angles(const Eigen::Vector3d& xi) {
  const double r = xi.norm();
  const double t = std::clamp(xi.z() / r, -1.0, 1.0);
  double phi = std::atan2(xi.y(), xi.x());
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  return {std::acos(t), phi};
}

Eigen::Vector3d to_direction(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

ScalarCoeffs analysis(const ScalarField& f, int band_limit) {
  const SphericalGrid& g = f.grid;
  const int L = band_limit < 0 ? g.band_limit() : band_limit;
  if (L > g.band_limit()) {
    throw BandLimitMismatch("grid supports band limit " + std::to_string(g.band_limit()) +
                            ", requested " + std::to_string(L));
  }
  const int nt = g.n_theta();
  const Eigen::MatrixXcd fourier = detail::forward_rows(g, f.values, L);

  ScalarCoeffs out(L);
  parallel_for(-L, L + 1, [&](std::ptrdiff_t mm) {
    const int m = static_cast<int>(mm);
    const int am = std::abs(m);
    const double sign = phase_sign(m);
    std::vector<double> column(static_cast<std::size_t>(L - am + 1));
    for (int j = 0; j < nt; ++j) {
      assoc_legendre_column(am, L, g.cos_theta()[j], column);
      const Complex weighted = g.weights()[j] * sign * fourier(j, m + L);
      for (int n = am; n <= L; ++n) {
        out.values()[ScalarCoeffs::index(n, m)] += weighted * column[static_cast<std::size_t>(n - am)];
      }
    }
  });
  return out;
}

ScalarField synthesis(const ScalarCoeffs& c, const SphericalGrid& grid) {
  const int L = c.band_limit();
  if (L > grid.band_limit()) {
    throw BandLimitMismatch("band limit " + std::to_string(L) + " exceeds grid capacity " +
                            std::to_string(grid.band_limit()));
  }
  const int nt = grid.n_theta();
  Eigen::MatrixXcd rows(nt, 2 * L + 1);
  parallel_for(-L, L + 1, [&](std::ptrdiff_t mm) {
    const int m = static_cast<int>(mm);
    const int am = std::abs(m);
    const double sign = phase_sign(m);
    std::vector<double> column(static_cast<std::size_t>(L - am + 1));
    for (int j = 0; j < nt; ++j) {
      assoc_legendre_column(am, L, grid.cos_theta()[j], column);
      Complex acc = 0.0;
      for (int n = am; n <= L; ++n) {
        acc += c.values()[ScalarCoeffs::index(n, m)] * column[static_cast<std::size_t>(n - am)];
      }
      rows(j, m + L) = sign * acc;
    }
  });
  return ScalarField(grid, detail::inverse_rows(grid, rows, L));
}

Complex inner_product(const ScalarField& f, const ScalarField& h) {
  if (!(f.grid == h.grid)) throw BandLimitMismatch("fields live on different grids");
  Complex acc = 0.0;
  for (int j = 0; j < f.grid.n_theta(); ++j) {
    Complex row = 0.0;
    for (int k = 0; k < f.grid.n_phi(); ++k) row += f.values(j, k) * std::conj(h.values(j, k));
    acc += f.grid.weights()[j] * row;
  }
  return acc * f.grid.phi_step();
}

Eigen::VectorXcd harmonic_values(int band_limit, const Eigen::Vector3d& xi) {
  const Eigen::Vector3d u = xi.normalized();
  const LegendreTable<double> table(band_limit, std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  Eigen::VectorXcd y(ScalarCoeffs::size_for(band_limit));
  for (int m = 0; m <= band_limit; ++m) {
    const Complex e = {std::cos(m * phi), std::sin(m * phi)};
    const double sign = phase_sign(m);
    for (int n = m; n <= band_limit; ++n) {
      const Complex v = table(n, m) * e;
      y[ScalarCoeffs::index(n, m)] = sign * v;
      // Y_{n,-m} = (-1)^m conj(Y_{nm}) = conj(table * e)
      if (m > 0) y[ScalarCoeffs::index(n, -m)] = std::conj(v);
    }
  }
  return y;
}

Complex eval_point(const ScalarCoeffs& c, const Eigen::Vector3d& xi) {
  return c.values().cwiseProduct(harmonic_values(c.band_limit(), xi)).sum();
}

Complex eval_point(const ScalarCoeffs& c, double theta, double phi) {
  return eval_point(c, to_direction(theta, phi));
}

}  // namespace funksphere
