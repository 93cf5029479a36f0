#include "funksphere/vsh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "funksphere/errors.hpp"
#include "funksphere/legendre.hpp"
#include "funksphere/oracle.hpp"
#include "funksphere/parallel.hpp"
#include "funksphere/sht.hpp"
#include "fourier.hpp"

namespace funksphere {

namespace {

constexpr Complex I{0.0, 1.0};

double root_nn1(int n) { return std::sqrt(double(n) * (n + 1)); }

// sqrt((2n+1)(n^2-m^2)/(2n-1)): couples d/dtheta of degree n to degree n-1.
double derivative_coupling(int n, int m) {
  return std::sqrt((2.0 * n + 1.0) * (double(n) * n - double(m) * m) / (2.0 * n - 1.0));
}

// Theta part, its theta derivative and m Theta / sin(theta) for one order at one node.
struct ThetaParts {
  std::vector<double> value, dtheta, over_sin;
  std::vector<double> raw;
};

void theta_parts(int m, int band, double t, ThetaParts& out) {
  const int am = std::abs(m);
  const auto count = static_cast<std::size_t>(band - am + 1);
  out.value.assign(count, 0.0);
  out.dtheta.assign(count, 0.0);
  out.over_sin.assign(count, 0.0);
  if (band < am) return;
  out.raw.assign(count, 0.0);
  assoc_legendre_column(am, band, t, out.raw);
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  const double sign = detail::phase_sign(m);
  for (int n = am; n <= band; ++n) {
    const auto i = static_cast<std::size_t>(n - am);
    const double p = out.raw[i];
    const double below = n > am ? out.raw[i - 1] : 0.0;
    out.dtheta[i] = sign * (n * t * p - (n > am ? derivative_coupling(n, am) * below : 0.0)) / s;
    out.over_sin[i] = sign * m * p / s;
    out.value[i] = sign * p;
  }
}

void require_grid_for_vectors(int band, const SphericalGrid& g) {
  if (band + 1 > g.band_limit()) {
    throw BandLimitMismatch("vector fields of band limit " + std::to_string(band) +
                            " need a grid of band limit " + std::to_string(band + 1) + ", got " +
                            std::to_string(g.band_limit()));
  }
}

}  // namespace

Eigen::Vector3cd eval_vsh(int kind, int n, int m, double theta, double phi) {
  if (kind < 1 || kind > 3) throw std::invalid_argument("vsh kind must be 1, 2 or 3");
  const DegreeOrder nm(n, m);
  if (kind != 1 && n < 1) throw std::domain_error("tangential vsh need n >= 1");
  const LocalFrame f = frame_at(theta, phi);
  const Complex e{std::cos(m * phi), std::sin(m * phi)};
  ThetaParts p;
  theta_parts(m, n, std::cos(theta), p);
  const double value = p.value.back(), a = p.dtheta.back(), b = p.over_sin.back();
  switch (kind) {
    case 1: return f.xi.cast<Complex>() * (value * e);
    case 2: return (f.e1.cast<Complex>() * a + f.e2.cast<Complex>() * (I * b)) * e;
    default: return (f.e2.cast<Complex>() * a - f.e1.cast<Complex>() * (I * b)) * e;
  }
}

Eigen::Vector3cd eval_vsh_normalized(int kind, int n, int m, double theta, double phi) {
  const Eigen::Vector3cd y = eval_vsh(kind, n, m, theta, phi);
  return kind == 1 ? y : Eigen::Vector3cd(y / root_nn1(n));
}

Eigen::Matrix<Complex, Eigen::Dynamic, 3> harmonic_gradients(int band_limit,
                                                             const Eigen::Vector3d& xi) {
  const Eigen::Vector3d u = xi.normalized();
  const Eigen::VectorXcd y = harmonic_values(band_limit, u);
  Eigen::Matrix<Complex, Eigen::Dynamic, 3> g(y.size(), 3);
  g.setZero();
  auto lower = [&](int n, int m) -> Complex {
    return std::abs(m) <= n ? y[ScalarCoeffs::index(n, m)] : Complex{};
  };
  for (int n = 1; n <= band_limit; ++n) {
    const double c = std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0));
    for (int m = -n; m <= n; ++m) {
      // gradient of the solid harmonic r^n Y_{nm} by the ladder relations
      const Complex dz = c * std::sqrt(double(n + m) * (n - m)) * lower(n - 1, m);
      const Complex up = c * std::sqrt(double(n - m) * (n - m - 1)) * lower(n - 1, m + 1);
      const Complex down = -c * std::sqrt(double(n + m) * (n + m - 1)) * lower(n - 1, m - 1);
      const auto i = ScalarCoeffs::index(n, m);
      const Complex radial = double(n) * y[i];
      g(i, 0) = 0.5 * (up + down) - radial * u.x();
      g(i, 1) = (up - down) / (2.0 * I) - radial * u.y();
      g(i, 2) = dz - radial * u.z();
    }
  }
  return g;
}

Eigen::Vector3cd eval_gradient(const ScalarCoeffs& c, const Eigen::Vector3d& xi) {
  return harmonic_gradients(c.band_limit(), xi).transpose() * c.values();
}

Eigen::Vector3cd eval_vector(const VectorCoeffs& v, const Eigen::Vector3d& xi) {
  const int L = v.band_limit();
  const Eigen::Vector3d u = xi.normalized();
  const Eigen::VectorXcd y = harmonic_values(L, u);
  const auto g = harmonic_gradients(L, u);
  Eigen::VectorXcd c2 = v.gradient().values(), c3 = v.curl().values();
  for (int n = 1; n <= L; ++n) {
    const double r = root_nn1(n);
    for (int m = -n; m <= n; ++m) {
      c2[ScalarCoeffs::index(n, m)] /= r;
      c3[ScalarCoeffs::index(n, m)] /= r;
    }
  }
  const Eigen::Vector3cd grad2 = g.transpose() * c2;
  const Eigen::Vector3cd grad3 = g.transpose() * c3;
  // Eigen conjugates complex cross products, so cross the parts
  const Eigen::Vector3cd rot = u.cross(Eigen::Vector3d(grad3.real())).cast<Complex>() +
                               Complex(0.0, 1.0) * u.cross(Eigen::Vector3d(grad3.imag())).cast<Complex>();
  return u.cast<Complex>() * v.radial().values().cwiseProduct(y).sum() + grad2 + rot;
}

VectorField::VectorField(SphericalGrid g)
    : grid(std::move(g)),
      v1(Eigen::MatrixXcd::Zero(grid.n_theta(), grid.n_phi())),
      v2(v1),
      radial(v1) {}

void VectorField::store(int j, int k, const Eigen::Vector3cd& c) {
  const LocalFrame f = frame_at(grid.theta()[j], grid.phi(k));
  v1(j, k) = f.e1.cast<Complex>().dot(c);
  v2(j, k) = f.e2.cast<Complex>().dot(c);
  radial(j, k) = f.xi.cast<Complex>().dot(c);
}

Eigen::Vector3cd VectorField::cartesian(int j, int k) const {
  const LocalFrame f = frame_at(grid.theta()[j], grid.phi(k));
  return f.e1.cast<Complex>() * v1(j, k) + f.e2.cast<Complex>() * v2(j, k) +
         f.xi.cast<Complex>() * radial(j, k);
}

double VectorField::max_radial() const {
  return radial.size() ? radial.cwiseAbs().maxCoeff() : 0.0;
}

VectorField vector_synthesis(const VectorCoeffs& v, const SphericalGrid& grid) {
  const int L = v.band_limit();
  if (L > grid.band_limit()) {
    throw BandLimitMismatch("band limit " + std::to_string(L) + " exceeds grid capacity " +
                            std::to_string(grid.band_limit()));
  }
  const int nt = grid.n_theta();
  Eigen::MatrixXcd r1(nt, 2 * L + 1), r2(nt, 2 * L + 1), rr(nt, 2 * L + 1);
  parallel_for(-L, L + 1, [&](std::ptrdiff_t mm) {
    const int m = static_cast<int>(mm);
    const int am = std::abs(m);
    ThetaParts p;
    for (int j = 0; j < nt; ++j) {
      theta_parts(m, L, grid.cos_theta()[j], p);
      Complex s1 = 0.0, s2 = 0.0, sr = 0.0;
      for (int n = am; n <= L; ++n) {
        const auto i = static_cast<std::size_t>(n - am);
        const auto idx = ScalarCoeffs::index(n, m);
        sr += v.radial().values()[idx] * p.value[i];
        if (n == 0) continue;
        const Complex c2 = v.gradient().values()[idx] / root_nn1(n);
        const Complex c3 = v.curl().values()[idx] / root_nn1(n);
        s1 += c2 * p.dtheta[i] - c3 * (I * p.over_sin[i]);
        s2 += c2 * (I * p.over_sin[i]) + c3 * p.dtheta[i];
      }
      r1(j, m + L) = s1;
      r2(j, m + L) = s2;
      rr(j, m + L) = sr;
    }
  });
  VectorField f(grid);
  f.v1 = detail::inverse_rows(grid, r1, L);
  f.v2 = detail::inverse_rows(grid, r2, L);
  f.radial = detail::inverse_rows(grid, rr, L);
  return f;
}

VectorCoeffs vector_analysis(const VectorField& f, int band_limit) {
  const SphericalGrid& g = f.grid;
  const int L = band_limit < 0 ? g.band_limit() - 1 : band_limit;
  if (L < 0) throw BandLimitMismatch("grid too small for vector analysis");
  require_grid_for_vectors(L, g);
  const int nt = g.n_theta();
  const Eigen::MatrixXcd f1 = detail::forward_rows(g, f.v1, L);
  const Eigen::MatrixXcd f2 = detail::forward_rows(g, f.v2, L);
  const Eigen::MatrixXcd fr = detail::forward_rows(g, f.radial, L);
  ScalarCoeffs c1(L), c2(L), c3(L);
  parallel_for(-L, L + 1, [&](std::ptrdiff_t mm) {
    const int m = static_cast<int>(mm);
    const int am = std::abs(m);
    ThetaParts p;
    for (int j = 0; j < nt; ++j) {
      theta_parts(m, L, g.cos_theta()[j], p);
      const double w = g.weights()[j];
      const Complex a1 = f1(j, m + L), a2 = f2(j, m + L), ar = fr(j, m + L);
      for (int n = am; n <= L; ++n) {
        const auto i = static_cast<std::size_t>(n - am);
        const auto idx = ScalarCoeffs::index(n, m);
        c1.values()[idx] += w * p.value[i] * ar;
        if (n == 0) continue;
        const double r = root_nn1(n);
        c2.values()[idx] += w * (p.dtheta[i] * a1 - I * p.over_sin[i] * a2) / r;
        c3.values()[idx] += w * (I * p.over_sin[i] * a1 + p.dtheta[i] * a2) / r;
      }
    }
  });
  return VectorCoeffs(std::move(c1), std::move(c2), std::move(c3));
}

Complex inner_product(const VectorField& f, const VectorField& h) {
  if (!(f.grid == h.grid)) throw BandLimitMismatch("fields live on different grids");
  Complex acc = 0.0;
  for (int j = 0; j < f.grid.n_theta(); ++j) {
    const Complex row = f.v1.row(j).dot(h.v1.row(j)) + f.v2.row(j).dot(h.v2.row(j)) +
                        f.radial.row(j).dot(h.radial.row(j));
    // Eigen's dot conjugates its first argument
    acc += f.grid.weights()[j] * std::conj(row);
  }
  return acc * f.grid.phi_step();
}

VectorCoeffs grad_coeffs(const ScalarCoeffs& c) {
  const int L = c.band_limit();
  VectorCoeffs out(L);
  for (int n = 1; n <= L; ++n)
    for (int m = -n; m <= n; ++m) out(2, n, m) = root_nn1(n) * c(n, m);
  return out;
}

VectorCoeffs curl_grad_coeffs(const ScalarCoeffs& c) {
  const int L = c.band_limit();
  VectorCoeffs out(L);
  for (int n = 1; n <= L; ++n)
    for (int m = -n; m <= n; ++m) out(3, n, m) = root_nn1(n) * c(n, m);
  return out;
}

ScalarCoeffs div_coeffs(const VectorCoeffs& v) {
  const int L = v.band_limit();
  ScalarCoeffs out = 2.0 * v.radial();
  for (int n = 1; n <= L; ++n)
    for (int m = -n; m <= n; ++m) out(n, m) -= root_nn1(n) * v(2, n, m);
  return out;
}

ScalarCoeffs curl_coeffs(const VectorCoeffs& v) {
  const int L = v.band_limit();
  ScalarCoeffs out(L);
  for (int n = 1; n <= L; ++n)
    for (int m = -n; m <= n; ++m) out(n, m) = -root_nn1(n) * v(3, n, m);
  return out;
}

PureOrbitCoeffs to_pure_orbit(const VectorCoeffs& v) {
  const int L = v.band_limit();
  PureOrbitCoeffs p{ScalarCoeffs(L), ScalarCoeffs(L), ScalarCoeffs(L)};
  p.exterior(0, 0) = -v(1, 0, 0);
  for (int n = 1; n <= L; ++n) {
    const double r = root_nn1(n);
    for (int m = -n; m <= n; ++m) {
      const Complex c1 = v(1, n, m), c2 = v(2, n, m) / r;
      p.interior(n, m) = (c1 + double(n + 1) * c2) / double(2 * n + 1);
      p.exterior(n, m) = (-c1 + double(n) * c2) / double(2 * n + 1);
      p.toroidal(n, m) = v(3, n, m) / r;
    }
  }
  return p;
}

VectorCoeffs from_pure_orbit(const PureOrbitCoeffs& p) {
  const int L = p.interior.band_limit();
  if (p.exterior.band_limit() != L || p.toroidal.band_limit() != L) {
    throw BandLimitMismatch("pure-orbit channels disagree on band limit");
  }
  VectorCoeffs v(L);
  v(1, 0, 0) = -p.exterior(0, 0);
  for (int n = 1; n <= L; ++n) {
    const double r = root_nn1(n);
    for (int m = -n; m <= n; ++m) {
      v(1, n, m) = double(n) * p.interior(n, m) - double(n + 1) * p.exterior(n, m);
      v(2, n, m) = r * (p.interior(n, m) + p.exterior(n, m));
      v(3, n, m) = r * p.toroidal(n, m);
    }
  }
  return v;
}

VectorCoeffs vec_funk(const VectorCoeffs& v) {
  const int L = v.band_limit();
  VectorCoeffs out(L);
  for (int n = 1; n <= L; ++n) {
    const double r = root_nn1(n);
    for (int m = -n; m <= n; ++m) {
      if (n % 2 == 1) {
        const double p = legendre_zero(n - 1);
        const Complex a1 = v(1, n, m), a2 = v(2, n, m);
        out(1, n, m) = p * n / r * a2;
        out(2, n, m) = p * r / (n + 1) * a1 + p / (n + 1) * a2;
      } else {
        out(3, n, m) = legendre_zero(n) * v(3, n, m);
      }
    }
  }
  return out;
}

VectorCoeffs vec_hilbert(const VectorCoeffs& v) {
  const int L = v.band_limit();
  VectorCoeffs out(L);
  out(1, 0, 0) = v(1, 0, 0);
  for (int n = 1; n <= L; ++n) {
    const double r = root_nn1(n);
    for (int m = -n; m <= n; ++m) {
      if (n % 2 == 0) {
        const double q = -1.0 / legendre_zero(n);
        const Complex a1 = v(1, n, m), a2 = v(2, n, m);
        out(1, n, m) = q / r * a2;
        out(2, n, m) = q / r * a1 + q / (r * r) * a2;
      } else {
        out(3, n, m) = v(3, n, m) / gegenbauer_three_halves_zero(n);
      }
    }
  }
  return out;
}

ScalarCoeffs dot_radial(const VectorCoeffs& v) { return v.radial(); }

ScalarField dot_radial(const VectorField& f) { return ScalarField(f.grid, f.radial); }

VectorCoeffs cross_radial(const VectorCoeffs& v) {
  const int L = v.band_limit();
  VectorCoeffs out(L);
  for (int n = 1; n <= L; ++n) {
    for (int m = -n; m <= n; ++m) {
      out(2, n, m) = -v(3, n, m);
      out(3, n, m) = v(2, n, m);
    }
  }
  return out;
}

VectorField cross_radial(const VectorField& f) {
  VectorField out(f.grid);
  out.v1 = -f.v2;
  out.v2 = f.v1;
  return out;
}

}  // namespace funksphere
