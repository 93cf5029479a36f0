#include "funksphere/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "funksphere/errors.hpp"
#include "funksphere/grid.hpp"
#include "funksphere/legendre.hpp"

namespace funksphere {

void MultiplierSpec::validate() const {
  if (lambda.size() == 0) throw std::invalid_argument("empty multiplier sequence");
  for (int n = 0; n <= band_limit(); ++n) {
    if (!std::isfinite(lambda[n])) {
      throw std::invalid_argument("non-finite multiplier at degree " + std::to_string(n));
    }
    if (!degree_in(parity, n) && lambda[n] != 0.0) {
      throw std::invalid_argument("multiplier at degree " + std::to_string(n) +
                                  " contradicts parity");
    }
  }
}

ScalarCoeffs apply_multiplier(const ScalarCoeffs& c, const MultiplierSpec& m) {
  if (c.band_limit() != m.band_limit()) {
    throw BandLimitMismatch("multiplier band limit " + std::to_string(m.band_limit()) +
                            " does not match coefficients " + std::to_string(c.band_limit()));
  }
  ScalarCoeffs out(c);
  for (int n = 0; n <= c.band_limit(); ++n) {
    out.values().segment(ScalarCoeffs::index(n, -n), 2 * n + 1) *= m.lambda[n];
  }
  return out;
}

MultiplierSpec compose(const MultiplierSpec& a, const MultiplierSpec& b) {
  if (a.band_limit() != b.band_limit()) throw BandLimitMismatch("multiplier band limits differ");
  MultiplierSpec out{a.lambda.cwiseProduct(b.lambda), Parity::all};
  if (a.parity == b.parity) {
    out.parity = a.parity;
  } else if (a.parity == Parity::all) {
    out.parity = b.parity;
  } else if (b.parity == Parity::all) {
    out.parity = a.parity;
  } else {
    // even-only after odd-only: nothing survives
    out.lambda.setZero();
  }
  return out;
}

MultiplierSpec identity_spec(int band_limit) {
  return {Eigen::VectorXd::Ones(band_limit + 1), Parity::all};
}

MultiplierSpec funk_minkowski_spec(int band_limit) {
  MultiplierSpec s{Eigen::VectorXd::Zero(band_limit + 1), Parity::even_only};
  double p = 1.0;
  for (int n = 0; n <= band_limit; n += 2) {
    if (n > 0) p = -p * (n - 1) / n;
    s.lambda[n] = p;
  }
  return s;
}

MultiplierSpec hilbert_spec(int band_limit) {
  MultiplierSpec s{Eigen::VectorXd::Zero(band_limit + 1), Parity::odd_only};
  double p = 1.0;  // P_{n-1}(0)
  for (int n = 1; n <= band_limit; n += 2) {
    if (n > 1) p = -p * (n - 2) / (n - 1);
    s.lambda[n] = 1.0 / (n * p);
  }
  return s;
}

MultiplierSpec laplace_beltrami_spec(int band_limit) {
  MultiplierSpec s{Eigen::VectorXd::Zero(band_limit + 1), Parity::all};
  for (int n = 0; n <= band_limit; ++n) s.lambda[n] = -double(n) * (n + 1);
  return s;
}

MultiplierSpec funk_hecke_spec(const std::function<double(double)>& kernel, int band_limit,
                               int quad_order, KernelQuadrature rule) {
  if (band_limit < 0) throw std::invalid_argument("negative band limit");
  if (quad_order < band_limit + 1) {
    throw std::invalid_argument("quadrature order must be at least band_limit + 1");
  }
  Eigen::VectorXd x, w;
  gauss_legendre(quad_order, x, w);
  MultiplierSpec s{Eigen::VectorXd::Zero(band_limit + 1), Parity::all};

  auto sample = [&](double t) {
    const double k = kernel(t);
    if (!std::isfinite(k)) {
      throw std::domain_error("kernel is not finite at t = " + std::to_string(t));
    }
    return k;
  };
  // accumulate weight * k * P_n(t) for all n by recurrence
  auto accumulate = [&](double t, double weight_times_kernel, double parity_flip_kernel) {
    double p0 = 1.0, p1 = t;
    for (int n = 0; n <= band_limit; ++n) {
      double pn;
      if (n == 0) {
        pn = p0;
      } else if (n == 1) {
        pn = p1;
      } else {
        pn = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = pn;
      }
      const double k = (n % 2 == 0) ? weight_times_kernel + parity_flip_kernel
                                    : weight_times_kernel - parity_flip_kernel;
      s.lambda[n] += k * pn;
    }
  };

  if (rule == KernelQuadrature::gauss_legendre) {
    for (int i = 0; i < quad_order; ++i) accumulate(x[i], w[i] * sample(x[i]), 0.0);
  } else {
    // int_{-1}^{1} K P_n = int_0^1 (K(t) + (-1)^n K(-t)) P_n(t) dt, t = s^4
    for (int i = 0; i < quad_order; ++i) {
      const double s_node = 0.5 * (x[i] + 1.0);
      const double s_weight = 0.5 * w[i];
      const double t = std::pow(s_node, 4);
      const double jac = 4.0 * s_node * s_node * s_node * s_weight;
      accumulate(t, jac * sample(t), jac * sample(-t));
    }
  }
  s.lambda *= 2.0 * std::numbers::pi;
  return s;
}

int log_kernel_quad_order(int band_limit) { return std::max(4 * band_limit, 64); }

MultiplierSpec log_kernel_spec(int band_limit) {
  const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
  return funk_hecke_spec([inv4pi](double t) { return std::log(std::abs(t)) * inv4pi; },
                         band_limit, log_kernel_quad_order(band_limit),
                         KernelQuadrature::graded_at_origin);
}

ScalarCoeffs pseudo_inverse(const MultiplierSpec& m, const ScalarCoeffs& c,
                            const PseudoInverseOptions& options) {
  if (c.band_limit() != m.band_limit()) {
    throw BandLimitMismatch("multiplier and coefficient band limits differ");
  }
  double kernel_mass = 0.0;
  for (int n = 0; n <= c.band_limit(); ++n) {
    if (!degree_in(m.parity, n)) {
      kernel_mass += c.values().segment(ScalarCoeffs::index(n, -n), 2 * n + 1).squaredNorm();
    }
  }
  kernel_mass = std::sqrt(kernel_mass);
  if (kernel_mass > options.kernel_tolerance) {
    throw KernelViolation("input has mass " + std::to_string(kernel_mass) +
                          " on annihilated degrees");
  }
  ScalarCoeffs out(c.band_limit());
  for (int n = 0; n <= c.band_limit(); ++n) {
    if (!degree_in(m.parity, n)) continue;
    if (std::abs(m.lambda[n]) < options.multiplier_floor) {
      throw IllPosed("multiplier at degree " + std::to_string(n) + " is numerically zero");
    }
    const auto seg = ScalarCoeffs::index(n, -n);
    out.values().segment(seg, 2 * n + 1) = c.values().segment(seg, 2 * n + 1) / m.lambda[n];
  }
  return out;
}

}  // namespace funksphere
