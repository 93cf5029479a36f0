#pragma once

// Closed forms used as independent references by the unit tests. Nothing
// here calls into the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

/// Textbook Y_nm (Condon-Shortley phase) for n <= 3.
inline cd ylm(int n, int m, double theta, double phi) {
  if (m < 0) {
    const cd y = ylm(n, -m, theta, phi);
    return ((-m) % 2 ? -1.0 : 1.0) * std::conj(y);
  }
  const double c = std::cos(theta), s = std::sin(theta);
  const cd e = std::polar(1.0, m * phi);
  switch (n * 10 + m) {
    case 0: return 0.5 / std::sqrt(pi);
    case 10: return std::sqrt(3.0 / (4 * pi)) * c;
    case 11: return -std::sqrt(3.0 / (8 * pi)) * s * e;
    case 20: return std::sqrt(5.0 / (16 * pi)) * (3 * c * c - 1);
    case 21: return -std::sqrt(15.0 / (8 * pi)) * s * c * e;
    case 22: return std::sqrt(15.0 / (32 * pi)) * s * s * e;
    case 30: return std::sqrt(7.0 / (16 * pi)) * (5 * c * c * c - 3 * c);
    case 31: return -std::sqrt(21.0 / (64 * pi)) * s * (5 * c * c - 1) * e;
    case 32: return std::sqrt(105.0 / (32 * pi)) * s * s * c * e;
    case 33: return -std::sqrt(35.0 / (64 * pi)) * s * s * s * e;
    default: throw std::invalid_argument("ylm oracle covers n <= 3 only");
  }
}

/// P_n(0) from the central binomial coefficient via lgamma.
inline double legendre_at_zero(int n) {
  if (n % 2) return 0.0;
  const int j = n / 2;
  const double mag = std::exp(std::lgamma(2.0 * j + 1) - 2 * std::lgamma(j + 1.0) - j * std::log(4.0));
  return j % 2 ? -mag : mag;
}

/// Monomial coefficients a_k of P_n(t) = sum a_k t^k, exact in long double for small n.
inline std::vector<long double> legendre_monomials(int n) {
  std::vector<long double> a(static_cast<std::size_t>(n + 1), 0.0L);
  for (int j = 0; 2 * j <= n; ++j) {
    long double v = std::exp(std::lgamma(2.0L * n - 2 * j + 1) - std::lgamma(j + 1.0L) -
                             std::lgamma(n - j + 1.0L) - std::lgamma(n - 2.0L * j + 1) -
                             n * std::log(2.0L));
    a[static_cast<std::size_t>(n - 2 * j)] = j % 2 ? -v : v;
  }
  return a;
}

/// int_{-1}^{1} ln|t| P_n(t) dt from int_0^1 t^k ln t dt = -1/(k+1)^2.
inline double log_moment(int n) {
  if (n % 2) return 0.0;
  const auto a = legendre_monomials(n);
  long double sum = 0.0L;
  for (int k = 0; k <= n; k += 2) sum -= a[static_cast<std::size_t>(k)] / ((k + 1.0L) * (k + 1.0L));
  return static_cast<double>(2.0L * sum);
}

/// Composite Simpson rule, for smooth one-dimensional references.
template <typename Fn>
double simpson(Fn&& f, double a, double b, int panels) {
  const double h = (b - a) / (2 * panels);
  double s = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace oracle
