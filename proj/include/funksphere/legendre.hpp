#pragma once

// Legendre polynomials, fully normalized associated Legendre functions and
// complex spherical harmonics with the Condon-Shortley phase.
//
// Everything here is evaluated by three-term recurrences; no factorials are
// formed, so degrees up to a few thousand stay finite.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace funksphere {

/// Degree/order pair of a spherical harmonic, |order| <= degree.
struct DegreeOrder {
  int degree = 0;
  int order = 0;

  constexpr DegreeOrder() = default;
  DegreeOrder(int n, int m) : degree(n), order(m) {
    if (n < 0 || m < -n || m > n) {
      throw std::domain_error("invalid degree/order (" + std::to_string(n) + ", " +
                              std::to_string(m) + ")");
    }
  }
  friend constexpr bool operator==(const DegreeOrder&, const DegreeOrder&) = default;
};

namespace detail {

template <typename Scalar>
Scalar checked_unit(Scalar t) {
  using std::abs;
  if (!(abs(t) <= Scalar(1) + Scalar(1e-12))) {
    throw std::domain_error("argument outside [-1, 1]");
  }
  if (t > Scalar(1)) return Scalar(1);
  if (t < Scalar(-1)) return Scalar(-1);
  return t;
}

inline void check_degree(int n) {
  if (n < 0) throw std::domain_error("negative degree");
}

}  // namespace detail

/// P_n(t) by the Bonnet recurrence.
template <typename Scalar = double>
Scalar legendre_poly(int n, Scalar t) {
  detail::check_degree(n);
  t = detail::checked_unit(t);
  Scalar p_prev(1);
  if (n == 0) return p_prev;
  Scalar p = t;
  for (int k = 2; k <= n; ++k) {
    const Scalar next = (Scalar(2 * k - 1) * t * p - Scalar(k - 1) * p_prev) / Scalar(k);
    p_prev = p;
    p = next;
  }
  return p;
}

/// P_n(0): zero for odd n, (-1)^j (2j-1)!!/(2j)!! for n = 2j.
template <typename Scalar = double>
Scalar legendre_zero(int n) {
  detail::check_degree(n);
  if (n % 2 != 0) return Scalar(0);
  Scalar p(1);
  for (int j = 1; 2 * j <= n; ++j) {
    p = -p * Scalar(2 * j - 1) / Scalar(2 * j);
  }
  return p;
}

/// C^{(3/2)}_{n-1}(0) = n P_{n-1}(0), defined here for odd n only.
template <typename Scalar = double>
Scalar gegenbauer_three_halves_zero(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::domain_error("gegenbauer_three_halves_zero needs odd n >= 1");
  }
  return Scalar(n) * legendre_zero<Scalar>(n - 1);
}

/// Table of N_{nm} P^m_n(t) (no Condon-Shortley phase) for 0 <= m <= n <= band.
///
/// Packed by degree: entry (n, m) lives at n(n+1)/2 + m.
template <typename Scalar = double>
class LegendreTable {
 public:
  LegendreTable() = default;
  LegendreTable(int band, Scalar t) { compute(band, t); }

  static constexpr std::size_t index(int n, int m) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2 +
           static_cast<std::size_t>(m);
  }

  void compute(int band, Scalar t) {
    detail::check_degree(band);
    t = detail::checked_unit(t);
    band_ = band;
    values_.assign(index(band, band) + 1, Scalar(0));
    using std::sqrt;
    const Scalar s = sqrt((Scalar(1) - t) * (Scalar(1) + t));
    Scalar pmm = Scalar(1) / sqrt(Scalar(4) * std::numbers::pi_v<Scalar>);
    for (int m = 0; m <= band; ++m) {
      if (m > 0) pmm *= sqrt(Scalar(2 * m + 1) / Scalar(2 * m)) * s;
      values_[index(m, m)] = pmm;
      if (m == band) break;
      Scalar p2 = pmm;
      Scalar p1 = sqrt(Scalar(2 * m + 3)) * t * pmm;
      values_[index(m + 1, m)] = p1;
      for (int n = m + 2; n <= band; ++n) {
        const Scalar nn = Scalar(n), mm = Scalar(m);
        const Scalar a = sqrt((Scalar(4) * nn * nn - Scalar(1)) / (nn * nn - mm * mm));
        const Scalar b = sqrt(((nn - 1) * (nn - 1) - mm * mm) /
                              (Scalar(4) * (nn - 1) * (nn - 1) - Scalar(1)));
        const Scalar p = a * (t * p1 - b * p2);
        values_[index(n, m)] = p;
        p2 = p1;
        p1 = p;
      }
    }
  }

  int band() const { return band_; }
  Scalar operator()(int n, int m) const { return values_[index(n, m)]; }

  /// Theta part of Y_{nm} including the phase: Y_{nm} = theta_part(n, m) e^{i m phi}.
  Scalar theta_part(int n, int m) const {
    const int am = m < 0 ? -m : m;
    const Scalar v = values_[index(n, am)];
    return (m > 0 && (m & 1)) ? -v : v;
  }

 private:
  int band_ = -1;
  std::vector<Scalar> values_;
};

/// N_{nm} P^m_n(t) for 0 <= m <= n.
template <typename Scalar = double>
Scalar assoc_legendre_normalized(int n, int m, Scalar t) {
  detail::check_degree(n);
  if (m < 0 || m > n) throw std::domain_error("order outside [0, n]");
  t = detail::checked_unit(t);
  using std::sqrt;
  const Scalar s = sqrt((Scalar(1) - t) * (Scalar(1) + t));
  Scalar pmm = Scalar(1) / sqrt(Scalar(4) * std::numbers::pi_v<Scalar>);
  for (int k = 1; k <= m; ++k) pmm *= sqrt(Scalar(2 * k + 1) / Scalar(2 * k)) * s;
  if (n == m) return pmm;
  Scalar p2 = pmm;
  Scalar p1 = sqrt(Scalar(2 * m + 3)) * t * pmm;
  for (int k = m + 2; k <= n; ++k) {
    const Scalar kk = Scalar(k), mm = Scalar(m);
    const Scalar a = sqrt((Scalar(4) * kk * kk - Scalar(1)) / (kk * kk - mm * mm));
    const Scalar b =
        sqrt(((kk - 1) * (kk - 1) - mm * mm) / (Scalar(4) * (kk - 1) * (kk - 1) - Scalar(1)));
    const Scalar p = a * (t * p1 - b * p2);
    p2 = p1;
    p1 = p;
  }
  return p1;
}

/// N_{nm} P^m_n(t) for fixed m and n = m..band, written to out[n - m].
template <typename Scalar, typename Out>
void assoc_legendre_column(int m, int band, Scalar t, Out& out) {
  using std::sqrt;
  const Scalar s = sqrt((Scalar(1) - t) * (Scalar(1) + t));
  Scalar pmm = Scalar(1) / sqrt(Scalar(4) * std::numbers::pi_v<Scalar>);
  for (int k = 1; k <= m; ++k) pmm *= sqrt(Scalar(2 * k + 1) / Scalar(2 * k)) * s;
  if (band < m) return;
  out[0] = pmm;
  if (band == m) return;
  Scalar p2 = pmm;
  Scalar p1 = sqrt(Scalar(2 * m + 3)) * t * pmm;
  out[1] = p1;
  for (int k = m + 2; k <= band; ++k) {
    const Scalar kk = Scalar(k), mm = Scalar(m);
    const Scalar a = sqrt((Scalar(4) * kk * kk - Scalar(1)) / (kk * kk - mm * mm));
    const Scalar b =
        sqrt(((kk - 1) * (kk - 1) - mm * mm) / (Scalar(4) * (kk - 1) * (kk - 1) - Scalar(1)));
    const Scalar p = a * (t * p1 - b * p2);
    out[k - m] = p;
    p2 = p1;
    p1 = p;
  }
}

/// Y_{nm}(theta, phi) = (-1)^m N_{nm} e^{i m phi} P^m_n(cos theta).
template <typename Scalar = double>
std::complex<Scalar> sph_harmonic(int n, int m, Scalar theta, Scalar phi) {
  detail::check_degree(n);
  if (m < -n || m > n) throw std::domain_error("|order| exceeds degree");
  using std::cos;
  const int am = m < 0 ? -m : m;
  Scalar v = assoc_legendre_normalized<Scalar>(n, am, detail::checked_unit(cos(theta)));
  if (m > 0 && (m & 1)) v = -v;
  using std::sin;
  const Scalar angle = Scalar(m) * phi;
  return {v * cos(angle), v * sin(angle)};
}

}  // namespace funksphere
