#pragma once

#include <complex>

#include <Eigen/Core>

namespace funksphere {

using Complex = std::complex<double>;

/// Which spherical-harmonic degrees a quantity lives on.
enum class Parity { all, even_only, odd_only };

inline bool degree_in(Parity p, int n) {
  switch (p) {
    case Parity::even_only: return n % 2 == 0;
    case Parity::odd_only: return n % 2 != 0;
    case Parity::all: break;
  }
  return true;
}

/// Triangular table u_{nm}, 0 <= n <= band_limit, |m| <= n, packed as n^2 + n + m.
class ScalarCoeffs {
 public:
  ScalarCoeffs() : ScalarCoeffs(0) {}
  explicit ScalarCoeffs(int band_limit);
  ScalarCoeffs(int band_limit, Eigen::VectorXcd values);

  static Eigen::Index size_for(int band_limit) {
    return static_cast<Eigen::Index>(band_limit + 1) * (band_limit + 1);
  }
  static Eigen::Index index(int n, int m) { return static_cast<Eigen::Index>(n) * n + n + m; }

  /// Unit coefficient at (n, m): the spectral form of Y_{nm}.
  static ScalarCoeffs unit(int band_limit, int n, int m);

  int band_limit() const { return band_limit_; }
  Complex& operator()(int n, int m);
  const Complex& operator()(int n, int m) const;
  Eigen::VectorXcd& values() { return values_; }
  const Eigen::VectorXcd& values() const { return values_; }

  /// Copy with band limit changed: extra degrees are zero, dropped degrees are cut.
  ScalarCoeffs resized(int band_limit) const;
  /// Zero every degree above max_degree.
  ScalarCoeffs truncated(int max_degree) const;
  /// Keep only degrees allowed by the parity.
  ScalarCoeffs restricted(Parity p) const;

  /// L2 norm of the degrees allowed by p.
  double norm(Parity p = Parity::all) const;
  double max_abs() const { return values_.size() ? values_.cwiseAbs().maxCoeff() : 0.0; }

  /// u_{n,-m} = (-1)^m conj(u_{nm}) to tolerance, i.e. the field is real-valued.
  bool is_real_field(double tol = 1e-12) const;

  ScalarCoeffs& operator+=(const ScalarCoeffs& o);
  ScalarCoeffs& operator-=(const ScalarCoeffs& o);
  ScalarCoeffs& operator*=(Complex s) {
    values_ *= s;
    return *this;
  }

 private:
  int band_limit_;
  Eigen::VectorXcd values_;
};

inline ScalarCoeffs operator+(ScalarCoeffs a, const ScalarCoeffs& b) { return a += b; }
inline ScalarCoeffs operator-(ScalarCoeffs a, const ScalarCoeffs& b) { return a -= b; }
inline ScalarCoeffs operator-(ScalarCoeffs a) { return a *= -1.0; }
inline ScalarCoeffs operator*(Complex s, ScalarCoeffs a) { return a *= s; }
inline ScalarCoeffs operator*(ScalarCoeffs a, Complex s) { return a *= s; }

/// max |a - b| over all entries; band limits must agree.
double max_abs_diff(const ScalarCoeffs& a, const ScalarCoeffs& b);

/// Coefficients of a vector field in the orthonormal pure-spin basis
/// {y1 = xi Y, y2~ = grad Y / sqrt(n(n+1)), y3~ = xi x grad Y / sqrt(n(n+1))}.
///
/// Channel 1 starts at degree 0; channels 2 and 3 start at degree 1 and
/// their (0, 0) slot is always zero.
class VectorCoeffs {
 public:
  VectorCoeffs() : VectorCoeffs(0) {}
  explicit VectorCoeffs(int band_limit);
  VectorCoeffs(ScalarCoeffs radial, ScalarCoeffs gradient, ScalarCoeffs curl);

  /// Unit coefficient of one normalized basis field.
  static VectorCoeffs unit(int band_limit, int channel, int n, int m);

  int band_limit() const { return radial_.band_limit(); }

  /// Channel 1 (radial, xi Y).
  const ScalarCoeffs& radial() const { return radial_; }
  /// Channel 2 (curl-free, normalized grad Y).
  const ScalarCoeffs& gradient() const { return gradient_; }
  /// Channel 3 (divergence-free, normalized xi x grad Y).
  const ScalarCoeffs& curl() const { return curl_; }
  const ScalarCoeffs& channel(int k) const;

  Complex& operator()(int channel, int n, int m);
  Complex operator()(int channel, int n, int m) const;

  VectorCoeffs resized(int band_limit) const;
  double norm() const;
  double max_abs() const;

  VectorCoeffs& operator+=(const VectorCoeffs& o);
  VectorCoeffs& operator-=(const VectorCoeffs& o);
  VectorCoeffs& operator*=(Complex s);

 private:
  ScalarCoeffs& mutable_channel(int k);

  ScalarCoeffs radial_, gradient_, curl_;
};

inline VectorCoeffs operator+(VectorCoeffs a, const VectorCoeffs& b) { return a += b; }
inline VectorCoeffs operator-(VectorCoeffs a, const VectorCoeffs& b) { return a -= b; }
inline VectorCoeffs operator*(Complex s, VectorCoeffs a) { return a *= s; }

double max_abs_diff(const VectorCoeffs& a, const VectorCoeffs& b);

}  // namespace funksphere
