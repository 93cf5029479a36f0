#include "funksphere/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "funksphere/errors.hpp"

namespace funksphere {

namespace {

void check_same(int a, int b) {
  if (a != b) {
    throw BandLimitMismatch("band limits differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

ScalarCoeffs::ScalarCoeffs(int band_limit) : band_limit_(band_limit) {
  if (band_limit < 0) throw std::invalid_argument("negative band limit");
  values_ = Eigen::VectorXcd::Zero(size_for(band_limit));
}

ScalarCoeffs::ScalarCoeffs(int band_limit, Eigen::VectorXcd values)
    : band_limit_(band_limit), values_(std::move(values)) {
  if (band_limit < 0) throw std::invalid_argument("negative band limit");
  if (values_.size() != size_for(band_limit)) {
    throw std::invalid_argument("coefficient vector has wrong length for band limit");
  }
}

ScalarCoeffs ScalarCoeffs::unit(int band_limit, int n, int m) {
  ScalarCoeffs c(band_limit);
  c(n, m) = 1.0;
  return c;
}

Complex& ScalarCoeffs::operator()(int n, int m) {
  if (n < 0 || n > band_limit_ || m < -n || m > n) {
    throw std::out_of_range("coefficient index (" + std::to_string(n) + ", " +
                            std::to_string(m) + ") outside band limit");
  }
  return values_[index(n, m)];
}

const Complex& ScalarCoeffs::operator()(int n, int m) const {
  if (n < 0 || n > band_limit_ || m < -n || m > n) {
    throw std::out_of_range("coefficient index (" + std::to_string(n) + ", " +
                            std::to_string(m) + ") outside band limit");
  }
  return values_[index(n, m)];
}

ScalarCoeffs ScalarCoeffs::resized(int band_limit) const {
  ScalarCoeffs out(band_limit);
  const Eigen::Index common = std::min(values_.size(), out.values_.size());
  out.values_.head(common) = values_.head(common);
  return out;
}

ScalarCoeffs ScalarCoeffs::truncated(int max_degree) const {
  ScalarCoeffs out(*this);
  if (max_degree < band_limit_) {
    const Eigen::Index keep = max_degree < 0 ? 0 : size_for(max_degree);
    out.values_.tail(values_.size() - keep).setZero();
  }
  return out;
}

ScalarCoeffs ScalarCoeffs::restricted(Parity p) const {
  ScalarCoeffs out(*this);
  for (int n = 0; n <= band_limit_; ++n) {
    if (!degree_in(p, n)) out.values_.segment(index(n, -n), 2 * n + 1).setZero();
  }
  return out;
}

double ScalarCoeffs::norm(Parity p) const {
  double sum = 0.0;
  for (int n = 0; n <= band_limit_; ++n) {
    if (degree_in(p, n)) sum += values_.segment(index(n, -n), 2 * n + 1).squaredNorm();
  }
  return std::sqrt(sum);
}

bool ScalarCoeffs::is_real_field(double tol) const {
  for (int n = 0; n <= band_limit_; ++n) {
    for (int m = 0; m <= n; ++m) {
      const Complex expected = ((m & 1) ? -1.0 : 1.0) * std::conj(values_[index(n, m)]);
      if (std::abs(values_[index(n, -m)] - expected) > tol) return false;
    }
  }
  return true;
}

ScalarCoeffs& ScalarCoeffs::operator+=(const ScalarCoeffs& o) {
  check_same(band_limit_, o.band_limit_);
  values_ += o.values_;
  return *this;
}

ScalarCoeffs& ScalarCoeffs::operator-=(const ScalarCoeffs& o) {
  check_same(band_limit_, o.band_limit_);
  values_ -= o.values_;
  return *this;
}

double max_abs_diff(const ScalarCoeffs& a, const ScalarCoeffs& b) {
  check_same(a.band_limit(), b.band_limit());
  if (a.values().size() == 0) return 0.0;
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

VectorCoeffs::VectorCoeffs(int band_limit)
    : radial_(band_limit), gradient_(band_limit), curl_(band_limit) {}

VectorCoeffs::VectorCoeffs(ScalarCoeffs radial, ScalarCoeffs gradient, ScalarCoeffs curl)
    : radial_(std::move(radial)), gradient_(std::move(gradient)), curl_(std::move(curl)) {
  check_same(radial_.band_limit(), gradient_.band_limit());
  check_same(radial_.band_limit(), curl_.band_limit());
  gradient_(0, 0) = 0.0;
  curl_(0, 0) = 0.0;
}

VectorCoeffs VectorCoeffs::unit(int band_limit, int channel, int n, int m) {
  VectorCoeffs v(band_limit);
  v(channel, n, m) = 1.0;
  return v;
}

const ScalarCoeffs& VectorCoeffs::channel(int k) const {
  switch (k) {
    case 1: return radial_;
    case 2: return gradient_;
    case 3: return curl_;
    default: throw std::out_of_range("vector channel must be 1, 2 or 3");
  }
}

Complex& VectorCoeffs::operator()(int channel, int n, int m) {
  if (channel != 1 && n == 0) throw std::out_of_range("tangential channels start at degree 1");
  return mutable_channel(channel)(n, m);
}

ScalarCoeffs& VectorCoeffs::mutable_channel(int k) {
  switch (k) {
    case 1: return radial_;
    case 2: return gradient_;
    case 3: return curl_;
    default: throw std::out_of_range("vector channel must be 1, 2 or 3");
  }
}

Complex VectorCoeffs::operator()(int channel, int n, int m) const {
  return this->channel(channel)(n, m);
}

VectorCoeffs VectorCoeffs::resized(int band_limit) const {
  return {radial_.resized(band_limit), gradient_.resized(band_limit), curl_.resized(band_limit)};
}

double VectorCoeffs::norm() const {
  return std::sqrt(radial_.values().squaredNorm() + gradient_.values().squaredNorm() +
                   curl_.values().squaredNorm());
}

double VectorCoeffs::max_abs() const {
  return std::max({radial_.max_abs(), gradient_.max_abs(), curl_.max_abs()});
}

VectorCoeffs& VectorCoeffs::operator+=(const VectorCoeffs& o) {
  radial_ += o.radial_;
  gradient_ += o.gradient_;
  curl_ += o.curl_;
  return *this;
}

VectorCoeffs& VectorCoeffs::operator-=(const VectorCoeffs& o) {
  radial_ -= o.radial_;
  gradient_ -= o.gradient_;
  curl_ -= o.curl_;
  return *this;
}

VectorCoeffs& VectorCoeffs::operator*=(Complex s) {
  radial_ *= s;
  gradient_ *= s;
  curl_ *= s;
  return *this;
}

double max_abs_diff(const VectorCoeffs& a, const VectorCoeffs& b) {
  return std::max({max_abs_diff(a.radial(), b.radial()), max_abs_diff(a.gradient(), b.gradient()),
                   max_abs_diff(a.curl(), b.curl())});
}

}  // namespace funksphere
