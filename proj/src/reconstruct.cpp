#include "funksphere/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "funksphere/errors.hpp"
#include "funksphere/vsh.hpp"
#include "funksphere/zonal.hpp"

namespace funksphere {

namespace {

VectorCoeffs truncated(const VectorCoeffs& v, int max_degree) {
  return VectorCoeffs(v.radial().truncated(max_degree), v.gradient().truncated(max_degree),
                      v.curl().truncated(max_degree));
}

double relative(double diff, double scale) { return diff / std::max(1.0, scale); }

void require_tangent(const VectorCoeffs& v, double tolerance) {
  const double radial = v.radial().norm();
  if (radial > tolerance * std::max(1.0, v.norm())) {
    throw KernelViolation("field is not tangent: radial channel norm " + std::to_string(radial));
  }
}

ScalarCoeffs zero_mean(ScalarCoeffs c) {
  c(0, 0) = 0.0;
  return c;
}

void require_even(const ScalarCoeffs& g, double tolerance) {
  const double odd = g.norm(Parity::odd_only);
  if (odd > tolerance * std::max(1.0, g.norm())) {
    throw KernelViolation("data has odd-degree mass " + std::to_string(odd) +
                          "; great-circle means are even");
  }
}

}  // namespace

Reconstruction reconstruct_full(const FMPair& p, const ReconstructOptions& options) {
  const int L = p.g.band_limit();
  if (p.h.band_limit() != L) {
    throw BandLimitMismatch("g has band limit " + std::to_string(L) + ", h has " +
                            std::to_string(p.h.band_limit()));
  }
  const bool cut = options.truncate >= 0 && options.truncate < L;
  const ScalarCoeffs g = cut ? p.g.truncated(options.truncate) : p.g;
  const VectorCoeffs h = cut ? truncated(p.h, options.truncate) : p.h;

  const MultiplierSpec s = hilbert_spec(L);
  ScalarCoeffs mean(L);
  mean(0, 0) = g(0, 0);
  const ScalarCoeffs even = mean - dot_radial(vec_hilbert(grad_coeffs(g)));
  const ScalarCoeffs odd = apply_multiplier(dot_radial(h), s);

  Reconstruction out;
  out.f = even + odd;
  const MultiplierSpec fm = funk_minkowski_spec(L);
  out.residual_g = relative((apply_multiplier(out.f, fm) - p.g).norm(), p.g.norm());
  out.residual_h = relative((vec_funk(grad_coeffs(out.f)) - p.h).norm(), p.h.norm());
  out.consistent = std::max(out.residual_g, out.residual_h) <= options.consistency_tolerance;
  return out;
}

ScalarCoeffs reconstruct_commutator(const FMPair& p) {
  const int L = p.g.band_limit();
  if (p.h.band_limit() != L) throw BandLimitMismatch("g and h band limits differ");
  const VectorCoeffs commutator = p.h - grad_coeffs(p.g);
  ScalarCoeffs mean(L);
  mean(0, 0) = p.g(0, 0);
  return mean + apply_multiplier(dot_radial(commutator), hilbert_spec(L)) +
         dot_radial(vec_hilbert(commutator));
}

ScalarCoeffs invert_even_spectral(const ScalarCoeffs& g, double tolerance) {
  PseudoInverseOptions o;
  o.kernel_tolerance = tolerance * std::max(1.0, g.norm());
  return pseudo_inverse(funk_minkowski_spec(g.band_limit()), g, o);
}

ScalarCoeffs invert_even_rubin(const ScalarCoeffs& g, double tolerance) {
  require_even(g, tolerance);
  const int L = g.band_limit();
  ScalarCoeffs out = apply_multiplier(apply_multiplier(g.restricted(Parity::even_only),
                                                       log_kernel_spec(L)),
                                      laplace_beltrami_spec(L));
  out(0, 0) = g(0, 0);
  return out;
}

HodgePair helmholtz_hodge(const VectorCoeffs& fvec, double tolerance) {
  require_tangent(fvec, tolerance);
  const int L = fvec.band_limit();
  const MultiplierSpec f = funk_minkowski_spec(L);
  const MultiplierSpec s = hilbert_spec(L);
  const VectorCoeffs ff = vec_funk(fvec);
  const VectorCoeffs sf = vec_hilbert(fvec);
  HodgePair out;
  out.u = apply_multiplier(dot_radial(ff), s) - apply_multiplier(dot_radial(sf), f);
  out.v = dot_radial(vec_hilbert(cross_radial(ff))) - dot_radial(vec_funk(cross_radial(sf)));
  out.u = zero_mean(std::move(out.u));
  out.v = zero_mean(std::move(out.v));
  return out;
}

ScalarCoeffs solve_surface_gradient(const VectorCoeffs& fvec, double tolerance) {
  const double curl = fvec.curl().norm();
  if (curl > tolerance * std::max(1.0, fvec.norm())) {
    throw KernelViolation("field has a divergence-free part of norm " + std::to_string(curl));
  }
  return helmholtz_hodge(fvec, tolerance).u;
}

HodgePair hodge_oracle(const VectorCoeffs& fvec) {
  const int L = fvec.band_limit();
  HodgePair out{ScalarCoeffs(L), ScalarCoeffs(L)};
  for (int n = 1; n <= L; ++n) {
    const double r = std::sqrt(double(n) * (n + 1));
    for (int m = -n; m <= n; ++m) {
      out.u(n, m) = fvec(2, n, m) / r;
      out.v(n, m) = fvec(3, n, m) / r;
    }
  }
  return out;
}

}  // namespace funksphere
