#pragma once

#include <cmath>
#include <complex>

namespace qpe::detail {

/// k * phi reduced to [-1/2, 1/2] turns, with the product formed exactly
/// (two-product via fma) before reduction. Keeps e^{2*pi*i*k*phi} accurate
/// even when k*phi is ~2^26 and the naive product would shed low bits of phi.
inline double wrap_turns(double k, double phi) {
  const double prod = k * phi;
  const double residual = std::fma(k, phi, -prod);  // exact low word
  double frac = (prod - std::nearbyint(prod)) + residual;
  frac -= std::nearbyint(frac);
  return frac;
}

/// e^{2*pi*i*turns}; the caller supplies turns already in a modest range,
/// the final wrap to [-1/2, 1/2] happens here.
inline std::complex<double> unit_phasor(double turns) {
  const double w = turns - std::nearbyint(turns);
  const double angle = 2.0 * M_PI * w;
  return {std::cos(angle), std::sin(angle)};
}

/// sin(pi * u) for u in [0, 1), reflected about 1/2 so the result stays
/// accurate as u -> 1 where pi*u itself loses significance.
inline double sin_pi_unit(double u) {
  const double r = u <= 0.5 ? u : 1.0 - u;
  return std::sin(M_PI * r);
}

}  // namespace qpe::detail
