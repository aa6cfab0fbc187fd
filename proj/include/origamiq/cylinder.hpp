#pragma once

#include <string>
#include <vector>

#include "origamiq/rational.hpp"

namespace origamiq {

// Even C^1 profile rho on the folded cylinder normal model:
//   rho(r) = r^2            for |r| <= 1/4,
//   rho(r) = blend(|r|)     for 1/4 <= |r| <= 1/2,
//   rho(r) = 1/2            for |r| >= 1/2,
// where blend is the cubic Hermite interpolant matching value and slope at
// both knots. rho increases from 0 to 1/2 on [0, 1/2].
struct FoldProfile {
  RatVec blend;  // blend coefficients, constant term first

  static const FoldProfile& standard();

  Rat value(const Rat& r) const;
  // Exact antiderivative int_0^r rho(s) ds (odd in r).
  Rat integral(const Rat& r) const;
};

Rat rho(const Rat& r);

// Exponent core of the Fourier mode solution: the mode amplitude satisfies
// log |a_m(r)| = 2 pi * log_mode_amplitude(m, t, r) + const, with
// log_mode_amplitude(m, t, r) = (1 + t) * (m r - int_0^r rho).
// Requires t >= 0 (throws NegativeT).
Rat log_mode_amplitude(const Int& m, const Rat& t, const Rat& r);

// L^2 decay bookkeeping for one Fourier mode. slope_plus / slope_minus are
// the exact asymptotic growth rates of log|a_m| per unit distance toward
// +infinity / -infinity, divided by 2 pi. A branch is square-integrable only
// if both are negative; the two rates are exact negatives of each other and
// never zero at integer m, so no mode contributes to either kernel.
struct ModeCertificate {
  Int m;
  Rat w_plus_slope_plus;    // (1 + t)(m - 1/2)
  Rat w_plus_slope_minus;   // (1 + t)(1/2 - m)
  Rat w_minus_slope_plus;   // negated W+ rates
  Rat w_minus_slope_minus;
  bool w_plus_l2 = false;
  bool w_minus_l2 = false;
};

struct KernelReport {
  Rat t;
  Int mode_lo = 0, mode_hi = 0;
  int kernel_dim_plus = 0;
  int kernel_dim_minus = 0;
  int index = 0;
  std::vector<ModeCertificate> modes;
  // Covers every mode outside [mode_lo, mode_hi]: the decay rates are
  // monotone in m and already fail at the range ends.
  std::string tail_certificate;
  bool pass = false;
};

// Certifies that both kernels of the folded-cylinder model operator vanish
// for the given t >= 0, mode by mode over [mode_lo, mode_hi] with a
// monotonicity argument for the tail. The index is reported as zero.
KernelReport kernel_dimension(const Rat& t, const Int& mode_lo, const Int& mode_hi);

}  // namespace origamiq
