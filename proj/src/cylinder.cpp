#include "origamiq/cylinder.hpp"

#include <sstream>

#include "origamiq/errors.hpp"

namespace origamiq {

namespace {

// Cubic Hermite interpolant on [x0, x1] with values p0, p1 and slopes m0, m1,
// returned in the monomial basis (constant term first).
RatVec hermite_cubic(const Rat& x0, const Rat& x1, const Rat& p0, const Rat& m0, const Rat& p1,
                     const Rat& m1) {
  Rat h = x1 - x0;
  // Basis coefficients in u = (x - x0)/h:
  //   p0 (2u^3 - 3u^2 + 1) + m0 h (u^3 - 2u^2 + u) + p1 (-2u^3 + 3u^2) + m1 h (u^3 - u^2)
  RatVec u(4, Rat(0));  // coefficients of 1, u, u^2, u^3
  u[0] = p0;
  u[1] = m0 * h;
  u[2] = -3 * p0 - 2 * m0 * h + 3 * p1 - m1 * h;
  u[3] = 2 * p0 + m0 * h - 2 * p1 + m1 * h;
  // Substitute u = (x - x0)/h and expand to monomials in x.
  RatVec out(4, Rat(0));
  RatVec power{1};  // ((x - x0)/h)^k expanded, grows each iteration
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < power.size(); ++j) out[j] += u[k] * power[j];
    // multiply power by (x - x0)/h
    RatVec next(power.size() + 1, Rat(0));
    for (std::size_t j = 0; j < power.size(); ++j) {
      next[j] += power[j] * (-x0 / h);
      next[j + 1] += power[j] / h;
    }
    power = std::move(next);
  }
  return out;
}

Rat eval_poly(const RatVec& c, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Antiderivative of the polynomial with value 0 at x = lo, evaluated at x.
Rat integrate_poly(const RatVec& c, const Rat& lo, const Rat& x) {
  Rat vx = 0, vlo = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    Rat k = c[i] / Rat(i + 1);
    vx = (vx + k) * x;
    vlo = (vlo + k) * lo;
  }
  return vx - vlo;
}

const Rat kQuarter(1, 4);
const Rat kHalf(1, 2);

}  // namespace

const FoldProfile& FoldProfile::standard() {
  static const FoldProfile profile{
      hermite_cubic(kQuarter, kHalf, Rat(1, 16), kHalf, kHalf, Rat(0))};
  return profile;
}

Rat FoldProfile::value(const Rat& r) const {
  Rat x = r < 0 ? Rat(-r) : r;
  if (x <= kQuarter) return x * x;
  if (x >= kHalf) return kHalf;
  return eval_poly(blend, x);
}

Rat FoldProfile::integral(const Rat& r) const {
  bool neg = r < 0;
  Rat x = neg ? Rat(-r) : r;
  Rat acc;
  if (x <= kQuarter) {
    acc = x * x * x / 3;
  } else {
    Rat base = Rat(1, 192);  // int_0^{1/4} s^2 ds
    if (x <= kHalf) {
      acc = base + integrate_poly(blend, kQuarter, x);
    } else {
      acc = base + integrate_poly(blend, kQuarter, kHalf) + (x - kHalf) * kHalf;
    }
  }
  return neg ? Rat(-acc) : acc;
}

Rat rho(const Rat& r) { return FoldProfile::standard().value(r); }

Rat log_mode_amplitude(const Int& m, const Rat& t, const Rat& r) {
  if (t < 0) throw NegativeT("deformation parameter t must be nonnegative");
  return (1 + t) * (Rat(m) * r - FoldProfile::standard().integral(r));
}

KernelReport kernel_dimension(const Rat& t, const Int& mode_lo, const Int& mode_hi) {
  if (t < 0) throw NegativeT("deformation parameter t must be nonnegative");
  if (mode_lo > mode_hi) throw Error("empty mode range");
  KernelReport rep;
  rep.t = t;
  rep.mode_lo = mode_lo;
  rep.mode_hi = mode_hi;
  for (Int m = mode_lo; m <= mode_hi; ++m) {
    ModeCertificate mc;
    mc.m = m;
    mc.w_plus_slope_plus = (1 + t) * (Rat(m) - kHalf);
    mc.w_plus_slope_minus = -mc.w_plus_slope_plus;
    mc.w_minus_slope_plus = -mc.w_plus_slope_plus;
    mc.w_minus_slope_minus = mc.w_plus_slope_plus;
    mc.w_plus_l2 = mc.w_plus_slope_plus < 0 && mc.w_plus_slope_minus < 0;
    mc.w_minus_l2 = mc.w_minus_slope_plus < 0 && mc.w_minus_slope_minus < 0;
    if (mc.w_plus_l2) ++rep.kernel_dim_plus;
    if (mc.w_minus_l2) ++rep.kernel_dim_minus;
    rep.modes.push_back(std::move(mc));
  }
  rep.index = rep.kernel_dim_plus - rep.kernel_dim_minus;
  std::ostringstream tail;
  tail << "for m > " << mode_hi << " the W+ growth rate toward +infinity, (1+t)(m - 1/2), "
       << "increases with m and is already positive at m = " << (mode_hi + 1)
       << "; for m < " << mode_lo << " the rate toward -infinity, (1+t)(1/2 - m), "
       << "is already positive at m = " << (mode_lo - 1)
       << "; the W- rates are the exact negatives, so no mode outside the range is "
       << "square-integrable either";
  rep.tail_certificate = tail.str();
  rep.pass = rep.kernel_dim_plus == 0 && rep.kernel_dim_minus == 0 && rep.index == 0;
  return rep;
}

}  // namespace origamiq
