#include "origamiq/ratfun.hpp"

#include <sstream>

#include "origamiq/errors.hpp"

namespace origamiq {

PolyQ::PolyQ(RatVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::constant(const Rat& c) { return PolyQ(RatVec{c}); }

PolyQ PolyQ::power(std::size_t k, const Rat& c) {
  RatVec v(k + 1, Rat(0));
  v[k] = c;
  return PolyQ(std::move(v));
}

const Rat& PolyQ::leading() const {
  if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  RatVec out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const {
  RatVec out = coeffs_;
  for (Rat& c : out) c = -c;
  return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  RatVec rem = a.coeffs_;
  RatVec quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat& lead = b.leading();
  for (int d = a.degree(); d >= b.degree(); --d) {
    Rat c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rat f = c / lead;
    std::size_t off = static_cast<std::size_t>(d - b.degree());
    quot[off] = f;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem[off + i] -= f * b.coeffs_[i];
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

Rat PolyQ::eval(const Rat& x) const {
  Rat v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
  return v;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << rational_to_string(ac);
    } else {
      if (ac != 1) os << rational_to_string(ac) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = PolyQ::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // make monic
  RatVec c = a.coeffs();
  const Rat lead = a.leading();
  for (Rat& x : c) x /= lead;
  return PolyQ(std::move(c));
}

LaurentQ::LaurentQ(PolyQ p, Int s) : poly(std::move(p)), shift(std::move(s)) {
  if (poly.is_zero()) {
    shift = 0;
    return;
  }
  std::size_t low = 0;
  while (poly.coeff(low) == 0) ++low;
  if (low > 0) {
    RatVec c(poly.coeffs().begin() + static_cast<std::ptrdiff_t>(low), poly.coeffs().end());
    poly = PolyQ(std::move(c));
    shift += low;
  }
}

namespace {

LaurentQ laurent_combine(const LaurentQ& a, const LaurentQ& b, bool subtract) {
  if (a.is_zero()) {
    LaurentQ r = b;
    if (subtract) r.poly = -r.poly;
    return r;
  }
  if (b.is_zero()) return a;
  Int lo = std::min(a.shift, b.shift);
  PolyQ pa = PolyQ::power(static_cast<std::size_t>(a.shift - lo)) * a.poly;
  PolyQ pb = PolyQ::power(static_cast<std::size_t>(b.shift - lo)) * b.poly;
  return LaurentQ(subtract ? pa - pb : pa + pb, lo);
}

}  // namespace

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) { return laurent_combine(a, b, false); }
LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return laurent_combine(a, b, true); }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() || b.is_zero()) return LaurentQ();
  return LaurentQ(a.poly * b.poly, a.shift + b.shift);
}

Rat LaurentQ::coeff(const Int& exponent) const {
  if (is_zero()) return 0;
  Int i = exponent - shift;
  if (i < 0 || i > poly.degree()) return 0;
  return poly.coeff(static_cast<std::size_t>(i));
}

std::string LaurentQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= poly.degree(); ++i) {
    Rat c = poly.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int e = shift + i;
    if (e == 0) {
      os << rational_to_string(ac);
    } else {
      if (ac != 1) os << rational_to_string(ac) << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

RationalFunctionQ::RationalFunctionQ() : num_(), den_(PolyQ::constant(1)) {}

RationalFunctionQ::RationalFunctionQ(PolyQ num, PolyQ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RationalFunctionQ RationalFunctionQ::from_poly(PolyQ p) {
  return RationalFunctionQ(std::move(p), PolyQ::constant(1));
}

RationalFunctionQ RationalFunctionQ::from_laurent(const LaurentQ& l) {
  if (l.is_zero()) return RationalFunctionQ();
  if (l.shift >= 0)
    return from_poly(PolyQ::power(static_cast<std::size_t>(l.shift)) * l.poly);
  return RationalFunctionQ(l.poly, PolyQ::power(static_cast<std::size_t>(-l.shift)));
}

void RationalFunctionQ::normalize() {
  if (num_.is_zero()) {
    den_ = PolyQ::constant(1);
    return;
  }
  PolyQ g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = PolyQ::divmod(num_, g).first;
    den_ = PolyQ::divmod(den_, g).first;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    RatVec nc = num_.coeffs(), dc = den_.coeffs();
    for (Rat& c : nc) c /= lead;
    for (Rat& c : dc) c /= lead;
    num_ = PolyQ(std::move(nc));
    den_ = PolyQ(std::move(dc));
  }
}

bool RationalFunctionQ::is_polynomial() const { return den_ == PolyQ::constant(1); }

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  return RationalFunctionQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionQ RationalFunctionQ::operator-() const {
  RationalFunctionQ r = *this;
  r.num_ = -r.num_;
  return r;
}

PolyQ RationalFunctionQ::as_polynomial() const {
  if (!is_polynomial())
    throw Error("rational function is not a polynomial: denominator " + den_.to_string());
  return num_;
}

std::string RationalFunctionQ::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace origamiq
