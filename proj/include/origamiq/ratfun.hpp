#pragma once

#include <string>
#include <vector>

#include "origamiq/rational.hpp"

namespace origamiq {

// Dense univariate polynomial over Q in the variable q; coeffs_[i] is the
// coefficient of q^i and the leading coefficient is nonzero. The zero
// polynomial has an empty coefficient list and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(RatVec coeffs);
  static PolyQ constant(const Rat& c);
  static PolyQ power(std::size_t k, const Rat& c = 1);  // c * q^k

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatVec& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ operator-() const;
  bool operator==(const PolyQ& o) const = default;

  // Euclidean division; remainder degree < divisor degree.
  static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

  Rat eval(const Rat& x) const;
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  RatVec coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
PolyQ poly_gcd(PolyQ a, PolyQ b);

// Laurent polynomial q^shift * poly where poly has a nonzero constant term
// (zero is represented with shift 0 and a zero poly).
struct LaurentQ {
  PolyQ poly;
  Int shift = 0;

  LaurentQ() = default;
  LaurentQ(PolyQ p, Int s);
  static LaurentQ from_poly(PolyQ p) { return LaurentQ(std::move(p), 0); }

  bool is_zero() const { return poly.is_zero(); }
  bool operator==(const LaurentQ& o) const = default;

  friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);

  Rat coeff(const Int& exponent) const;
  std::string to_string(const std::string& var = "q") const;
};

// Reduced fraction num/den in Q(q): gcd(num, den) = 1 and den is monic.
class RationalFunctionQ {
 public:
  RationalFunctionQ();  // zero
  RationalFunctionQ(PolyQ num, PolyQ den);
  static RationalFunctionQ from_poly(PolyQ p);
  static RationalFunctionQ from_laurent(const LaurentQ& l);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
  RationalFunctionQ operator-() const;
  bool operator==(const RationalFunctionQ& o) const = default;

  // The polynomial this function equals; throws if the denominator is not 1.
  PolyQ as_polynomial() const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void normalize();
  PolyQ num_, den_;
};

}  // namespace origamiq
