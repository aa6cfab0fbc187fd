#pragma once

#include <map>
#include <string>

#include "origamiq/rational.hpp"

namespace origamiq {

struct LaurentQ;

// Finite integer combination of lattice characters t^xi in n variables.
// Terms are kept in lexicographic order of exponent; zero coefficients are
// never stored.
class Character {
 public:
  explicit Character(int num_vars);
  static Character monomial(const IntVec& exponent, Int coeff = 1);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IntVec, Int>& terms() const { return terms_; }
  Int coeff(const IntVec& exponent) const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character operator-() const;
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);

  bool operator==(const Character& o) const = default;

  // Total coefficient sum: the dimension of the underlying representation
  // (evaluation at t = (1, ..., 1)).
  Int dimension() const;

  // One-variable restriction along a: t^xi -> q^<xi, a>.
  LaurentQ specialize(const IntVec& a) const;

  // Canonical rendering: terms in lexicographic exponent order, variables
  // t1 ... tn, "^" powers, explicit "*" products. The zero character is "0".
  std::string to_string() const;

 private:
  int num_vars_;
  std::map<IntVec, Int> terms_;
};

Int dimension_of(const Character& c);

}  // namespace origamiq
