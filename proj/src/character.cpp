#include "origamiq/character.hpp"

#include <sstream>

#include "origamiq/errors.hpp"
#include "origamiq/ratfun.hpp"

namespace origamiq {

Character::Character(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw DimensionMismatch("character needs at least one variable");
}

Character Character::monomial(const IntVec& exponent, Int coeff) {
  Character c(static_cast<int>(exponent.size()));
  if (coeff != 0) c.terms_[exponent] = std::move(coeff);
  return c;
}

Int Character::coeff(const IntVec& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

namespace {

void check_vars(const Character& a, const Character& b) {
  if (a.num_vars() != b.num_vars())
    throw DimensionMismatch("character variable counts differ: " +
                            std::to_string(a.num_vars()) + " vs " +
                            std::to_string(b.num_vars()));
}

}  // namespace

Character& Character::operator+=(const Character& o) {
  check_vars(*this, o);
  for (const auto& [e, c] : o.terms_) {
    Int& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Character& Character::operator-=(const Character& o) {
  check_vars(*this, o);
  for (const auto& [e, c] : o.terms_) {
    Int& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Character Character::operator-() const {
  Character r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Character operator*(const Character& a, const Character& b) {
  check_vars(a, b);
  Character r(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      IntVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Int& slot = r.terms_[e];
      slot += ca * cb;
      if (slot == 0) r.terms_.erase(e);
    }
  }
  return r;
}

Int Character::dimension() const {
  Int d = 0;
  for (const auto& [e, c] : terms_) d += c;
  return d;
}

LaurentQ Character::specialize(const IntVec& a) const {
  if (a.size() != static_cast<std::size_t>(num_vars_))
    throw DimensionMismatch("specialization direction has wrong length");
  if (terms_.empty()) return LaurentQ();
  Int lo = 0, hi = 0;
  bool first = true;
  std::map<Int, Rat> collected;
  for (const auto& [e, c] : terms_) {
    Int k = dot(e, a);
    collected[k] += Rat(c);
    if (first || k < lo) lo = k;
    if (first || k > hi) hi = k;
    first = false;
  }
  RatVec coeffs(static_cast<std::size_t>(hi - lo) + 1, Rat(0));
  for (const auto& [k, c] : collected) coeffs[static_cast<std::size_t>(k - lo)] = c;
  return LaurentQ(PolyQ(std::move(coeffs)), lo);
}

std::string Character::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int ac = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::ostringstream mono;
    bool any_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << "t" << (i + 1);
      if (e[i] != 1) mono << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << mono.str();
    }
  }
  return os.str();
}

Int dimension_of(const Character& c) { return c.dimension(); }

}  // namespace origamiq
