#include "origamiq/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>

#include "origamiq/errors.hpp"

namespace origamiq {

Int floor_rat(const Rat& x) {
  Int num = numerator(x);
  Int den = denominator(x);
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Int ceil_rat(const Rat& x) {
  Int num = numerator(x);
  Int den = denominator(x);
  Int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

namespace {

bool parse_int(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Int num, den;
  if (slash == std::string::npos) {
    if (!parse_int(text, num)) throw MalformedRational("malformed rational \"" + text + "\"");
    return Rat(num);
  }
  if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
    throw MalformedRational("malformed rational \"" + text + "\"");
  if (den == 0) throw MalformedRational("zero denominator in \"" + text + "\"");
  return Rat(num, den);
}

std::string rational_to_string(const Rat& x) {
  Int den = denominator(x);
  if (den == 1) return numerator(x).str();
  return numerator(x).str() + "/" + den.str();
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rational_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

Int gcd_vec(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

IntVec primitive(IntVec v) {
  Int g = gcd_vec(v);
  if (g == 0 || g == 1) return v;
  for (Int& x : v) x /= g;
  return v;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (denominator(x) != 1) return false;
  return true;
}

IntVec to_int_vec(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (denominator(x) != 1) throw Error("to_int_vec: non-integral entry " + rational_to_string(x));
    out.push_back(numerator(x));
  }
  return out;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

IntVec negated(IntVec v) {
  for (Int& x : v) x = -x;
  return v;
}

}  // namespace origamiq
