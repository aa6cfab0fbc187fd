#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace origamiq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Accepts "p" or "p/q" with optional sign; rejects anything else
// (in particular decimal points and exponents).
Rat parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rat& x);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

Int gcd_vec(const IntVec& v);

// Divides by the gcd of the entries (gcd taken positive). The zero vector
// is returned unchanged.
IntVec primitive(IntVec v);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);

bool is_integral(const RatVec& v);
IntVec to_int_vec(const RatVec& v);
RatVec to_rat_vec(const IntVec& v);

IntVec negated(IntVec v);

}  // namespace origamiq
