#pragma once

#include "origamiq/quantize.hpp"
#include "origamiq/ratfun.hpp"

namespace origamiq {

// Smallest strictly positive integer vector (by max-norm, then lexicographic)
// pairing nonzero with every edge generator of every polytope and separating
// the vertices of each polytope under <v, a>.
IntVec find_generic_direction(const BuiltTemplate& t);
IntVec find_generic_direction(const DelzantPolytope& p);

bool direction_is_generic(const BuiltTemplate& t, const IntVec& a);

// Throws NonGenericDirection (carrying the violating edge) otherwise.
void require_generic(const BuiltTemplate& t, const IntVec& a);

// q^<apex, a> / prod_w (1 - q^<w, a>) for a unimodular cone given by its
// primitive edge generators; the empty generator list gives q^<apex, a>.
// Negative pairings are rewritten with positive exponents before building
// the fraction. Requires an integral apex.
RationalFunctionQ brion_cone_term(const IntVec& apex, const std::vector<IntVec>& generators,
                                  const IntVec& a);

// The cone term of one vertex of a Delzant polytope.
RationalFunctionQ brion_vertex_term(const DelzantPolytope& p, std::size_t vertex_index,
                                    const IntVec& a);

// Sum of all vertex cone terms. For a Delzant polytope with integral
// vertices and generic a this collapses to the specialized lattice sum; the
// result is asserted to have denominator 1.
LaurentQ fixed_point_character(const DelzantPolytope& p, const IntVec& a);

struct OracleReport {
  bool pass = false;
  bool integral_mode = true;  // false: some vertex non-integral, lattice-only fallback
  IntVec direction;
  LaurentQ fixed_point_sum;   // integral mode only
  LaurentQ lattice_sum;
  std::string detail;
};

// Checks the signed vertex fixed-point sum against the specialized lattice
// enumeration. Templates with non-integral vertices fall back to verifying
// the per-face breakdown against the direct enumeration. An empty direction
// requests an automatically chosen one.
OracleReport oracle_check_template(const OrigamiTemplate& t, IntVec direction = {});

}  // namespace origamiq
