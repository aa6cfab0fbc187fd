#pragma once

#include <optional>
#include <vector>

#include "origamiq/rational.hpp"

namespace origamiq {

// Dense row-major rational matrix. All routines are exact.
using RatMat = std::vector<RatVec>;

Rat determinant(RatMat a);
int rank(RatMat a);

// Unique solution of the square system a x = b, or nullopt if a is singular.
std::optional<RatVec> solve_unique(RatMat a, RatVec b);

// Inverse of a square nonsingular matrix, or nullopt if singular.
std::optional<RatMat> inverse(const RatMat& a);

// Basis of { x : a x = 0 } for a rectangular matrix with `cols` columns.
std::vector<RatVec> nullspace(RatMat a, std::size_t cols);

// Least-norm affine projection helper: solves (N N^T) z = rhs where N has
// full row rank; returns nullopt if N N^T is singular.
RatMat mat_from_int_rows(const std::vector<IntVec>& rows);

// Scales a rational direction to a primitive integer vector. The zero vector
// maps to the zero vector.
IntVec primitive_direction(const RatVec& v);

}  // namespace origamiq
