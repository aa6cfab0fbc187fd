#pragma once

#include <stdexcept>
#include <string>

#include "origamiq/rational.hpp"

namespace origamiq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct EmptyPolytope : Error {
  using Error::Error;
};

struct UnboundedPolytope : Error {
  using Error::Error;
};

// The feasible set is nonempty but lower-dimensional.
struct EmptyInterior : Error {
  using Error::Error;
};

struct NotSimple : Error {
  using Error::Error;
};

struct NotDelzant : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  using Error::Error;
};

struct MalformedRational : Error {
  using Error::Error;
};

struct UnknownPolytopeName : Error {
  using Error::Error;
};

struct InvalidTemplate : Error {
  using Error::Error;
};

struct NonIntegralVertex : Error {
  using Error::Error;
};

struct NonGenericDirection : Error {
  NonGenericDirection(const std::string& what, IntVec violating_edge)
      : Error(what), edge(std::move(violating_edge)) {}
  IntVec edge;
};

struct InadmissibleEpsilon : Error {
  using Error::Error;
};

struct DegenerateTemplate : Error {
  using Error::Error;
};

struct NegativeT : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

}  // namespace origamiq
