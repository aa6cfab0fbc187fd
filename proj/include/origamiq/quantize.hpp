#pragma once

#include "origamiq/character.hpp"
#include "origamiq/template.hpp"

namespace origamiq {

// One face's contribution to a polytope's character: the sum of t^xi over
// lattice points in the face's relative interior.
struct FaceContribution {
  std::string polytope;
  int sign = +1;
  Face face;
  std::vector<IntVec> points;
  Character character;  // unsigned

  FaceContribution() : character(1) {}
};

struct RRResult {
  Character character;                    // signed total
  std::vector<Character> per_polytope;    // unsigned, template order
  std::vector<FaceContribution> per_face; // grouped by polytope, faces in lattice order

  RRResult() : character(1) {}
};

// Sum of t^xi over all lattice points of the polytope.
Character danilov_polytope(const DelzantPolytope& p);

// Signed sum over the template's polytopes, with the per-face breakdown.
// Multiset semantics: every polytope contributes independently, shared
// points count once per polytope. Requires a validated template.
RRResult danilov_template(const OrigamiTemplate& t);
RRResult danilov_template(const BuiltTemplate& t);

// t^xi for an integral vertex, the zero character otherwise.
Character vertex_contribution(const DelzantPolytope& p, std::size_t vertex_index);

}  // namespace origamiq
