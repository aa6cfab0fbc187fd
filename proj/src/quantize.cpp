#include "origamiq/quantize.hpp"

namespace origamiq {

Character danilov_polytope(const DelzantPolytope& p) {
  Character c(p.dimension());
  for (const IntVec& pt : lattice_points(p)) c += Character::monomial(pt);
  return c;
}

RRResult danilov_template(const OrigamiTemplate& t) { return danilov_template(build_template(t)); }

RRResult danilov_template(const BuiltTemplate& t) {
  RRResult r;
  r.character = Character(t.dimension);
  for (std::size_t i = 0; i < t.polytopes.size(); ++i) {
    const DelzantPolytope& p = t.polytopes[i];
    Character direct = danilov_polytope(p);
    Character from_faces(t.dimension);
    for (const Face& face : p.face_lattice()) {
      FaceContribution fc;
      fc.polytope = t.names[i];
      fc.sign = t.signs[i];
      fc.face = face;
      fc.points = face_interior_lattice_points(p, face);
      fc.character = Character(t.dimension);
      for (const IntVec& pt : fc.points) fc.character += Character::monomial(pt);
      from_faces += fc.character;
      r.per_face.push_back(std::move(fc));
    }
    // Relative interiors partition the polytope, so the face-wise sum must
    // reproduce the direct enumeration.
    if (from_faces != direct)
      throw Error("internal: face partition disagrees with direct enumeration for polytope \"" +
                  t.names[i] + "\"");
    if (t.signs[i] > 0)
      r.character += direct;
    else
      r.character -= direct;
    r.per_polytope.push_back(std::move(direct));
  }
  return r;
}

Character vertex_contribution(const DelzantPolytope& p, std::size_t vertex_index) {
  if (vertex_index >= p.vertices().size()) throw Error("vertex index out of range");
  const RatVec& v = p.vertices()[vertex_index];
  if (!is_integral(v)) return Character(p.dimension());
  return Character::monomial(to_int_vec(v));
}

}  // namespace origamiq
