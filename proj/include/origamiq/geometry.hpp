#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origamiq/errors.hpp"
#include "origamiq/rational.hpp"

namespace origamiq {

// Closed halfspace { x : <normal, x> + offset >= 0 } with a primitive,
// inward-pointing integer normal. Construction normalizes by the gcd of the
// normal entries, which preserves the halfspace.
struct Halfspace {
  IntVec normal;
  Rat offset;

  Halfspace(IntVec n, Rat c);

  Rat eval(const RatVec& x) const;
  bool contains(const RatVec& x) const { return eval(x) >= 0; }
  bool on_boundary(const RatVec& x) const { return eval(x) == 0; }

  bool operator==(const Halfspace& o) const = default;
};

// Nonempty face of a simple polytope. `facets` is the maximal set of facet
// indices tight on the face, so dim == ambient dim - facets.size();
// the empty facet set denotes the polytope itself.
struct Face {
  int dim = 0;
  std::vector<int> facets;
  std::vector<int> vertices;  // indices into DelzantPolytope::vertices()
};

struct VertexCheck {
  RatVec vertex;
  bool simple = false;
  bool integral = false;
  std::vector<IntVec> edge_generators;  // empty when not simple
  Int normal_det_abs = 0;
  Int edge_det_abs = 0;
  bool unimodular = false;
};

struct DelzantReport {
  bool accepted = false;
  bool simple = false;
  bool unimodular = false;
  std::vector<VertexCheck> vertices;
  std::vector<int> redundant_halfspaces;
  std::vector<std::string> issues;
};

// Full-dimensional bounded rational polytope in H-representation.
// Construction enumerates vertices exactly and rejects unbounded, empty, and
// lower-dimensional input; simplicity and unimodularity are *reported*, not
// enforced, so that rejection paths stay testable.
class DelzantPolytope {
 public:
  static DelzantPolytope from_halfspaces(int dimension, std::vector<Halfspace> halfspaces);

  int dimension() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  // Lexicographically sorted, duplicate-free.
  const std::vector<RatVec>& vertices() const { return vertices_; }

  // Tight facet indices per vertex, each sorted ascending.
  const std::vector<std::vector<int>>& vertex_facets() const { return vertex_facets_; }

  bool is_simple() const { return simple_; }

  // All nonempty faces sorted by (dim, facet set); throws NotSimple when some
  // vertex lies on more than `dimension()` facets.
  const std::vector<Face>& face_lattice() const;

  // Face counts by dimension, f[k] = number of k-faces, f[dim] == 1.
  std::vector<long> f_vector() const;

  const DelzantReport& delzant_report() const { return report_; }

  bool contains(const RatVec& x) const;

  // Sorted tight facet indices of an arbitrary point of the polytope.
  std::vector<int> tight_facets(const RatVec& x) const;

  bool operator==(const DelzantPolytope& o) const {
    return dim_ == o.dim_ && halfspaces_ == o.halfspaces_;
  }

 private:
  DelzantPolytope() = default;

  int dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<RatVec> vertices_;
  std::vector<std::vector<int>> vertex_facets_;
  bool simple_ = false;
  std::vector<Face> faces_;  // empty when not simple
  DelzantReport report_;
};

// Vertex set of the halfspace intersection, without constructing a polytope.
// Throws UnboundedPolytope / EmptyPolytope exactly as construction does, but
// tolerates lower-dimensional feasible sets.
std::vector<RatVec> vertices_of(int dimension, const std::vector<Halfspace>& halfspaces);

DelzantReport is_delzant(const DelzantPolytope& p);

// All lattice points of the polytope, lexicographically ascending.
std::vector<IntVec> lattice_points(const DelzantPolytope& p);

// Lattice points in the relative interior of the face: tight on every facet
// of the face, strictly inside every other facet inequality.
std::vector<IntVec> face_interior_lattice_points(const DelzantPolytope& p, const Face& face);

// Primitive integer edge directions at a vertex, pointing into the polytope,
// sorted lexicographically. Requires a Delzant-accepted polytope.
std::vector<IntVec> edge_generators_at_vertex(const DelzantPolytope& p, std::size_t vertex_index);

bool in_relative_interior(const DelzantPolytope& p, const Face& face, const RatVec& x);

// Exact squared Euclidean distance from a point to a face (as a point set).
Rat face_distance_sq(const DelzantPolytope& p, const Face& face, const RatVec& x);

// Exact squared distance to the affine hyperplane of a halfspace.
Rat hyperplane_distance_sq(const Halfspace& h, const RatVec& x);

// Canonical up-to-sign form of the boundary hyperplane: the normal is
// flipped so its first nonzero entry is positive. Two halfspaces bound the
// same hyperplane exactly when their keys agree.
std::pair<IntVec, Rat> hyperplane_key(const Halfspace& h);

DelzantPolytope translate(const DelzantPolytope& p, const RatVec& by);
DelzantPolytope dilate(const DelzantPolytope& p, const Rat& factor);

// Image under x -> g x for unimodular integer g (|det g| must be 1).
DelzantPolytope transform(const DelzantPolytope& p, const std::vector<IntVec>& g);

}  // namespace origamiq
