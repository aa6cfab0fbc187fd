#pragma once

#include <string>
#include <vector>

#include "origamiq/geometry.hpp"

namespace origamiq {

// One polytope entry of a template. Halfspace data is stored raw so that
// files can be parsed without running geometric validation; build() performs
// vertex enumeration and throws the construction errors.
struct SignedPolytope {
  std::string name;
  int sign = +1;  // +1 or -1
  int dimension = 0;
  std::vector<Halfspace> halfspaces;

  DelzantPolytope build() const;
};

struct FoldSide {
  std::string polytope;
  int facet = 0;
  bool operator==(const FoldSide&) const = default;
};

struct FoldSpec {
  FoldSide a, b;
  bool operator==(const FoldSpec&) const = default;
};

// A collection of signed polytopes glued along fold facets. Structural
// soundness (unique names, resolvable fold references, facet indices in
// range) is enforced at construction; geometry is checked by
// validate_template.
class OrigamiTemplate {
 public:
  OrigamiTemplate(int dimension, std::vector<SignedPolytope> polytopes,
                  std::vector<FoldSpec> folds);

  int dimension() const { return dimension_; }
  const std::vector<SignedPolytope>& polytopes() const { return polytopes_; }
  const std::vector<FoldSpec>& folds() const { return folds_; }

  std::size_t index_of(const std::string& name) const;  // throws UnknownPolytopeName

 private:
  int dimension_;
  std::vector<SignedPolytope> polytopes_;
  std::vector<FoldSpec> folds_;
};

OrigamiTemplate parse_template(const std::string& text);
OrigamiTemplate load_template(const std::string& path);

// Canonical JSON rendering; parse_template(render_template(t)) reproduces t.
std::string render_template(const OrigamiTemplate& t);

struct FoldCheck {
  int fold = 0;
  bool hyperplanes_match = false;
  bool same_side = false;  // false means mirrored, only meaningful when matched
  bool facets_equal = false;
  bool local_agreement = false;
  bool signs_opposite = false;
  bool ok() const { return hyperplanes_match && facets_equal && local_agreement && signs_opposite; }
};

struct PolytopeCheck {
  std::string name;
  bool built = false;       // construction succeeded
  bool delzant = false;     // Delzant report accepted
  std::string build_error;  // when !built
  DelzantReport report;     // when built
};

struct ValidationReport {
  bool accepted = false;
  std::vector<PolytopeCheck> polytopes;
  std::vector<FoldCheck> folds;
  bool fold_graph_connected = false;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;  // e.g. overlapping same-sign polytopes

  std::string to_text() const;
};

ValidationReport validate_template(const OrigamiTemplate& t);

// Geometric realization of a validated template. Throws InvalidTemplate when
// validation fails.
struct BuiltTemplate {
  int dimension = 0;
  std::vector<std::string> names;
  std::vector<int> signs;
  std::vector<DelzantPolytope> polytopes;
  std::vector<FoldSpec> folds;

  std::size_t index_of(const std::string& name) const;
};

BuiltTemplate build_template(const OrigamiTemplate& t);

// { x >= 0 coordinatewise, sum x_i <= size }.
DelzantPolytope gen_simplex(int n, const Rat& size);

// Two copies of gen_simplex(n, size/2) with opposite signs, folded along the
// diagonal facet. Models the 2n-sphere with fold parameter size.
OrigamiTemplate gen_sphere_template(int n, const Rat& size);

DelzantPolytope gen_product(const DelzantPolytope& a, const DelzantPolytope& b);

// Trapezoid { x >= 0, y >= 0, y <= height, x + a y <= width + a height }:
// the Hirzebruch polygon with twist a, top edge of length width and bottom
// edge of length width + a * height. Delzant for every integer a >= 0.
DelzantPolytope gen_hirzebruch(int a, const Rat& width, const Rat& height);

// Two copies of p with opposite signs folded along the given facet; the
// canonical cancellation template.
OrigamiTemplate gen_double_template(const DelzantPolytope& p, int fold_facet);

// Single positive polytope, no folds.
OrigamiTemplate gen_single_template(const DelzantPolytope& p, const std::string& name = "p",
                                    int sign = +1);

}  // namespace origamiq
