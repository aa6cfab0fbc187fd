#include "origamiq/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "origamiq/linalg.hpp"

namespace origamiq {

Halfspace::Halfspace(IntVec n, Rat c) : normal(std::move(n)), offset(std::move(c)) {
  bool all_zero = true;
  for (const Int& x : normal)
    if (x != 0) all_zero = false;
  if (normal.empty() || all_zero) throw Error("halfspace normal must be nonzero");
  Int g = gcd_vec(normal);
  if (g > 1) {
    for (Int& x : normal) x /= g;
    offset /= Rat(g);
  }
}

Rat Halfspace::eval(const RatVec& x) const { return dot(normal, x) + offset; }

namespace {

// Feasible intersection points of n-subsets of the halfspace boundaries.
// These contain every vertex of the (possibly unbounded) feasible set.
std::vector<RatVec> basic_feasible_points(int dim, const std::vector<Halfspace>& hs) {
  std::size_t n = static_cast<std::size_t>(dim);
  std::set<RatVec> found;
  if (hs.size() < n) return {};
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    RatMat a(n, RatVec(n));
    RatVec b(n);
    for (std::size_t r = 0; r < n; ++r) {
      a[r] = to_rat_vec(hs[idx[r]].normal);
      b[r] = -hs[idx[r]].offset;
    }
    if (auto x = solve_unique(std::move(a), std::move(b))) {
      bool feasible = true;
      for (const Halfspace& h : hs)
        if (!h.contains(*x)) {
          feasible = false;
          break;
        }
      if (feasible) found.insert(std::move(*x));
    }
    // next combination
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == hs.size() - n + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

// True when { d : <normal_i, d> >= 0 for all i } contains a nonzero vector,
// decided by enumerating the cone clipped to the unit box.
bool recession_cone_nontrivial(int dim, const std::vector<Halfspace>& hs) {
  std::vector<Halfspace> clipped;
  clipped.reserve(hs.size() + 2 * dim);
  for (const Halfspace& h : hs) clipped.emplace_back(h.normal, Rat(0));
  for (int i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    clipped.emplace_back(e, Rat(1));
    clipped.emplace_back(negated(e), Rat(1));
  }
  RatVec zero(dim, Rat(0));
  for (const RatVec& p : basic_feasible_points(dim, clipped))
    if (p != zero) return true;
  return false;
}

// Exact Fourier-Motzkin feasibility test for <row, x> + offset >= 0 systems.
// Only used to separate EmptyPolytope from UnboundedPolytope when the
// feasible set has no vertex.
bool feasible_fm(int dim, std::vector<std::pair<RatVec, Rat>> rows) {
  for (int var = dim - 1; var >= 0; --var) {
    std::vector<std::pair<RatVec, Rat>> pos, neg, zero;
    for (auto& r : rows) {
      const Rat& c = r.first[var];
      if (c > 0)
        pos.push_back(std::move(r));
      else if (c < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    std::set<std::pair<RatVec, Rat>> next(zero.begin(), zero.end());
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // p scaled by -q[var], q scaled by p[var]: variable cancels
        Rat a = -q.first[var];
        Rat b = p.first[var];
        RatVec row(var, Rat(0));
        for (int j = 0; j < var; ++j) row[j] = a * p.first[j] + b * q.first[j];
        next.insert({std::move(row), a * p.second + b * q.second});
      }
    rows.assign(next.begin(), next.end());
  }
  for (const auto& r : rows)
    if (r.second < 0) return false;
  return true;
}

std::vector<int> tight_set(const std::vector<Halfspace>& hs, const RatVec& x) {
  std::vector<int> t;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i].on_boundary(x)) t.push_back(static_cast<int>(i));
  return t;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMat m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    m.push_back(std::move(d));
  }
  return rank(std::move(m));
}

// Edge directions at a simple vertex: columns of the inverse of the tight
// normal matrix point along the edges and satisfy <nu_i, e_j> = delta_ij,
// hence inward. Throws NotSimple via the singularity check never firing on
// valid input; callers guard simplicity.
std::vector<IntVec> edge_directions(const DelzantPolytope& p, const std::vector<int>& tight) {
  RatMat n;
  for (int f : tight) n.push_back(to_rat_vec(p.halfspaces()[f].normal));
  auto inv = inverse(n);
  if (!inv) throw Error("degenerate vertex: dependent facet normals");
  std::vector<IntVec> gens;
  std::size_t d = static_cast<std::size_t>(p.dimension());
  for (std::size_t col = 0; col < d; ++col) {
    RatVec dir(d);
    for (std::size_t rowi = 0; rowi < d; ++rowi) dir[rowi] = (*inv)[rowi][col];
    gens.push_back(primitive_direction(dir));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

DelzantReport build_report(const DelzantPolytope& p) {
  DelzantReport rep;
  rep.simple = true;
  rep.unimodular = true;
  int dim = p.dimension();
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    VertexCheck vc;
    vc.vertex = p.vertices()[vi];
    vc.integral = is_integral(vc.vertex);
    const auto& tight = p.vertex_facets()[vi];
    vc.simple = tight.size() == static_cast<std::size_t>(dim);
    if (!vc.simple) {
      rep.simple = false;
      rep.unimodular = false;
      rep.issues.push_back("vertex " + vec_to_string(vc.vertex) + " lies on " +
                           std::to_string(tight.size()) + " facets, expected " +
                           std::to_string(dim));
      rep.vertices.push_back(std::move(vc));
      continue;
    }
    RatMat nm;
    for (int f : tight) nm.push_back(to_rat_vec(p.halfspaces()[f].normal));
    Rat nd = determinant(nm);
    vc.normal_det_abs = boost::multiprecision::abs(numerator(nd));
    vc.edge_generators = edge_directions(p, tight);
    RatMat em;
    for (const IntVec& g : vc.edge_generators) em.push_back(to_rat_vec(g));
    Rat ed = determinant(em);
    vc.edge_det_abs = boost::multiprecision::abs(numerator(ed));
    vc.unimodular = vc.normal_det_abs == 1;
    if ((vc.normal_det_abs == 1) != (vc.edge_det_abs == 1))
      throw Error("internal: normal/edge determinant unimodularity disagrees");
    if (!vc.unimodular) {
      rep.unimodular = false;
      rep.issues.push_back("vertex " + vec_to_string(vc.vertex) + " has normal determinant " +
                           vc.normal_det_abs.str() + ", edge determinant " +
                           vc.edge_det_abs.str());
    }
    rep.vertices.push_back(std::move(vc));
  }
  // A halfspace supports a facet exactly when its tight vertices span an
  // affine space of dimension dim-1. Duplicates are redundant by fiat.
  std::set<std::pair<IntVec, Rat>> seen;
  for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
    const Halfspace& h = p.halfspaces()[i];
    bool dup = !seen.insert({h.normal, h.offset}).second;
    std::vector<RatVec> tv;
    for (std::size_t vi = 0; vi < p.vertices().size(); ++vi)
      if (h.on_boundary(p.vertices()[vi])) tv.push_back(p.vertices()[vi]);
    bool facet = !tv.empty() && affine_rank(tv) == dim - 1;
    if (dup || !facet) {
      rep.redundant_halfspaces.push_back(static_cast<int>(i));
      rep.issues.push_back("halfspace " + std::to_string(i) + " (normal " +
                           vec_to_string(h.normal) + ", offset " + rational_to_string(h.offset) +
                           ") " + (dup ? "duplicates an earlier halfspace" : "supports no facet"));
    }
  }
  rep.accepted = rep.simple && rep.unimodular && rep.redundant_halfspaces.empty();
  return rep;
}

std::vector<Face> build_face_lattice(const DelzantPolytope& p) {
  int dim = p.dimension();
  std::size_t nv = p.vertices().size();
  std::map<std::vector<int>, std::vector<int>> faces;  // maximal facet set -> vertex ids
  for (std::size_t vi = 0; vi < nv; ++vi) {
    const auto& tight = p.vertex_facets()[vi];
    std::size_t n = tight.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> t;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) t.push_back(tight[b]);
      // vertices tight on all of t
      std::vector<int> vs;
      for (std::size_t wi = 0; wi < nv; ++wi) {
        const auto& wt = p.vertex_facets()[wi];
        if (std::includes(wt.begin(), wt.end(), t.begin(), t.end()))
          vs.push_back(static_cast<int>(wi));
      }
      // maximal facet set tight on every such vertex
      std::vector<int> m = p.vertex_facets()[vs[0]];
      for (std::size_t k = 1; k < vs.size(); ++k) {
        std::vector<int> inter;
        const auto& wt = p.vertex_facets()[vs[k]];
        std::set_intersection(m.begin(), m.end(), wt.begin(), wt.end(),
                              std::back_inserter(inter));
        m = std::move(inter);
      }
      faces.emplace(std::move(m), std::move(vs));
    }
  }
  std::vector<Face> out;
  for (auto& [facets, verts] : faces) {
    Face f;
    f.dim = dim - static_cast<int>(facets.size());
    f.facets = facets;
    f.vertices = verts;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.facets < b.facets;
  });
  return out;
}

}  // namespace

DelzantPolytope DelzantPolytope::from_halfspaces(int dimension, std::vector<Halfspace> halfspaces) {
  if (dimension < 1) throw DimensionMismatch("dimension must be at least 1");
  for (const Halfspace& h : halfspaces)
    if (h.normal.size() != static_cast<std::size_t>(dimension))
      throw DimensionMismatch("normal " + vec_to_string(h.normal) + " has length " +
                              std::to_string(h.normal.size()) + ", expected " +
                              std::to_string(dimension));

  DelzantPolytope p;
  p.dim_ = dimension;
  p.halfspaces_ = std::move(halfspaces);
  p.vertices_ = basic_feasible_points(dimension, p.halfspaces_);

  if (recession_cone_nontrivial(dimension, p.halfspaces_)) {
    // Distinguish a genuinely unbounded feasible set from an empty one.
    std::vector<std::pair<RatVec, Rat>> rows;
    for (const Halfspace& h : p.halfspaces_) rows.push_back({to_rat_vec(h.normal), h.offset});
    if (feasible_fm(dimension, std::move(rows)))
      throw UnboundedPolytope("feasible set is unbounded");
    throw EmptyPolytope("halfspace intersection is empty");
  }
  if (p.vertices_.empty()) throw EmptyPolytope("halfspace intersection is empty");

  for (const Halfspace& h : p.halfspaces_) {
    bool tight_everywhere = true;
    for (const RatVec& v : p.vertices_)
      if (!h.on_boundary(v)) {
        tight_everywhere = false;
        break;
      }
    if (tight_everywhere)
      throw EmptyInterior("feasible set lies inside the hyperplane of normal " +
                          vec_to_string(h.normal));
  }

  p.vertex_facets_.reserve(p.vertices_.size());
  p.simple_ = true;
  for (const RatVec& v : p.vertices_) {
    auto t = tight_set(p.halfspaces_, v);
    if (t.size() != static_cast<std::size_t>(dimension)) p.simple_ = false;
    p.vertex_facets_.push_back(std::move(t));
  }
  if (p.simple_) p.faces_ = build_face_lattice(p);
  p.report_ = build_report(p);
  return p;
}

const std::vector<Face>& DelzantPolytope::face_lattice() const {
  if (!simple_)
    throw NotSimple("face lattice requires a simple polytope");
  return faces_;
}

std::vector<long> DelzantPolytope::f_vector() const {
  std::vector<long> f(static_cast<std::size_t>(dim_) + 1, 0);
  for (const Face& face : face_lattice()) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

bool DelzantPolytope::contains(const RatVec& x) const {
  for (const Halfspace& h : halfspaces_)
    if (!h.contains(x)) return false;
  return true;
}

std::vector<int> DelzantPolytope::tight_facets(const RatVec& x) const {
  return tight_set(halfspaces_, x);
}

std::vector<RatVec> vertices_of(int dimension, const std::vector<Halfspace>& halfspaces) {
  if (dimension < 1) throw DimensionMismatch("dimension must be at least 1");
  for (const Halfspace& h : halfspaces)
    if (h.normal.size() != static_cast<std::size_t>(dimension))
      throw DimensionMismatch("normal length mismatch");
  if (recession_cone_nontrivial(dimension, halfspaces)) {
    std::vector<std::pair<RatVec, Rat>> rows;
    for (const Halfspace& h : halfspaces) rows.push_back({to_rat_vec(h.normal), h.offset});
    if (feasible_fm(dimension, std::move(rows)))
      throw UnboundedPolytope("feasible set is unbounded");
    throw EmptyPolytope("halfspace intersection is empty");
  }
  auto verts = basic_feasible_points(dimension, halfspaces);
  if (verts.empty()) throw EmptyPolytope("halfspace intersection is empty");
  return verts;
}

DelzantReport is_delzant(const DelzantPolytope& p) { return p.delzant_report(); }

namespace {

void scan_box(const DelzantPolytope& p, std::size_t coord, IntVec& point,
              std::vector<IntVec>& out) {
  std::size_t dim = static_cast<std::size_t>(p.dimension());
  if (coord == dim) {
    RatVec x = to_rat_vec(point);
    if (p.contains(x)) out.push_back(point);
    return;
  }
  Rat lo = p.vertices()[0][coord], hi = lo;
  for (const RatVec& v : p.vertices()) {
    lo = std::min(lo, v[coord]);
    hi = std::max(hi, v[coord]);
  }
  for (Int c = ceil_rat(lo); c <= floor_rat(hi); ++c) {
    point[coord] = c;
    scan_box(p, coord + 1, point, out);
  }
}

}  // namespace

std::vector<IntVec> lattice_points(const DelzantPolytope& p) {
  std::vector<IntVec> out;
  IntVec point(static_cast<std::size_t>(p.dimension()), 0);
  scan_box(p, 0, point, out);
  return out;  // lexicographic by construction
}

std::vector<IntVec> face_interior_lattice_points(const DelzantPolytope& p, const Face& face) {
  std::vector<IntVec> out;
  for (const IntVec& pt : lattice_points(p))
    if (p.tight_facets(to_rat_vec(pt)) == face.facets) out.push_back(pt);
  return out;
}

std::vector<IntVec> edge_generators_at_vertex(const DelzantPolytope& p, std::size_t vertex_index) {
  if (vertex_index >= p.vertices().size()) throw Error("vertex index out of range");
  if (!p.delzant_report().accepted)
    throw NotDelzant("edge generators require a Delzant-accepted polytope");
  return p.delzant_report().vertices[vertex_index].edge_generators;
}

bool in_relative_interior(const DelzantPolytope& p, const Face& face, const RatVec& x) {
  if (!p.contains(x)) return false;
  return p.tight_facets(x) == face.facets;
}

namespace {

Rat norm_sq(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x * x;
  return s;
}

// Orthogonal projection of x onto { y : <normal_f, y> = -offset_f, f in facets }.
std::optional<RatVec> project_affine(const DelzantPolytope& p, const std::vector<int>& facets,
                                     const RatVec& x) {
  std::size_t k = facets.size();
  if (k == 0) return x;
  std::size_t dim = static_cast<std::size_t>(p.dimension());
  RatMat gram(k, RatVec(k));
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Halfspace& hi = p.halfspaces()[facets[i]];
    for (std::size_t j = 0; j < k; ++j)
      gram[i][j] = Rat(dot(hi.normal, p.halfspaces()[facets[j]].normal));
    rhs[i] = hi.eval(x);
  }
  auto z = solve_unique(std::move(gram), std::move(rhs));
  if (!z) return std::nullopt;
  RatVec proj = x;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < dim; ++c)
      proj[c] -= (*z)[i] * Rat(p.halfspaces()[facets[i]].normal[c]);
  return proj;
}

}  // namespace

Rat face_distance_sq(const DelzantPolytope& p, const Face& face, const RatVec& x) {
  std::optional<Rat> best;
  // The nearest point of the face lies in the relative interior of some
  // subface G, where it coincides with the projection onto aff(G).
  for (const Face& g : p.face_lattice()) {
    if (!std::includes(g.facets.begin(), g.facets.end(), face.facets.begin(), face.facets.end()))
      continue;
    auto proj = project_affine(p, g.facets, x);
    if (!proj || !p.contains(*proj)) continue;
    RatVec d(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) d[c] = x[c] - (*proj)[c];
    Rat ds = norm_sq(d);
    if (!best || ds < *best) best = ds;
  }
  if (!best) throw Error("internal: face has no projectable subface");
  return *best;
}

Rat hyperplane_distance_sq(const Halfspace& h, const RatVec& x) {
  Rat v = h.eval(x);
  return v * v / Rat(dot(h.normal, h.normal));
}

std::pair<IntVec, Rat> hyperplane_key(const Halfspace& h) {
  for (const Int& x : h.normal) {
    if (x > 0) return {h.normal, h.offset};
    if (x < 0) return {negated(h.normal), -h.offset};
  }
  return {h.normal, h.offset};
}

DelzantPolytope translate(const DelzantPolytope& p, const RatVec& by) {
  std::vector<Halfspace> hs;
  hs.reserve(p.halfspaces().size());
  for (const Halfspace& h : p.halfspaces())
    hs.emplace_back(h.normal, h.offset - dot(h.normal, by));
  return DelzantPolytope::from_halfspaces(p.dimension(), std::move(hs));
}

DelzantPolytope dilate(const DelzantPolytope& p, const Rat& factor) {
  if (factor <= 0) throw Error("dilation factor must be positive");
  std::vector<Halfspace> hs;
  hs.reserve(p.halfspaces().size());
  for (const Halfspace& h : p.halfspaces()) hs.emplace_back(h.normal, h.offset * factor);
  return DelzantPolytope::from_halfspaces(p.dimension(), std::move(hs));
}

DelzantPolytope transform(const DelzantPolytope& p, const std::vector<IntVec>& g) {
  std::size_t dim = static_cast<std::size_t>(p.dimension());
  if (g.size() != dim) throw DimensionMismatch("transform matrix must be square of polytope dimension");
  RatMat gm = mat_from_int_rows(g);
  Rat d = determinant(gm);
  if (d != 1 && d != -1) throw Error("transform matrix must be unimodular");
  auto ginv = inverse(gm);
  // x in gP  <=>  <nu, g^-1 x> + c >= 0  <=>  <g^-T nu, x> + c >= 0
  std::vector<Halfspace> hs;
  for (const Halfspace& h : p.halfspaces()) {
    RatVec nu(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) nu[i] += (*ginv)[j][i] * Rat(h.normal[j]);
    hs.emplace_back(to_int_vec(nu), h.offset);
  }
  return DelzantPolytope::from_halfspaces(p.dimension(), std::move(hs));
}

}  // namespace origamiq
