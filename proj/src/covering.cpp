#include "origamiq/covering.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <sstream>

namespace origamiq {

namespace {

struct IncidentFold {
  int fold = 0;        // index into BuiltTemplate::folds
  int facet = 0;       // fold facet index in this polytope
  std::vector<int> crack_facets;  // adjacent non-fold facets, sorted
};

// Folds touching polytope `pi`, with the facets whose crack bands they own.
std::vector<IncidentFold> incident_folds(const BuiltTemplate& t, std::size_t pi) {
  const std::string& name = t.names[pi];
  const DelzantPolytope& p = t.polytopes[pi];
  std::vector<int> fold_facets;
  std::vector<IncidentFold> out;
  for (std::size_t fi = 0; fi < t.folds.size(); ++fi) {
    const FoldSpec& f = t.folds[fi];
    if (f.a.polytope == name) fold_facets.push_back(f.a.facet);
    if (f.b.polytope == name) fold_facets.push_back(f.b.facet);
  }
  for (std::size_t fi = 0; fi < t.folds.size(); ++fi) {
    const FoldSpec& f = t.folds[fi];
    int facet = -1;
    if (f.a.polytope == name) facet = f.a.facet;
    if (f.b.polytope == name) facet = f.b.facet;
    if (facet < 0) continue;
    IncidentFold inc;
    inc.fold = static_cast<int>(fi);
    inc.facet = facet;
    // A facet is adjacent to the fold facet when they meet in a face; on a
    // simple polytope that face has codimension 2.
    for (int g = 0; g < static_cast<int>(p.halfspaces().size()); ++g) {
      if (g == facet) continue;
      if (std::find(fold_facets.begin(), fold_facets.end(), g) != fold_facets.end()) continue;
      bool adjacent = false;
      for (const Face& face : p.face_lattice()) {
        if (std::binary_search(face.facets.begin(), face.facets.end(), facet) &&
            std::binary_search(face.facets.begin(), face.facets.end(), g)) {
          adjacent = true;
          break;
        }
      }
      if (adjacent) inc.crack_facets.push_back(g);
    }
    out.push_back(std::move(inc));
  }
  return out;
}

// Smallest positive squared distance from lattice points to fold hyperplanes
// (any fold, any polytope) and to non-containing faces (own polytope), with
// a description of a witness realizing it.
struct BoundScan {
  bool constrained = false;
  Rat min_sq;
  std::string witness;
};

BoundScan scan_bound(const BuiltTemplate& t) {
  BoundScan scan;
  auto consider = [&scan](const Rat& d_sq, const std::string& what) {
    if (!scan.constrained || d_sq < scan.min_sq) {
      scan.constrained = true;
      scan.min_sq = d_sq;
      scan.witness = what;
    }
  };
  std::vector<Halfspace> fold_hyps;
  for (const FoldSpec& f : t.folds) {
    const DelzantPolytope& pa = t.polytopes[t.index_of(f.a.polytope)];
    fold_hyps.push_back(pa.halfspaces()[static_cast<std::size_t>(f.a.facet)]);
  }
  for (std::size_t pi = 0; pi < t.polytopes.size(); ++pi) {
    const DelzantPolytope& p = t.polytopes[pi];
    for (const IntVec& pt : lattice_points(p)) {
      RatVec x = to_rat_vec(pt);
      for (std::size_t fi = 0; fi < fold_hyps.size(); ++fi) {
        Rat d = hyperplane_distance_sq(fold_hyps[fi], x);
        if (d > 0)
          consider(d, "lattice point " + vec_to_string(pt) + " of polytope \"" + t.names[pi] +
                          "\" against fold " + std::to_string(fi));
      }
      auto tight = p.tight_facets(x);
      for (const Face& face : p.face_lattice()) {
        if (face.dim == p.dimension()) continue;
        bool inside = std::includes(tight.begin(), tight.end(), face.facets.begin(),
                                    face.facets.end());
        if (inside) continue;
        consider(face_distance_sq(p, face, x),
                 "lattice point " + vec_to_string(pt) + " of polytope \"" + t.names[pi] +
                     "\" against the face with facet set " + [&] {
                       std::string s = "{";
                       for (std::size_t k = 0; k < face.facets.size(); ++k)
                         s += (k ? "," : "") + std::to_string(face.facets[k]);
                       return s + "}";
                     }());
      }
    }
  }
  return scan;
}

// Largest rational k-bit approximation strictly below sqrt(bound_sq).
Rat sqrt_below(const Rat& bound_sq) {
  using boost::multiprecision::sqrt;
  for (unsigned bits = 16;; bits *= 2) {
    Int scale = Int(1) << bits;
    Int s = sqrt(numerator(bound_sq) * scale * scale / denominator(bound_sq));
    // Step down on the 2^-bits grid (the value itself may normalize, so the
    // step must not depend on the reduced denominator).
    Rat candidate(s, scale);
    const Rat step(1, scale);
    while (candidate > 0 && candidate * candidate >= bound_sq) candidate -= step;
    if (candidate > 0) return candidate;
    if (bits > 4096) throw Error("internal: admissible bound is not positive");
  }
}

std::string face_key(const DelzantPolytope& p, const Face& face) {
  std::vector<std::string> verts;
  for (int v : face.vertices) verts.push_back(vec_to_string(p.vertices()[static_cast<std::size_t>(v)]));
  std::sort(verts.begin(), verts.end());
  std::string s = "face dim=" + std::to_string(face.dim) + " verts=";
  for (const std::string& v : verts) s += v;
  return s;
}

std::string crack_key(const DelzantPolytope& p, int fold, int facet) {
  auto key = hyperplane_key(p.halfspaces()[static_cast<std::size_t>(facet)]);
  return "crack fold=" + std::to_string(fold) + " hyperplane=" + vec_to_string(key.first) +
         "@" + rational_to_string(key.second);
}

}  // namespace

EpsilonBound max_admissible_epsilon(const OrigamiTemplate& t) {
  return max_admissible_epsilon(build_template(t));
}

EpsilonBound max_admissible_epsilon(const BuiltTemplate& t) {
  BoundScan scan = scan_bound(t);
  EpsilonBound b;
  b.constrained = scan.constrained;
  if (scan.constrained) {
    b.min_distance_sq = scan.min_sq;
    b.suggested = sqrt_below(scan.min_sq);
  } else {
    b.suggested = Rat(1, 2);
  }
  return b;
}

bool epsilon_admissible(const BuiltTemplate& t, const Rat& epsilon) {
  if (epsilon <= 0) return false;
  BoundScan scan = scan_bound(t);
  return !scan.constrained || epsilon * epsilon < scan.min_sq;
}

Covering build_covering(const OrigamiTemplate& t, const CoveringParams& params, bool strict) {
  return build_covering(build_template(t), params, strict);
}

Covering build_covering(const BuiltTemplate& t, const CoveringParams& params, bool strict) {
  if (params.epsilon <= 0) throw InadmissibleEpsilon("epsilon must be positive");
  Covering cov;
  cov.epsilon = params.epsilon;
  cov.admissible = epsilon_admissible(t, params.epsilon);
  if (strict && !cov.admissible) {
    BoundScan scan = scan_bound(t);
    throw InadmissibleEpsilon("epsilon " + rational_to_string(params.epsilon) +
                              " is not admissible; squared bound is " +
                              rational_to_string(scan.min_sq) + " attained by " + scan.witness);
  }

  Rat eps_sq = params.epsilon * params.epsilon;
  Rat half_sq = eps_sq / 4;

  for (std::size_t pi = 0; pi < t.polytopes.size(); ++pi) {
    const DelzantPolytope& p = t.polytopes[pi];
    auto incident = incident_folds(t, pi);
    std::vector<PointAssignment> assignments;

    for (const IntVec& pt : lattice_points(p)) {
      RatVec x = to_rat_vec(pt);
      auto tight = p.tight_facets(x);

      std::vector<RegionTag> claims;  // within the winning precedence class

      // Stage 1: cracks. The band [eps/2, eps] never reaches distance zero,
      // so points on the fold itself are left for the face stages.
      for (const IncidentFold& inc : incident) {
        const Halfspace& hyp = p.halfspaces()[static_cast<std::size_t>(inc.facet)];
        Rat d = hyperplane_distance_sq(hyp, x);
        if (d == 0 && !std::binary_search(tight.begin(), tight.end(), inc.facet))
          throw DegenerateTemplate("lattice point " + vec_to_string(pt) +
                                   " lies on the hyperplane of fold " +
                                   std::to_string(inc.fold) + " but not on its facet");
        if (d < half_sq || d > eps_sq) continue;
        for (int f : inc.crack_facets)
          if (std::binary_search(tight.begin(), tight.end(), f))
            claims.push_back(RegionTag{RegionKind::Crack, -1, inc.fold, f});
      }

      // Stage 2: the fold band.
      if (claims.empty()) {
        for (const IncidentFold& inc : incident) {
          const Halfspace& hyp = p.halfspaces()[static_cast<std::size_t>(inc.facet)];
          Rat d = hyperplane_distance_sq(hyp, x);
          if (d > 0 && d < eps_sq)
            claims.push_back(RegionTag{RegionKind::FoldBand, -1, inc.fold, -1});
        }
      }

      // Stage 3: faces by ascending dimension; the first dimension with a
      // claim wins, ties within it are ambiguous.
      if (claims.empty()) {
        const auto& faces = p.face_lattice();
        int claimed_dim = -1;
        for (std::size_t fid = 0; fid < faces.size(); ++fid) {
          const Face& face = faces[fid];
          if (face.dim == p.dimension()) break;  // interior handled below
          if (claimed_dim >= 0 && face.dim > claimed_dim) break;
          if (face_distance_sq(p, face, x) < eps_sq) {
            claims.push_back(RegionTag{RegionKind::Face, static_cast<int>(fid), -1, -1});
            claimed_dim = face.dim;
          }
        }
        if (claims.empty()) {
          // faces are sorted by dimension, so the interior face is last
          claims.push_back(
              RegionTag{RegionKind::Face, static_cast<int>(faces.size()) - 1, -1, -1});
        }
      }

      std::sort(claims.begin(), claims.end());
      PointAssignment pa;
      pa.point = pt;
      pa.tag = claims.front();
      pa.ambiguous = claims.size() > 1;
      pa.competing.assign(claims.begin() + 1, claims.end());
      assignments.push_back(std::move(pa));
    }
    cov.per_polytope.push_back(std::move(assignments));
  }
  return cov;
}

AuditReport audit_localization(const OrigamiTemplate& t, const CoveringParams& params) {
  return audit_localization(build_template(t), params);
}

AuditReport audit_localization(const BuiltTemplate& t, const CoveringParams& params) {
  AuditReport rep;
  rep.epsilon = params.epsilon;
  rep.reassembled = Character(t.dimension);
  rep.expected = danilov_template(t).character;

  Covering cov = build_covering(t, params, /*strict=*/false);
  rep.admissible = cov.admissible;
  if (!rep.admissible) {
    BoundScan scan = scan_bound(t);
    std::string bound =
        scan.constrained ? rational_to_string(scan.min_sq) : std::string("unconstrained");
    rep.failures.push_back("epsilon " + rational_to_string(params.epsilon) +
                           " exceeds the admissible bound (squared bound " + bound +
                           (scan.constrained ? ", attained by " + scan.witness : "") + ")");
  }

  for (std::size_t pi = 0; pi < t.polytopes.size(); ++pi) {
    const DelzantPolytope& p = t.polytopes[pi];
    const auto& faces = p.face_lattice();
    int sign = t.signs[pi];
    std::map<RegionTag, std::vector<IntVec>> points_by_tag;

    // every face region exists, even when empty
    for (std::size_t fid = 0; fid < faces.size(); ++fid)
      points_by_tag[RegionTag{RegionKind::Face, static_cast<int>(fid), -1, -1}];
    for (const IncidentFold& inc : incident_folds(t, pi)) {
      points_by_tag[RegionTag{RegionKind::FoldBand, -1, inc.fold, -1}];
      for (int f : inc.crack_facets)
        points_by_tag[RegionTag{RegionKind::Crack, -1, inc.fold, f}];
    }

    for (const PointAssignment& pa : cov.per_polytope[pi]) {
      points_by_tag[pa.tag].push_back(pa.point);
      if (pa.ambiguous)
        rep.failures.push_back("lattice point " + vec_to_string(pa.point) + " of polytope \"" +
                               t.names[pi] + "\" is claimed by " +
                               std::to_string(pa.competing.size() + 1) +
                               " regions of equal precedence");
    }

    for (auto& [tag, points] : points_by_tag) {
      RegionContribution rc;
      rc.polytope = pi;
      rc.tag = tag;
      rc.points = points;
      rc.signed_character = Character(t.dimension);
      for (const IntVec& pt : points)
        rc.signed_character += Character::monomial(pt, Int(sign));
      switch (tag.kind) {
        case RegionKind::Face: {
          const Face& face = faces[static_cast<std::size_t>(tag.face)];
          rc.key = face_key(p, face);
          // Face regions must agree with the relative-interior enumeration;
          // assignment points arrive in lexicographic order already.
          auto expected_points = face_interior_lattice_points(p, face);
          if (points != expected_points)
            rep.failures.push_back(
                "face region " + rc.key + " of polytope \"" + t.names[pi] + "\" holds " +
                std::to_string(points.size()) + " points but the relative interior has " +
                std::to_string(expected_points.size()));
          break;
        }
        case RegionKind::FoldBand:
          rc.key = "fold-band fold=" + std::to_string(tag.fold);
          rep.fold_band_points += static_cast<long>(points.size());
          for (const IntVec& pt : points)
            rep.failures.push_back("fold band of fold " + std::to_string(tag.fold) +
                                   " contains lattice point " + vec_to_string(pt) +
                                   " in polytope \"" + t.names[pi] + "\"");
          break;
        case RegionKind::Crack:
          rc.key = crack_key(p, tag.fold, tag.facet);
          rep.crack_points += static_cast<long>(points.size());
          for (const IntVec& pt : points)
            rep.failures.push_back("crack of fold " + std::to_string(tag.fold) + " on facet " +
                                   std::to_string(tag.facet) + " contains lattice point " +
                                   vec_to_string(pt) + " in polytope \"" + t.names[pi] + "\"");
          break;
      }
      rep.reassembled += rc.signed_character;
      auto [it, fresh] = rep.paired.emplace(rc.key, rc.signed_character);
      if (!fresh) it->second += rc.signed_character;
      rep.regions.push_back(std::move(rc));
    }
  }

  if (rep.reassembled != rep.expected)
    rep.failures.push_back("signed region reassembly disagrees with the template character");

  rep.paired_all_zero = true;
  for (const auto& [key, ch] : rep.paired)
    if (!ch.is_zero()) rep.paired_all_zero = false;

  // The transverse model along any fold must carry no index; certify once.
  rep.fold_normal_certificate = kernel_dimension(Rat(0), Int(-3), Int(3));
  if (!rep.fold_normal_certificate.pass)
    rep.failures.push_back("fold normal model failed the index-zero certificate");

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace origamiq
