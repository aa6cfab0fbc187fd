#pragma once

#include <map>
#include <optional>

#include "origamiq/cylinder.hpp"
#include "origamiq/quantize.hpp"

namespace origamiq {

// Slab half-width for the fold neighborhoods. The crack band on a fold-
// adjacent facet spans fold distances [epsilon/2, epsilon].
struct CoveringParams {
  Rat epsilon;
};

struct EpsilonBound {
  bool constrained = false;  // false: any positive epsilon is admissible
  Rat min_distance_sq;       // admissible iff epsilon^2 < this (when constrained)
  Rat suggested;             // a valid choice strictly below the bound
};

// Smallest squared distance from a lattice point of any polytope to a
// non-containing face or to a fold hyperplane it does not lie on; admissible
// epsilon are exactly those with epsilon^2 strictly below it.
EpsilonBound max_admissible_epsilon(const OrigamiTemplate& t);
EpsilonBound max_admissible_epsilon(const BuiltTemplate& t);

bool epsilon_admissible(const BuiltTemplate& t, const Rat& epsilon);

enum class RegionKind { Face, FoldBand, Crack };

struct RegionTag {
  RegionKind kind = RegionKind::Face;
  int face = -1;   // index into the polytope's face lattice (Face)
  int fold = -1;   // fold index (FoldBand, Crack)
  int facet = -1;  // crack facet index in its own polytope (Crack)

  bool operator==(const RegionTag&) const = default;
  auto operator<=>(const RegionTag&) const = default;
};

struct PointAssignment {
  IntVec point;
  RegionTag tag;
  bool ambiguous = false;           // only possible for inadmissible epsilon
  std::vector<RegionTag> competing; // the other tags that claimed the point
};

struct Covering {
  Rat epsilon;
  bool admissible = false;
  // Assignments per polytope, lattice points in lexicographic order.
  std::vector<std::vector<PointAssignment>> per_polytope;
};

// Classifies every lattice point of every polytope: cracks first, then the
// fold band, then faces by ascending dimension, then the interior. In strict
// mode an inadmissible epsilon throws InadmissibleEpsilon; otherwise
// classification proceeds and ambiguities are flagged.
Covering build_covering(const OrigamiTemplate& t, const CoveringParams& params,
                        bool strict = true);
Covering build_covering(const BuiltTemplate& t, const CoveringParams& params, bool strict = true);

struct RegionContribution {
  std::size_t polytope = 0;
  RegionTag tag;
  std::string key;  // polytope-independent region identity, used for pairing
  std::vector<IntVec> points;
  Character signed_character;

  RegionContribution() : signed_character(1) {}
};

struct AuditReport {
  bool pass = false;
  bool admissible = false;
  Rat epsilon;
  Character reassembled;  // signed sum over regions
  Character expected;     // danilov_template character
  std::vector<RegionContribution> regions;
  long fold_band_points = 0;
  long crack_points = 0;
  // Signed region sums grouped by geometric identity across polytopes; for a
  // two-copy template every entry cancels to zero.
  std::map<std::string, Character> paired;
  bool paired_all_zero = false;
  KernelReport fold_normal_certificate;  // index-zero certificate for the fold model
  std::vector<std::string> failures;

  AuditReport() : reassembled(1), expected(1) {}
};

// Verifies the localization bookkeeping: regions partition the lattice
// points, fold bands and cracks are lattice-empty, the signed per-region sum
// reassembles the template character, and the transverse fold model
// certifies index zero. Inadmissible epsilon produces a failing report
// naming the offending points rather than throwing.
AuditReport audit_localization(const OrigamiTemplate& t, const CoveringParams& params);
AuditReport audit_localization(const BuiltTemplate& t, const CoveringParams& params);

}  // namespace origamiq
