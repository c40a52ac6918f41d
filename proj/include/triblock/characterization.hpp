#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "triblock/geometry.hpp"

// Structure theory of the two smallest saturated sizes.  Every saturated
// blocker of size n-2 is a "boundary net plus beams" shape up to rotation;
// every saturated blocker of size n-1 is that shape with one small motif
// (seagull / butterfly / bouquet) spliced in.  This module provides builders
// for the templates, recognizers that parse an arbitrary edge set back into
// template parameters, the edit recipe connecting the two sizes, and the
// vertex-insertion transform used to grow blockers one vertex at a time.

namespace triblock {

// Parse of a size-(n-2) saturated blocker: the input equals
// build_min_blocker(n, m, beam_targets).rotated(rotation).
struct MinBlockerShape {
  int rotation = 0;
  int m = 0;
  std::vector<int> beam_targets;

  friend bool operator==(const MinBlockerShape&, const MinBlockerShape&) = default;
};

// Tries all n rotations against the net-plus-beams template and returns the
// lexicographically smallest (rotation, m, beam_targets) parse, or empty if
// none matches.  For saturated blockers of size n-2 a parse always exists.
std::optional<MinBlockerShape> recognize_min_blocker(const EdgeSet& b);

enum class Nm1Variant { kSeagull, kButterfly, kBouquet };

// Parse of a size-(n-1) saturated blocker: the input equals the matching
// builder applied to these parameters, rotated by `rotation`.  k, t and the
// split beam lists are used by the bouquet variant only; seagull and
// butterfly carry a single beam-target list.
struct Nm1Classification {
  Nm1Variant variant = Nm1Variant::kSeagull;
  int rotation = 0;
  int ell = 0;
  int m = 0;
  int k = 0;
  int t = 0;
  std::vector<int> beams;
  std::vector<int> beams_left;
  std::vector<int> beams_right;

  friend bool operator==(const Nm1Classification&, const Nm1Classification&) = default;
};

// Seagull: the four-edge motif {(l-2,l), (l-2,l+1), (l-1,l+2), (l,l+2)}
// replacing the ear cover (l-1,l+1) of a boundary net, for 2 < l < m and
// 4 <= m <= n-3.  Beam targets live in [1, m+1] minus {l}; crossing beams
// must aim at vertices at distance <= 1, as in build_min_blocker.
EdgeSet build_seagull_blocker(int n, int ell, int m, const std::vector<int>& beam_targets);

// Butterfly: the five-edge motif {(l-2,l), (l-2,l+1), (l-1,l+2), (l,l+3),
// (l+1,l+3)} replacing the two consecutive ear covers (l-1,l+1), (l,l+2),
// for 2 < l < m-1 and 5 <= m <= n-3.  Beam targets avoid both l and l+1.
EdgeSet build_butterfly_blocker(int n, int ell, int m, const std::vector<int>& beam_targets);

// Bouquet: a vase {(l-1,l+1), (k,l-1), (k+t,l+1), (k,k+t)} whose interior
// vertices k+1..k+t-1 all beam to l, with 0 < l < m+2 < k < k+t <= n-1 and
// t >= 2.  The boundary net splits around l; beams split into a left run
// (sources m+3..k-1, targets in [l, m+1]) and a right run (sources
// k+t+1..n-1, targets in [1, l]), each under the adjacent-target rule.
EdgeSet build_bouquet_blocker(int n, int ell, int m, int k, int t, const std::vector<int>& beams_left, const std::vector<int>& beams_right);

// Rebuilds the edge set a classification describes (builder + rotation).
EdgeSet build_nm1_blocker(int n, const Nm1Classification& c);

// Parses a size-(n-1) saturated blocker into exactly one of the three
// variants, searching all rotations.  Matching prefers seagull, then
// butterfly, then bouquet, and returns the lexicographically smallest
// parameterization; a butterfly motif with an uncovered end vertex never
// matches the butterfly template and lands in the bouquet variant instead.
// Throws ConstraintError if the input has the wrong size, n <= 5, or no
// template matches (i.e. it is not a saturated blocker of size n-1).
Nm1Classification classify_nm1(const EdgeSet& b);

// Edits a size-(n-1) saturated blocker down to a size-(n-2) one by undoing
// the motif splice: seagull and bouquet trade two edges for one (symmetric
// difference 3), butterfly trades three for two (symmetric difference 5).
// Returns the smaller blocker and the symmetric-difference size.
std::pair<EdgeSet, int> stability_distance(const EdgeSet& b);

// Inserts a new vertex into the boundary gap between `gap` and `gap`+1 and
// adds the two edges e1, e2 (given in the labels of the grown (n+1)-gon,
// both incident to the new vertex gap+1).  Old edges are relabelled to make
// room.  No saturation check is performed: callers probe the result with the
// core predicates.
EdgeSet extend_by_vertex(const EdgeSet& b, int gap, Edge e1, Edge e2);

}  // namespace triblock
