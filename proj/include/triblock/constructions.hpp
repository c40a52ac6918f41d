#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "triblock/geometry.hpp"

// Constructive side of the library: builds saturated blockers of prescribed
// sizes.  Four construction families cover the whole realizable size range
// [n-2, max_reachable(n)] contiguously:
//
//   1. quadrilateral blockers (two opposite "crossing bundles"),
//   2. bridge matrioshkas (one nested quadrilateral over a fixed shell),
//   3. balanced matrioshkas (two nested quadrilaterals of similar size),
//   4. nested matrioshkas (recursive; doubles the reachable size per level).

namespace triblock {

using Rational = boost::multiprecision::cpp_rational;

// Four cyclically consecutive non-empty vertex blocks of an n-gon:
// right {0..a-1}, bottom {a..b-1}, left {b..c-1}, top {c..n-1}.
struct QuadPartition {
  int n = 0;
  int a = 0;
  int b = 0;
  int c = 0;

  int right_size() const { return a; }
  int bottom_size() const { return b - a; }
  int left_size() const { return c - b; }
  int top_size() const { return n - c; }

  void validate() const;
};

// All right-left chords plus all top-bottom chords of the partition.  Always
// a saturated blocker of size |R||L| + |T||B|.
EdgeSet build_quadrilateral(const QuadPartition& p);

// Swaps the chords (0, c-1) and (a-1, b) of the quadrilateral blocker for two
// saturated sub-blockers: bt on the top polygon T u {0, c-1} and bb on the
// bottom polygon B u {a-1, b}, each relabelled counterclockwise starting at
// the shared shell vertex (0 resp. a-1).  Requires left/right blocks >= 3 and
// top/bottom blocks >= 2; bt and bb must be saturated blockers of their
// sub-polygon sizes.
EdgeSet build_matrioshka(const QuadPartition& p, const EdgeSet& bt, const EdgeSet& bb);

// Minimum blocker (size n-2): ear-cover net (0,2),(1,3),...,(m,m+2) plus one
// beam (m+3+j, beam_targets[j]) from every remaining vertex into [1, m+1].
// A later beam may not land two or more positions above an earlier one
// (crossing beams with non-adjacent targets cannot both be saturated).
EdgeSet build_min_blocker(int n, int m, const std::vector<int>& beam_targets);

// Every labeled minimum blocker of the n-gon: all valid (m, beams) shapes in
// all n rotations, deduplicated.  Guarded at kMaxMinimumEnumerationN.
std::vector<EdgeSet> enumerate_min_blockers(int n);

// --- Size-spectrum realization -------------------------------------------

// Family 1: quadrilateral blocker of exact size t.  Accepts any t in
// [n-2, quadrilateral_family_max(n)]; picks the smallest feasible top size.
EdgeSet realize_quadrilateral(int n, int t);
int quadrilateral_family_max(int n);

// Family 2: matrioshka with a minimum-sized bottom blocker and a variable
// quadrilateral top blocker; fills the gap above family 1.  Needs n >= 21.
EdgeSet realize_matrioshka_bridge(int n, int t);

// Family 3: matrioshka with two balanced quadrilateral sub-blockers.
// Needs n >= 25.
EdgeSet realize_matrioshka_balanced(int n, int t);

// Family 4: matrioshka whose sub-blockers are built recursively by the
// dispatcher on polygons of roughly half the size.
EdgeSet realize_matrioshka_nested(int n, int t);

// Dispatcher band layout for one polygon size; ends are inclusive and each
// band starts right after the previous one.
struct SpectrumBands {
  int quad_end = 0;
  int bridge_end = 0;    // meaningful when bridge_enabled
  int balanced_end = 0;  // meaningful when balanced_enabled
  int nested_end = 0;    // meaningful when nested_enabled
  bool bridge_enabled = false;
  bool balanced_enabled = false;
  bool nested_enabled = false;

  int last_end() const;
};

SpectrumBands spectrum_bands(int n);

// Largest size the dispatcher can realize for the n-gon (n >= 5); every size
// in [n-2, max_reachable(n)] is realizable.  Memoized.
int max_reachable(int n);

// Saturated blocker of exact size t, routed to the lowest construction family
// whose band contains t.
EdgeSet build_spectrum_blocker(int n, int t);

// Growth coefficients of the nested family: level i of the recursion reaches
// sizes up to a_i * n^2 + b_i * n + c_i.  Exact rational arithmetic;
// closed forms are exposed for cross-checking the recurrence.
struct RecursionCoefficients {
  int index = 0;
  Rational a, b, c;
};

RecursionCoefficients recursion_coefficients(int i);
Rational nested_growth_a_closed(int i);
Rational nested_growth_b_closed(int i);
Rational nested_growth_c_closed(int i);

}  // namespace triblock
