#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "triblock/geometry.hpp"

// Exhaustive enumeration over triangulations and diagonal subsets.  These
// routines are the independent ground truth for the O(n^3) decision
// procedures in core.hpp: they never consult the interval DP.

namespace triblock {

// Default capacity guards.  Catalan growth makes triangulation streams
// infeasible past ~14 vertices; subset searches hit 2^(n(n-3)/2).
inline constexpr int kMaxTriangulationEnumerationN = 14;
inline constexpr int kMaxUnrestrictedSearchN = 8;
inline constexpr int kMaxFixedSizeSearchN = 9;
inline constexpr int kMaxMinimumEnumerationN = 12;

// Effective guard: the default, or the TRIBLOCK_CAPACITY environment variable
// when it is set to a larger integer (at the caller's risk).
int capacity_limit(int default_limit);

// Streams every triangulation of the n-gon exactly once (Catalan(n-2) many),
// in a deterministic order.
void enumerate_triangulations(int n, const std::function<void(const EdgeSet&)>& yield);
std::vector<EdgeSet> all_triangulations(int n);

// Blocker test by checking b against every enumerated triangulation.
bool is_blocker_bruteforce(const EdgeSet& b);

// Every saturated blocker of the n-gon, by walking all diagonal subsets in
// lexicographic slot order.  `size_filter` restricts to one cardinality and
// raises the polygon guard from kMaxUnrestrictedSearchN to
// kMaxFixedSizeSearchN.  Subsets leaving a vertex isolated or smaller than
// n-2 are pruned; pruning is validated against the unpruned walk in tests.
std::vector<EdgeSet> all_saturated_blockers(int n, std::optional<int> size_filter = std::nullopt);

// Distinct sizes among all saturated blockers of the n-gon.
std::set<int> saturation_spectrum_exhaustive(int n);

enum class SymmetryGroup { kRotation, kDihedral };

// Orbit representative under rotation (optionally also reflection):
// the image whose sorted (span, start) key sequence is lexicographically
// smallest, where a diagonal (a,b) has key (b-a, a).
EdgeSet canonicalize(const EdgeSet& b, SymmetryGroup group = SymmetryGroup::kRotation);

// Orbit-level dedup convenience: canonical forms of all inputs.
std::set<EdgeSet> canonical_orbits(const std::vector<EdgeSet>& sets, SymmetryGroup group = SymmetryGroup::kRotation);

}  // namespace triblock
