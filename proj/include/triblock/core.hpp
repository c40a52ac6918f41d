#pragma once

#include <optional>

#include "triblock/geometry.hpp"

// Verification engine: decides whether a diagonal set admits / blocks
// triangulations of the convex n-gon.  All decision procedures run in
// O(n^3) time and O(n^2) space via interval dynamic programming.

namespace triblock {

// True iff t consists of exactly n-3 pairwise non-crossing diagonals.
bool is_triangulation(const EdgeSet& t);

// True iff some triangulation uses only diagonals drawn from `allowed`.
bool contains_triangulation(const EdgeSet& allowed);

// A concrete triangulation inside `allowed`, if one exists.  Deterministic:
// each polygon interval is split at the smallest feasible apex.
std::optional<EdgeSet> witness_triangulation(const EdgeSet& allowed);

// True iff every triangulation of the n-gon uses at least one edge of b.
// For n = 3 there are no triangulations to avoid b, so every set (including
// the empty one) blocks vacuously.
bool is_blocker(const EdgeSet& b);

// True iff b is a blocker and no proper subset of b is: removing any single
// edge must free some triangulation.
bool is_saturated_blocker(const EdgeSet& b);

// Removes vertex v: drops all edges incident to v plus the ear cover
// (v-1, v+1) if present, then relabels vertices above v downwards.  Result
// lives on the (n-1)-gon; edges that collapse to boundary edges are dropped.
EdgeSet vertex_deletion(const EdgeSet& b, int v);

}  // namespace triblock
