#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Combinatorics of a convex polygon with vertices 0..n-1 in counterclockwise
// order.  All edge sets in this library hold *diagonals only*; boundary edges
// are implicit and always present in any triangulation context.

namespace triblock {

// Input violates a structural constraint (range, crossing rule, shape).
class ConstraintError : public std::runtime_error {
 public:
  explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

// Requested instance exceeds a guarded capacity bound.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON documents, CLI payloads).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Unordered vertex pair stored canonically with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizes endpoint order; endpoints must be distinct and non-negative.
Edge make_edge(int u, int v);

// min(b-a, n-(b-a)): 1 for boundary edges, 2 for ear covers, >=2 for any
// diagonal.
int edge_order(Edge e, int n);

bool is_boundary_edge(Edge e, int n);
bool is_diagonal(Edge e, int n);

// Strict interior crossing: the endpoint indices interleave.  Edges sharing an
// endpoint never cross.
bool crosses(Edge e, Edge f);

// Set of diagonals of a convex n-gon, stored as a bitset over the n(n-3)/2
// diagonal slots in lexicographic (a,b) order.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int n);

  static EdgeSet all_diagonals(int n);
  static int diagonal_count(int n);

  // Slot index of a diagonal in lexicographic (a,b) order; throws
  // ConstraintError if (a,b) is not a diagonal of the n-gon.
  static int slot_of(int n, Edge e);
  static Edge edge_at(int n, int slot);

  int polygon_size() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }

  bool contains(Edge e) const;
  void insert(Edge e);
  void erase(Edge e);

  std::vector<Edge> edges() const;  // lexicographic (a,b)

  EdgeSet& operator|=(const EdgeSet& rhs);
  EdgeSet& operator&=(const EdgeSet& rhs);
  EdgeSet& operator-=(const EdgeSet& rhs);
  friend EdgeSet operator|(EdgeSet lhs, const EdgeSet& rhs) { return lhs |= rhs; }
  friend EdgeSet operator&(EdgeSet lhs, const EdgeSet& rhs) { return lhs &= rhs; }
  friend EdgeSet operator-(EdgeSet lhs, const EdgeSet& rhs) { return lhs -= rhs; }

  bool operator==(const EdgeSet& rhs) const = default;
  // Total order usable for std::set / dedup: polygon size, then raw words.
  bool operator<(const EdgeSet& rhs) const;

  // Relabels every edge (a,b) -> (a+r, b+r) mod n.
  EdgeSet rotated(int r) const;
  // Relabels every edge by the mirror v -> (n - v) mod n.
  EdgeSet reflected() const;

  bool test_slot(int slot) const;
  void set_slot(int slot);

 private:
  void check_same_polygon(const EdgeSet& rhs) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Degree of vertex v in b (number of incident diagonals).
int degree(const EdgeSet& b, int v);

}  // namespace triblock
