#include "triblock/core.hpp"

#include <vector>

namespace triblock {

namespace {

// Fills the standard interval table: can[i][j] says the sub-polygon on
// vertices i..j (with chord (i,j) acting as its base) is triangulable using
// boundary edges and diagonals from `allowed`.  Optionally records the
// smallest feasible apex per interval for witness reconstruction.
struct IntervalTable {
  int n;
  std::vector<std::uint8_t> can;
  std::vector<int> split;

  bool at(int i, int j) const { return can[static_cast<std::size_t>(i) * n + j] != 0; }
};

IntervalTable solve_intervals(const EdgeSet& allowed, bool record_splits) {
  int n = allowed.polygon_size();
  IntervalTable t{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0), {}};
  if (record_splits) t.split.assign(static_cast<std::size_t>(n) * n, -1);

  auto usable = [&](int x, int y) {
    Edge e = make_edge(x, y);
    return is_boundary_edge(e, n) || allowed.contains(e);
  };

  for (int i = 0; i + 1 < n; ++i) t.can[static_cast<std::size_t>(i) * n + i + 1] = 1;
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      for (int k = i + 1; k < j; ++k) {
        if (t.at(i, k) && t.at(k, j) && usable(i, k) && usable(k, j)) {
          t.can[static_cast<std::size_t>(i) * n + j] = 1;
          if (record_splits) t.split[static_cast<std::size_t>(i) * n + j] = k;
          break;
        }
      }
    }
  }
  return t;
}

// Interval table over doubled vertex indices 0..2n-1 (index v stands for
// v mod n), covering the "outside" cyclic intervals that wrap past vertex 0.
// Only spans up to n-2 are needed: the complement of a diagonal's interval.
struct CyclicTable {
  int n;
  std::vector<std::uint8_t> can;

  bool at(int i, int j) const { return can[static_cast<std::size_t>(i) * (2 * n) + j] != 0; }
};

CyclicTable solve_cyclic_intervals(const EdgeSet& allowed) {
  int n = allowed.polygon_size();
  int m = 2 * n;
  CyclicTable t{n, std::vector<std::uint8_t>(static_cast<std::size_t>(m) * m, 0)};

  auto usable = [&](int x, int y) {
    int xm = x % n, ym = y % n;
    if (xm == ym) return false;
    Edge e = make_edge(xm, ym);
    return is_boundary_edge(e, n) || allowed.contains(e);
  };

  for (int i = 0; i + 1 < m; ++i) t.can[static_cast<std::size_t>(i) * m + i + 1] = 1;
  for (int len = 2; len <= n - 2; ++len) {
    for (int i = 0; i + len < m; ++i) {
      int j = i + len;
      for (int k = i + 1; k < j; ++k) {
        if (t.at(i, k) && t.at(k, j) && usable(i, k) && usable(k, j)) {
          t.can[static_cast<std::size_t>(i) * m + j] = 1;
          break;
        }
      }
    }
  }
  return t;
}

}  // namespace

bool is_triangulation(const EdgeSet& t) {
  int n = t.polygon_size();
  if (t.size() != n - 3) return false;
  std::vector<Edge> es = t.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (crosses(es[i], es[j])) return false;
    }
  }
  return true;
}

bool contains_triangulation(const EdgeSet& allowed) {
  IntervalTable t = solve_intervals(allowed, /*record_splits=*/false);
  return t.at(0, allowed.polygon_size() - 1);
}

std::optional<EdgeSet> witness_triangulation(const EdgeSet& allowed) {
  int n = allowed.polygon_size();
  IntervalTable t = solve_intervals(allowed, /*record_splits=*/true);
  if (!t.at(0, n - 1)) return std::nullopt;

  EdgeSet result(n);
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) continue;
    int k = t.split[static_cast<std::size_t>(i) * n + j];
    if (k - i >= 2) result.insert(make_edge(i, k));
    if (j - k >= 2) result.insert(make_edge(k, j));
    pending.emplace_back(i, k);
    pending.emplace_back(k, j);
  }
  return result;
}

bool is_blocker(const EdgeSet& b) {
  int n = b.polygon_size();
  if (n == 3) return true;  // no triangulations exist, nothing can avoid b
  EdgeSet allowed = EdgeSet::all_diagonals(n) - b;
  return !contains_triangulation(allowed);
}

bool is_saturated_blocker(const EdgeSet& b) {
  int n = b.polygon_size();
  if (n == 3) return b.empty();
  if (!is_blocker(b)) return false;

  // b minus an edge e = (x,y) stays a blocker iff no triangulation uses e
  // with everything else drawn from the complement of b.  Such a
  // triangulation splits at e: the inside interval x..y and the outside
  // cyclic interval y..x+n must both triangulate within the complement.
  EdgeSet allowed = EdgeSet::all_diagonals(n) - b;
  IntervalTable inner = solve_intervals(allowed, /*record_splits=*/false);
  CyclicTable outer = solve_cyclic_intervals(allowed);
  for (const Edge& e : b.edges()) {
    bool freed = inner.at(e.a, e.b) && outer.at(e.b, e.a + n);
    if (!freed) return false;  // b \ {e} still blocks
  }
  return true;
}

EdgeSet vertex_deletion(const EdgeSet& b, int v) {
  int n = b.polygon_size();
  if (n <= 3) throw ConstraintError("cannot delete a vertex of a triangle");
  if (v < 0 || v >= n) throw ConstraintError("vertex out of range");

  Edge ear = make_edge((v + n - 1) % n, (v + 1) % n);
  EdgeSet out(n - 1);
  for (const Edge& e : b.edges()) {
    if (e.a == v || e.b == v) continue;
    if (is_diagonal(ear, n) && e == ear) continue;
    int a = e.a > v ? e.a - 1 : e.a;
    int bb = e.b > v ? e.b - 1 : e.b;
    Edge mapped = make_edge(a, bb);
    if (is_diagonal(mapped, n - 1)) out.insert(mapped);
  }
  return out;
}

}  // namespace triblock
