#include "triblock/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>

namespace triblock {

namespace {

// 128-bit slot mask: wide enough for every guarded polygon size
// (n = 16 already needs 104 slots, far past any search guard).
struct Mask128 {
  std::uint64_t lo = 0, hi = 0;

  void set(int slot) {
    if (slot < 64) {
      lo |= std::uint64_t{1} << slot;
    } else {
      hi |= std::uint64_t{1} << (slot - 64);
    }
  }
  bool test(int slot) const {
    return slot < 64 ? (lo >> slot) & 1u : (hi >> (slot - 64)) & 1u;
  }
  Mask128 operator&(const Mask128& rhs) const { return {lo & rhs.lo, hi & rhs.hi}; }
  bool any() const { return (lo | hi) != 0; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool operator==(const Mask128&) const = default;
};

Mask128 to_mask(const EdgeSet& s) {
  Mask128 m;
  int total = EdgeSet::diagonal_count(s.polygon_size());
  for (int slot = 0; slot < total; ++slot) {
    if (s.test_slot(slot)) m.set(slot);
  }
  return m;
}

EdgeSet from_mask(int n, const Mask128& m) {
  EdgeSet s(n);
  int total = EdgeSet::diagonal_count(n);
  for (int slot = 0; slot < total; ++slot) {
    if (m.test(slot)) s.set_slot(slot);
  }
  return s;
}

void check_mask_capacity(int n) {
  if (EdgeSet::diagonal_count(n) > 128) throw CapacityError("polygon size " + std::to_string(n) + " exceeds the 128-slot search mask");
}

// Triangulation masks for a polygon size, computed once per size.
const std::vector<Mask128>& triangulation_masks(int n) {
  static std::map<int, std::vector<Mask128>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  check_mask_capacity(n);
  std::vector<Mask128> masks;
  enumerate_triangulations(n, [&](const EdgeSet& t) { masks.push_back(to_mask(t)); });
  return cache.emplace(n, std::move(masks)).first->second;
}

// Blocker + saturation verdict straight from the triangulation list:
// b blocks iff no triangulation misses it, and b is saturated iff in
// addition every edge of b is the *only* hit of some triangulation.
struct MaskVerdict {
  bool blocker = false;
  bool saturated = false;
};

MaskVerdict mask_verdict(const std::vector<Mask128>& masks, const Mask128& subset) {
  Mask128 critical;
  for (const Mask128& t : masks) {
    Mask128 hit = t & subset;
    if (!hit.any()) return {false, false};
    if (hit.count() == 1) {
      critical.lo |= hit.lo;
      critical.hi |= hit.hi;
    }
  }
  return {true, critical == subset};
}

}  // namespace

int capacity_limit(int default_limit) {
  if (const char* raw = std::getenv("TRIBLOCK_CAPACITY")) {
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && v > default_limit) return static_cast<int>(v);
  }
  return default_limit;
}

void enumerate_triangulations(int n, const std::function<void(const EdgeSet&)>& yield) {
  if (n < 3) throw ConstraintError("polygon size must be at least 3");
  if (n > capacity_limit(kMaxTriangulationEnumerationN)) {
    throw CapacityError("triangulation enumeration guarded at n <= " + std::to_string(capacity_limit(kMaxTriangulationEnumerationN)) + ", got " + std::to_string(n));
  }

  EdgeSet current(n);
  std::vector<std::pair<int, int>> pending;
  // Every triangulation has a unique apex triangle on each base interval, so
  // the recursion below produces each one exactly once.
  auto step = [&](auto&& self) -> void {
    if (pending.empty()) {
      yield(current);
      return;
    }
    auto [i, j] = pending.back();
    pending.pop_back();
    for (int k = i + 1; k < j; ++k) {
      std::size_t mark = pending.size();
      if (k - i >= 2) {
        current.insert(make_edge(i, k));
        pending.emplace_back(i, k);
      }
      if (j - k >= 2) {
        current.insert(make_edge(k, j));
        pending.emplace_back(k, j);
      }
      self(self);
      pending.resize(mark);
      if (k - i >= 2) current.erase(make_edge(i, k));
      if (j - k >= 2) current.erase(make_edge(k, j));
    }
    pending.emplace_back(i, j);
  };
  pending.emplace_back(0, n - 1);
  step(step);
}

std::vector<EdgeSet> all_triangulations(int n) {
  std::vector<EdgeSet> out;
  enumerate_triangulations(n, [&](const EdgeSet& t) { out.push_back(t); });
  return out;
}

bool is_blocker_bruteforce(const EdgeSet& b) {
  int n = b.polygon_size();
  check_mask_capacity(n);
  Mask128 subset = to_mask(b);
  for (const Mask128& t : triangulation_masks(n)) {
    if (!(t & subset).any()) return false;
  }
  return true;
}

std::vector<EdgeSet> all_saturated_blockers(int n, std::optional<int> size_filter) {
  int guard = size_filter ? capacity_limit(kMaxFixedSizeSearchN) : capacity_limit(kMaxUnrestrictedSearchN);
  if (n > guard) {
    throw CapacityError(std::string("saturated-blocker search guarded at n <= ") + std::to_string(guard) + (size_filter ? " (fixed size)" : "") + ", got " + std::to_string(n));
  }
  if (n < 4) return n == 3 ? std::vector<EdgeSet>{EdgeSet(3)} : std::vector<EdgeSet>{};

  const std::vector<Mask128>& masks = triangulation_masks(n);
  int total_slots = EdgeSet::diagonal_count(n);

  // Last slot incident to each vertex, for the isolated-vertex prune: once
  // the cursor passes it, a still-isolated vertex can never gain an edge.
  std::vector<int> last_slot_of_vertex(static_cast<std::size_t>(n), -1);
  for (int slot = 0; slot < total_slots; ++slot) {
    Edge e = EdgeSet::edge_at(n, slot);
    last_slot_of_vertex[static_cast<std::size_t>(e.a)] = std::max(last_slot_of_vertex[static_cast<std::size_t>(e.a)], slot);
    last_slot_of_vertex[static_cast<std::size_t>(e.b)] = std::max(last_slot_of_vertex[static_cast<std::size_t>(e.b)], slot);
  }

  std::vector<EdgeSet> found;
  Mask128 subset;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  int chosen = 0;

  auto emit_candidate = [&]() {
    if (chosen < n - 2) return;  // no blocker is smaller
    if (size_filter && chosen != *size_filter) return;
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 0) return;  // isolated vertex: never a blocker
    }
    MaskVerdict verdict = mask_verdict(masks, subset);
    if (verdict.saturated) found.push_back(from_mask(n, subset));
  };

  auto walk = [&](auto&& self, int next) -> void {
    emit_candidate();
    if (next >= total_slots) return;
    if (size_filter && chosen >= *size_filter) return;
    int needed = std::max(n - 2, size_filter.value_or(n - 2));
    if (chosen + (total_slots - next) < needed) return;  // cannot reach minimum size
    for (int slot = next; slot < total_slots; ++slot) {
      // Vertices whose incidence range ends before `slot` must be covered.
      bool dead = false;
      for (int v = 0; v < n && !dead; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0 && last_slot_of_vertex[static_cast<std::size_t>(v)] < slot) dead = true;
      }
      if (dead) break;
      Edge e = EdgeSet::edge_at(n, slot);
      subset.set(slot);
      ++deg[static_cast<std::size_t>(e.a)];
      ++deg[static_cast<std::size_t>(e.b)];
      ++chosen;
      self(self, slot + 1);
      --chosen;
      --deg[static_cast<std::size_t>(e.a)];
      --deg[static_cast<std::size_t>(e.b)];
      if (slot < 64) {
        subset.lo &= ~(std::uint64_t{1} << slot);
      } else {
        subset.hi &= ~(std::uint64_t{1} << (slot - 64));
      }
    }
  };
  walk(walk, 0);
  return found;
}

std::set<int> saturation_spectrum_exhaustive(int n) {
  std::set<int> sizes;
  for (const EdgeSet& b : all_saturated_blockers(n)) sizes.insert(b.size());
  return sizes;
}

namespace {

// Rotation images are compared by their sorted (span, start) key sequences;
// the boundary-hugging image (nets first) wins, and ties cannot occur within
// one orbit since keys determine the edge set.
std::vector<std::pair<int, int>> span_keys(const EdgeSet& s) {
  std::vector<std::pair<int, int>> keys;
  for (const Edge& e : s.edges()) keys.emplace_back(e.b - e.a, e.a);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

EdgeSet canonicalize(const EdgeSet& b, SymmetryGroup group) {
  int n = b.polygon_size();
  EdgeSet best = b;
  std::vector<std::pair<int, int>> best_keys = span_keys(b);
  auto consider = [&](const EdgeSet& image) {
    std::vector<std::pair<int, int>> keys = span_keys(image);
    if (keys < best_keys || (keys == best_keys && image < best)) {
      best = image;
      best_keys = std::move(keys);
    }
  };
  for (int r = 0; r < n; ++r) {
    consider(b.rotated(r));
    if (group == SymmetryGroup::kDihedral) consider(b.reflected().rotated(r));
  }
  return best;
}

std::set<EdgeSet> canonical_orbits(const std::vector<EdgeSet>& sets, SymmetryGroup group) {
  std::set<EdgeSet> out;
  for (const EdgeSet& s : sets) out.insert(canonicalize(s, group));
  return out;
}

}  // namespace triblock
