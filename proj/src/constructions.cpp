#include "triblock/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "triblock/core.hpp"
#include "triblock/enumeration.hpp"

namespace triblock {

namespace {

// Inclusive integer ends of the dispatcher bands; all three quadratics are
// positive over their admissible n, so plain integer division floors them.
int quad_band_end(int n) { return (n * n + 2 * n - 11) / 8; }
int bridge_band_end(int n) { return (n * n + 4 * n - 16) / 8; }
int balanced_band_end(int n) { return (5 * n * n - 48 * n + 205) / 16; }

struct SizeInterval {
  int lo = 0;
  int hi = 0;
};

// Sizes realizable with top block of size k: left block absorbs the slack
// one edge at a time.
SizeInterval quad_interval(int n, int k) {
  return {k * n - k + 1 - 2 * k * k, k * n + n - 3 * k - 2 - 2 * k * k};
}

// Shell blocks of the bridge family: a thin left block and a minimum-sized
// bottom sub-blocker leave all slack to the top sub-blocker.
struct BridgeShape {
  QuadPartition part;
  int fixed = 0;  // edges outside the variable top sub-blocker
  SizeInterval range;
};

BridgeShape bridge_shape(int n) {
  int q = n / 4;
  int vb = q - 2, vl = 3, vr = q;
  int vt = n - vb - vl - vr;
  BridgeShape s;
  s.part = QuadPartition{n, vr, vr + vb, vr + vb + vl};
  int sub_bottom = vb + 2;
  s.fixed = vt * vb + vl * vr + (sub_bottom - 2) - 2;
  int sub_top = vt + 2;
  s.range = {s.fixed + (sub_top - 2), s.fixed + quadrilateral_family_max(sub_top)};
  return s;
}

struct BalancedShape {
  QuadPartition part;
  int fixed = 0;
  SizeInterval range;
  bool valid = false;
};

BalancedShape balanced_shape(int n, int k) {
  int vt = n / 4 + k;
  int side = (n + 3) / 4 - k;
  int vb = n - vt - 2 * side;
  BalancedShape s;
  if (side < 3 || vt < 3 || vb < 3) return s;
  s.valid = true;
  s.part = QuadPartition{n, side, side + vb, side + vb + side};
  s.fixed = vt * vb + side * side - 2;
  s.range = {s.fixed + vt + vb, s.fixed + quadrilateral_family_max(vt + 2) + quadrilateral_family_max(vb + 2)};
  return s;
}

struct NestedShape {
  QuadPartition part;
  int fixed = 0;
  int sub_top = 0;
  int sub_bottom = 0;
};

NestedShape nested_shape(int n) {
  int vt = (n % 2 == 0) ? n / 2 - 3 : (n - 1) / 2 - 3;
  int vb = n - vt - 6;
  NestedShape s;
  s.part = QuadPartition{n, 3, 3 + vb, n - vt};
  s.fixed = vt * vb + 7;
  s.sub_top = vt + 2;
  s.sub_bottom = vb + 2;
  return s;
}

// Distributes `total` between two sub-blocker sizes: both start at their
// minimum, then grow alternately (first side first) until the total is met,
// skipping a side once it is full.
std::pair<int, int> split_alternating(int total, SizeInterval first, SizeInterval second) {
  int t1 = first.lo, t2 = second.lo;
  int rem = total - t1 - t2;
  if (rem < 0 || rem > (first.hi - first.lo) + (second.hi - second.lo)) {
    throw ConstraintError("sub-blocker size total " + std::to_string(total) + " is not splittable");
  }
  bool first_turn = true;
  while (rem > 0) {
    if (first_turn ? t1 < first.hi : t2 < second.hi) {
      (first_turn ? t1 : t2) += 1;
    } else {
      (first_turn ? t2 : t1) += 1;
    }
    --rem;
    first_turn = !first_turn;
  }
  return {t1, t2};
}

[[noreturn]] void throw_size_range(const char* family, int n, int t, SizeInterval range) {
  throw ConstraintError(std::string(family) + " family cannot realize size " + std::to_string(t) + " on a " + std::to_string(n) + "-gon (realizable range [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) + "])");
}

}  // namespace

void QuadPartition::validate() const {
  if (n < 4) throw ConstraintError("quadrilateral partition needs at least 4 vertices");
  if (!(0 < a && a < b && b < c && c < n)) {
    throw ConstraintError("quadrilateral partition cuts must satisfy 0 < a < b < c < n, got a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c) + " n=" + std::to_string(n));
  }
}

EdgeSet build_quadrilateral(const QuadPartition& p) {
  p.validate();
  EdgeSet out(p.n);
  for (int i = 0; i < p.a; ++i) {
    for (int j = p.b; j < p.c; ++j) out.insert(make_edge(i, j));
  }
  for (int i = p.a; i < p.b; ++i) {
    for (int j = p.c; j < p.n; ++j) out.insert(make_edge(i, j));
  }
  return out;
}

EdgeSet build_matrioshka(const QuadPartition& p, const EdgeSet& bt, const EdgeSet& bb) {
  p.validate();
  if (p.left_size() < 3 || p.right_size() < 3) throw ConstraintError("matrioshka needs left and right blocks of size >= 3");
  if (p.top_size() < 2 || p.bottom_size() < 2) throw ConstraintError("matrioshka needs top and bottom blocks of size >= 2");

  int top_polygon = p.top_size() + 2;
  int bottom_polygon = p.bottom_size() + 2;
  if (bt.polygon_size() != top_polygon) {
    throw ConstraintError("top sub-blocker lives on a " + std::to_string(bt.polygon_size()) + "-gon, expected " + std::to_string(top_polygon));
  }
  if (bb.polygon_size() != bottom_polygon) {
    throw ConstraintError("bottom sub-blocker lives on a " + std::to_string(bb.polygon_size()) + "-gon, expected " + std::to_string(bottom_polygon));
  }
  if (!is_saturated_blocker(bt)) throw ConstraintError("top sub-blocker is not a saturated blocker of its polygon");
  if (!is_saturated_blocker(bb)) throw ConstraintError("bottom sub-blocker is not a saturated blocker of its polygon");

  EdgeSet out = build_quadrilateral(p);
  int expected = out.size() - 2 + bt.size() + bb.size();
  out.erase(make_edge(0, p.c - 1));
  out.erase(make_edge(p.a - 1, p.b));

  // Top polygon vertices counterclockwise from the shared vertex 0:
  // 0, c-1, c, c+1, ..., n-1.
  auto top_global = [&](int s) { return s == 0 ? 0 : (s == 1 ? p.c - 1 : p.c + s - 2); };
  for (const Edge& e : bt.edges()) out.insert(make_edge(top_global(e.a), top_global(e.b)));

  // Bottom polygon vertices counterclockwise from the shared vertex a-1:
  // a-1, a, ..., b.
  auto bottom_global = [&](int s) { return p.a - 1 + s; };
  for (const Edge& e : bb.edges()) out.insert(make_edge(bottom_global(e.a), bottom_global(e.b)));

  if (out.size() != expected) throw std::logic_error("matrioshka embedding collided with shell edges");
  return out;
}

EdgeSet build_min_blocker(int n, int m, const std::vector<int>& beam_targets) {
  if (n < 4) throw ConstraintError("minimum blockers need at least 4 vertices");
  if (m < 1 || m > n - 3) throw ConstraintError("net length m must lie in [1, n-3], got " + std::to_string(m));
  int beam_count = n - 3 - m;
  if (static_cast<int>(beam_targets.size()) != beam_count) {
    throw ConstraintError("expected " + std::to_string(beam_count) + " beam targets, got " + std::to_string(beam_targets.size()));
  }

  EdgeSet out(n);
  for (int i = 0; i <= m; ++i) out.insert(make_edge(i, i + 2));
  int lowest = m + 1;
  for (int j = 0; j < beam_count; ++j) {
    int target = beam_targets[static_cast<std::size_t>(j)];
    if (target < 1 || target > m + 1) {
      throw ConstraintError("beam target " + std::to_string(target) + " out of range [1, " + std::to_string(m + 1) + "]");
    }
    if (target > lowest + 1) {
      throw ConstraintError("conflicting beams: target " + std::to_string(target) + " follows a beam to " + std::to_string(lowest) + " (crossing beams must aim at adjacent path vertices)");
    }
    lowest = std::min(lowest, target);
    out.insert(make_edge(m + 3 + j, target));
  }
  return out;
}

std::vector<EdgeSet> enumerate_min_blockers(int n) {
  int guard = capacity_limit(kMaxMinimumEnumerationN);
  if (n > guard) throw CapacityError("minimum-blocker enumeration guarded at n <= " + std::to_string(guard) + ", got " + std::to_string(n));
  if (n < 4) throw ConstraintError("minimum blockers need at least 4 vertices");

  std::set<EdgeSet> dedup;
  std::vector<int> targets;
  for (int m = 1; m <= n - 3; ++m) {
    int beam_count = n - 3 - m;
    auto rec = [&](auto&& self, int j, int lowest) -> void {
      if (j == beam_count) {
        EdgeSet shape = build_min_blocker(n, m, targets);
        for (int r = 0; r < n; ++r) dedup.insert(shape.rotated(r));
        return;
      }
      int cap = std::min(m + 1, lowest + 1);
      for (int target = 1; target <= cap; ++target) {
        targets.push_back(target);
        self(self, j + 1, std::min(lowest, target));
        targets.pop_back();
      }
    };
    targets.clear();
    rec(rec, 0, m + 1);
  }
  return {dedup.begin(), dedup.end()};
}

int quadrilateral_family_max(int n) {
  if (n < 5) throw ConstraintError("quadrilateral family needs at least 5 vertices");
  int best = 0;
  for (int k = 1; 2 * k + 3 <= n; ++k) best = std::max(best, quad_interval(n, k).hi);
  return best;
}

EdgeSet realize_quadrilateral(int n, int t) {
  if (n < 5) throw ConstraintError("quadrilateral family needs at least 5 vertices");
  SizeInterval range{n - 2, quadrilateral_family_max(n)};
  if (t < range.lo || t > range.hi) throw_size_range("quadrilateral", n, t, range);
  for (int k = 1; 2 * k + 3 <= n; ++k) {
    SizeInterval iv = quad_interval(n, k);
    if (t < iv.lo || t > iv.hi) continue;
    int left = t - k * (n - 2 * k - 1);
    int bottom = n - 2 * k - 1 - left;
    QuadPartition p{n, k + 1, k + 1 + bottom, k + 1 + bottom + left};
    return build_quadrilateral(p);
  }
  throw std::logic_error("quadrilateral size intervals left a hole");  // ranges overlap pairwise
}

EdgeSet realize_matrioshka_bridge(int n, int t) {
  if (n < 21) throw ConstraintError("bridge family needs at least 21 vertices");
  BridgeShape s = bridge_shape(n);
  if (t < s.range.lo || t > s.range.hi) throw_size_range("bridge", n, t, s.range);
  EdgeSet bt = realize_quadrilateral(s.part.top_size() + 2, t - s.fixed);
  EdgeSet bb = build_min_blocker(s.part.bottom_size() + 2, s.part.bottom_size() - 1, {});
  return build_matrioshka(s.part, bt, bb);
}

EdgeSet realize_matrioshka_balanced(int n, int t) {
  if (n < 25) throw ConstraintError("balanced family needs at least 25 vertices");
  SizeInterval whole{0, 0};
  for (int k = 0;; ++k) {
    BalancedShape s = balanced_shape(n, k);
    if (!s.valid) break;
    if (k == 0) whole = s.range;
    whole.hi = std::max(whole.hi, s.range.hi);
    if (s.range.lo > t) break;
    if (t > s.range.hi) continue;
    int top_polygon = s.part.top_size() + 2;
    int bottom_polygon = s.part.bottom_size() + 2;
    auto [tt, tb] = split_alternating(t - s.fixed, SizeInterval{top_polygon - 2, quadrilateral_family_max(top_polygon)}, SizeInterval{bottom_polygon - 2, quadrilateral_family_max(bottom_polygon)});
    return build_matrioshka(s.part, realize_quadrilateral(top_polygon, tt), realize_quadrilateral(bottom_polygon, tb));
  }
  throw_size_range("balanced", n, t, whole);
}

EdgeSet realize_matrioshka_nested(int n, int t) {
  NestedShape s = nested_shape(n);
  if (s.sub_top < 5 || s.sub_bottom < 5) throw ConstraintError("nested family needs sub-polygons of at least 5 vertices");
  SizeInterval top{s.sub_top - 2, max_reachable(s.sub_top)};
  SizeInterval bottom{s.sub_bottom - 2, max_reachable(s.sub_bottom)};
  SizeInterval range{s.fixed + top.lo + bottom.lo, s.fixed + top.hi + bottom.hi};
  if (t < range.lo || t > range.hi) throw_size_range("nested", n, t, range);
  auto [tt, tb] = split_alternating(t - s.fixed, top, bottom);
  return build_matrioshka(s.part, build_spectrum_blocker(s.sub_top, tt), build_spectrum_blocker(s.sub_bottom, tb));
}

int SpectrumBands::last_end() const {
  if (nested_enabled) return nested_end;
  if (balanced_enabled) return balanced_end;
  if (bridge_enabled) return bridge_end;
  return quad_end;
}

SpectrumBands spectrum_bands(int n) {
  if (n < 5) throw ConstraintError("size spectrum is defined for n >= 5");
  SpectrumBands bands;
  bands.quad_end = std::min(quad_band_end(n), quadrilateral_family_max(n));
  int end = bands.quad_end;

  if (n >= 21) {
    BridgeShape s = bridge_shape(n);
    if (s.range.lo <= end + 1 && s.range.hi > end) {
      bands.bridge_enabled = true;
      bands.bridge_end = std::min(bridge_band_end(n), s.range.hi);
      end = std::max(end, bands.bridge_end);
    }
  }

  if (n >= 25) {
    int reach = end;
    for (int k = 0;; ++k) {
      BalancedShape s = balanced_shape(n, k);
      if (!s.valid || s.range.lo > reach + 1) break;
      reach = std::max(reach, s.range.hi);
    }
    int capped = std::min(balanced_band_end(n), reach);
    if (capped > end) {
      bands.balanced_enabled = true;
      bands.balanced_end = capped;
      end = capped;
    }
  }

  NestedShape s = nested_shape(n);
  if (s.sub_top >= 5 && s.sub_bottom >= 5) {
    int lo = s.fixed + (s.sub_top - 2) + (s.sub_bottom - 2);
    int hi = s.fixed + max_reachable(s.sub_top) + max_reachable(s.sub_bottom);
    if (lo <= end + 1 && hi > end) {
      bands.nested_enabled = true;
      bands.nested_end = hi;
    }
  }
  return bands;
}

int max_reachable(int n) {
  if (n < 5) throw ConstraintError("max_reachable is defined for n >= 5");
  static std::map<int, int> memo;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  int result = spectrum_bands(n).last_end();
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(n, result);
  return result;
}

EdgeSet build_spectrum_blocker(int n, int t) {
  if (n < 5) throw ConstraintError("spectrum construction is defined for n >= 5");
  int reach = max_reachable(n);
  if (t < n - 2 || t > reach) {
    throw ConstraintError("no saturated blocker of size " + std::to_string(t) + " is constructible on a " + std::to_string(n) + "-gon: realizable sizes are [" + std::to_string(n - 2) + ", " + std::to_string(reach) + "]");
  }
  SpectrumBands bands = spectrum_bands(n);
  EdgeSet result = [&] {
    if (t <= bands.quad_end) return realize_quadrilateral(n, t);
    if (bands.bridge_enabled && t <= bands.bridge_end) return realize_matrioshka_bridge(n, t);
    if (bands.balanced_enabled && t <= bands.balanced_end) return realize_matrioshka_balanced(n, t);
    return realize_matrioshka_nested(n, t);
  }();
  assert(result.size() == t);
  return result;
}

RecursionCoefficients recursion_coefficients(int i) {
  if (i < 0) throw ConstraintError("coefficient index must be non-negative");
  RecursionCoefficients rc{0, Rational(13, 32), Rational(-53, 8), Rational(193, 4)};
  for (int step = 1; step <= i; ++step) {
    Rational a = Rational(1, 4) + rc.a / 2;
    Rational b = -2 * rc.a + rc.b - 3;
    Rational c = 2 * rc.a - 2 * rc.b + 2 * rc.c + 16;
    rc = RecursionCoefficients{step, std::move(a), std::move(b), std::move(c)};
  }
  return rc;
}

namespace {

boost::multiprecision::cpp_int pow2(int e) { return boost::multiprecision::cpp_int(1) << e; }

}  // namespace

Rational nested_growth_a_closed(int i) { return Rational(1, 2) - Rational(3, pow2(i + 5)); }

Rational nested_growth_b_closed(int i) { return Rational(-4 * i) - Rational(3, pow2(i + 3)) - Rational(25, 4); }

Rational nested_growth_c_closed(int i) {
  return Rational(689 * pow2(i), 8) - Rational(8 * i) - Rational(75, 2) - Rational(3, pow2(i + 3));
}

}  // namespace triblock
