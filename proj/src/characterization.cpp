#include "triblock/characterization.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace triblock {

namespace {

// Running rule along beams with ascending sources: a beam may never aim more
// than one vertex above the lowest target seen so far, otherwise it would
// cross an earlier beam at target distance >= 2.
bool adjacent_target_rule(const std::vector<int>& targets) {
  int lowest = std::numeric_limits<int>::max();
  for (int x : targets) {
    if (lowest != std::numeric_limits<int>::max() && x > lowest + 1) return false;
    lowest = std::min(lowest, x);
  }
  return true;
}

void check_adjacent_targets(const std::vector<int>& targets, const char* what) {
  if (!adjacent_target_rule(targets)) {
    throw ConstraintError(std::string(what) + ": crossing beams must aim at adjacent target vertices");
  }
}

// Consumes the ear-cover run (from,from+2)..(to,to+2); false if any edge is
// missing (an empty range trivially succeeds).
bool take_run(EdgeSet& rest, int from, int to) {
  for (int i = from; i <= to; ++i) {
    Edge e = make_edge(i, i + 2);
    if (!rest.contains(e)) return false;
    rest.erase(e);
  }
  return true;
}

bool take_edges(EdgeSet& rest, std::initializer_list<Edge> list) {
  for (Edge e : list) {
    if (!rest.contains(e)) return false;
    rest.erase(e);
  }
  return true;
}

// Reads the whole remainder as one beam per source in [src_lo, src_hi]
// (the larger endpoint is the source); empty when any edge falls outside the
// window, a source repeats, or a source has no beam.
std::optional<std::vector<int>> parse_beam_window(const EdgeSet& rest, int src_lo, int src_hi) {
  int count = std::max(0, src_hi - src_lo + 1);
  std::vector<int> targets(static_cast<std::size_t>(count), -1);
  for (const Edge& e : rest.edges()) {
    if (e.b < src_lo || e.b > src_hi) return std::nullopt;
    int& slot = targets[static_cast<std::size_t>(e.b - src_lo)];
    if (slot != -1) return std::nullopt;
    slot = e.a;
  }
  for (int x : targets) {
    if (x == -1) return std::nullopt;
  }
  return targets;
}

bool param_less(const Nm1Classification& x, const Nm1Classification& y) {
  return std::tie(x.rotation, x.ell, x.m, x.k, x.t, x.beams, x.beams_left, x.beams_right) < std::tie(y.rotation, y.ell, y.m, y.k, y.t, y.beams, y.beams_left, y.beams_right);
}

// The matchers below parse the standard-frame set c structurally to extract
// candidate parameters, then accept only if the builder reproduces c exactly.

void match_seagull(const EdgeSet& c, int rotation, std::vector<Nm1Classification>& out) {
  int n = c.polygon_size();
  for (int ell = 3; ell <= n - 4; ++ell) {
    EdgeSet after_motif = c;
    if (!take_edges(after_motif, {make_edge(ell - 2, ell), make_edge(ell - 2, ell + 1), make_edge(ell - 1, ell + 2), make_edge(ell, ell + 2)})) continue;
    if (!take_run(after_motif, 0, ell - 3)) continue;
    EdgeSet rest = after_motif;
    for (int m = ell + 1; m <= n - 3; ++m) {
      Edge run_edge = make_edge(m, m + 2);
      if (!rest.contains(run_edge)) break;
      rest.erase(run_edge);
      if (m < 4) continue;
      auto targets = parse_beam_window(rest, m + 3, n - 1);
      if (!targets) continue;
      try {
        if (build_seagull_blocker(n, ell, m, *targets) == c) {
          Nm1Classification hit;
          hit.variant = Nm1Variant::kSeagull;
          hit.rotation = rotation;
          hit.ell = ell;
          hit.m = m;
          hit.beams = *targets;
          out.push_back(std::move(hit));
        }
      } catch (const ConstraintError&) {
      }
    }
  }
}

void match_butterfly(const EdgeSet& c, int rotation, std::vector<Nm1Classification>& out) {
  int n = c.polygon_size();
  for (int ell = 3; ell <= n - 5; ++ell) {
    EdgeSet after_motif = c;
    if (!take_edges(after_motif, {make_edge(ell - 2, ell), make_edge(ell - 2, ell + 1), make_edge(ell - 1, ell + 2), make_edge(ell, ell + 3), make_edge(ell + 1, ell + 3)})) continue;
    if (!take_run(after_motif, 0, ell - 3)) continue;
    EdgeSet rest = after_motif;
    for (int m = ell + 2; m <= n - 3; ++m) {
      Edge run_edge = make_edge(m, m + 2);
      if (!rest.contains(run_edge)) break;
      rest.erase(run_edge);
      if (m < 5) continue;
      // A butterfly motif counts as a butterfly only when both of its end
      // vertices ell-2 and ell+3 are covered by ear covers; otherwise the
      // set is a bouquet.  The strict template already contains both
      // covering ears, so this guard documents the rule rather than adding
      // a constraint.
      if (!c.contains(make_edge(ell - 3, ell - 1)) || !c.contains(make_edge(ell + 2, ell + 4))) continue;
      auto targets = parse_beam_window(rest, m + 3, n - 1);
      if (!targets) continue;
      try {
        if (build_butterfly_blocker(n, ell, m, *targets) == c) {
          Nm1Classification hit;
          hit.variant = Nm1Variant::kButterfly;
          hit.rotation = rotation;
          hit.ell = ell;
          hit.m = m;
          hit.beams = *targets;
          out.push_back(std::move(hit));
        }
      } catch (const ConstraintError&) {
      }
    }
  }
}

void match_bouquet(const EdgeSet& c, int rotation, std::vector<Nm1Classification>& out) {
  int n = c.polygon_size();
  for (int ell = 1; ell <= n - 2; ++ell) {
    EdgeSet after_base = c;
    if (!take_edges(after_base, {make_edge(ell - 1, ell + 1)})) continue;
    if (!take_run(after_base, 0, ell - 2)) continue;
    EdgeSet rest_net = after_base;
    for (int m = ell - 1; m <= n - 6; ++m) {
      if (m >= ell) {
        Edge run_edge = make_edge(m, m + 2);
        if (!rest_net.contains(run_edge)) break;
        rest_net.erase(run_edge);
      }
      for (int k = m + 3; k <= n - 3; ++k) {
        if (!c.contains(make_edge(k, ell - 1))) continue;
        for (int t = 2; k + t <= n - 1; ++t) {
          EdgeSet rest = rest_net;
          if (!take_edges(rest, {make_edge(k, ell - 1), make_edge(k + t, ell + 1), make_edge(k, k + t)})) continue;
          bool vase_ok = true;
          for (int s = k + 1; s < k + t && vase_ok; ++s) {
            Edge beam = make_edge(s, ell);
            vase_ok = rest.contains(beam);
            if (vase_ok) rest.erase(beam);
          }
          if (!vase_ok) continue;

          std::vector<int> left(static_cast<std::size_t>(k - m - 3), -1);
          std::vector<int> right(static_cast<std::size_t>(n - 1 - k - t), -1);
          bool ok = true;
          for (const Edge& e : rest.edges()) {
            if (e.b >= m + 3 && e.b <= k - 1) {
              int& slot = left[static_cast<std::size_t>(e.b - (m + 3))];
              if (slot != -1 || e.a < ell || e.a > m + 1) {
                ok = false;
                break;
              }
              slot = e.a;
            } else if (e.b >= k + t + 1 && e.b <= n - 1) {
              int& slot = right[static_cast<std::size_t>(e.b - (k + t + 1))];
              if (slot != -1 || e.a < 1 || e.a > ell) {
                ok = false;
                break;
              }
              slot = e.a;
            } else {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          if (std::find(left.begin(), left.end(), -1) != left.end()) continue;
          if (std::find(right.begin(), right.end(), -1) != right.end()) continue;
          try {
            if (build_bouquet_blocker(n, ell, m, k, t, left, right) == c) {
              Nm1Classification hit;
              hit.variant = Nm1Variant::kBouquet;
              hit.rotation = rotation;
              hit.ell = ell;
              hit.m = m;
              hit.k = k;
              hit.t = t;
              hit.beams_left = left;
              hit.beams_right = right;
              out.push_back(std::move(hit));
            }
          } catch (const ConstraintError&) {
          }
        }
      }
    }
  }
}

}  // namespace

std::optional<MinBlockerShape> recognize_min_blocker(const EdgeSet& b) {
  int n = b.polygon_size();
  if (n < 4 || b.size() != n - 2) return std::nullopt;
  for (int r = 0; r < n; ++r) {
    EdgeSet c = b.rotated((n - r) % n);
    EdgeSet rest = c;
    Edge first_ear = make_edge(0, 2);
    if (!rest.contains(first_ear)) continue;
    rest.erase(first_ear);
    for (int m = 1; m <= n - 3; ++m) {
      Edge run_edge = make_edge(m, m + 2);
      if (!rest.contains(run_edge)) break;
      rest.erase(run_edge);
      auto targets = parse_beam_window(rest, m + 3, n - 1);
      if (!targets) continue;
      bool domain_ok = std::all_of(targets->begin(), targets->end(), [&](int x) { return 1 <= x && x <= m + 1; });
      if (!domain_ok || !adjacent_target_rule(*targets)) continue;
      return MinBlockerShape{r, m, std::move(*targets)};
    }
  }
  return std::nullopt;
}

EdgeSet build_seagull_blocker(int n, int ell, int m, const std::vector<int>& beam_targets) {
  if (ell <= 2) throw ConstraintError("seagull pivot must satisfy ell > 2, got " + std::to_string(ell));
  if (m <= ell) throw ConstraintError("seagull needs ell < m, got ell=" + std::to_string(ell) + " m=" + std::to_string(m));
  if (m < 4 || m > n - 3) throw ConstraintError("seagull net parameter m must lie in [4, n-3], got " + std::to_string(m));
  if (static_cast<int>(beam_targets.size()) != n - 3 - m) {
    throw ConstraintError("seagull expects " + std::to_string(n - 3 - m) + " beam targets, got " + std::to_string(beam_targets.size()));
  }
  for (int x : beam_targets) {
    if (x < 1 || x > m + 1) throw ConstraintError("seagull beam target " + std::to_string(x) + " out of range [1, " + std::to_string(m + 1) + "]");
    if (x == ell) throw ConstraintError("seagull beam target may not equal the pivot " + std::to_string(ell));
  }
  check_adjacent_targets(beam_targets, "seagull");

  EdgeSet out(n);
  out.insert(make_edge(ell - 2, ell));
  out.insert(make_edge(ell - 2, ell + 1));
  out.insert(make_edge(ell - 1, ell + 2));
  out.insert(make_edge(ell, ell + 2));
  for (int i = 0; i <= ell - 3; ++i) out.insert(make_edge(i, i + 2));
  for (int i = ell + 1; i <= m; ++i) out.insert(make_edge(i, i + 2));
  for (int j = 0; j < static_cast<int>(beam_targets.size()); ++j) {
    out.insert(make_edge(m + 3 + j, beam_targets[static_cast<std::size_t>(j)]));
  }
  if (out.size() != n - 1) throw std::logic_error("seagull template produced a collision");
  return out;
}

EdgeSet build_butterfly_blocker(int n, int ell, int m, const std::vector<int>& beam_targets) {
  if (ell <= 2) throw ConstraintError("butterfly pivot must satisfy ell > 2, got " + std::to_string(ell));
  if (m <= ell + 1) throw ConstraintError("butterfly needs ell < m-1, got ell=" + std::to_string(ell) + " m=" + std::to_string(m));
  if (m < 5 || m > n - 3) throw ConstraintError("butterfly net parameter m must lie in [5, n-3], got " + std::to_string(m));
  if (static_cast<int>(beam_targets.size()) != n - 3 - m) {
    throw ConstraintError("butterfly expects " + std::to_string(n - 3 - m) + " beam targets, got " + std::to_string(beam_targets.size()));
  }
  for (int x : beam_targets) {
    if (x < 1 || x > m + 1) throw ConstraintError("butterfly beam target " + std::to_string(x) + " out of range [1, " + std::to_string(m + 1) + "]");
    if (x == ell || x == ell + 1) throw ConstraintError("butterfly beam target may not hit the pivot pair " + std::to_string(ell) + ", " + std::to_string(ell + 1));
  }
  check_adjacent_targets(beam_targets, "butterfly");

  EdgeSet out(n);
  out.insert(make_edge(ell - 2, ell));
  out.insert(make_edge(ell - 2, ell + 1));
  out.insert(make_edge(ell - 1, ell + 2));
  out.insert(make_edge(ell, ell + 3));
  out.insert(make_edge(ell + 1, ell + 3));
  for (int i = 0; i <= ell - 3; ++i) out.insert(make_edge(i, i + 2));
  for (int i = ell + 2; i <= m; ++i) out.insert(make_edge(i, i + 2));
  for (int j = 0; j < static_cast<int>(beam_targets.size()); ++j) {
    out.insert(make_edge(m + 3 + j, beam_targets[static_cast<std::size_t>(j)]));
  }
  if (out.size() != n - 1) throw std::logic_error("butterfly template produced a collision");
  return out;
}

EdgeSet build_bouquet_blocker(int n, int ell, int m, int k, int t, const std::vector<int>& beams_left, const std::vector<int>& beams_right) {
  if (ell < 1) throw ConstraintError("bouquet pivot must satisfy ell > 0, got " + std::to_string(ell));
  if (m < ell - 1) throw ConstraintError("bouquet needs ell < m+2, got ell=" + std::to_string(ell) + " m=" + std::to_string(m));
  if (k < m + 3) throw ConstraintError("bouquet anchor must satisfy k > m+2, got k=" + std::to_string(k) + " m=" + std::to_string(m));
  if (t < 2) throw ConstraintError("bouquet width must satisfy t >= 2, got " + std::to_string(t));
  if (k + t > n - 1) throw ConstraintError("bouquet must satisfy k+t <= n-1, got k+t=" + std::to_string(k + t));
  if (static_cast<int>(beams_left.size()) != k - m - 3) {
    throw ConstraintError("bouquet expects " + std::to_string(k - m - 3) + " left beam targets, got " + std::to_string(beams_left.size()));
  }
  if (static_cast<int>(beams_right.size()) != n - 1 - k - t) {
    throw ConstraintError("bouquet expects " + std::to_string(n - 1 - k - t) + " right beam targets, got " + std::to_string(beams_right.size()));
  }
  for (int x : beams_left) {
    if (x < ell || x > m + 1) throw ConstraintError("bouquet left beam target " + std::to_string(x) + " out of range [" + std::to_string(ell) + ", " + std::to_string(m + 1) + "]");
  }
  for (int x : beams_right) {
    if (x < 1 || x > ell) throw ConstraintError("bouquet right beam target " + std::to_string(x) + " out of range [1, " + std::to_string(ell) + "]");
  }
  check_adjacent_targets(beams_left, "bouquet left beams");
  check_adjacent_targets(beams_right, "bouquet right beams");

  EdgeSet out(n);
  out.insert(make_edge(ell - 1, ell + 1));
  out.insert(make_edge(k, ell - 1));
  out.insert(make_edge(k + t, ell + 1));
  out.insert(make_edge(k, k + t));
  for (int s = k + 1; s < k + t; ++s) out.insert(make_edge(s, ell));
  for (int i = ell; i <= m; ++i) out.insert(make_edge(i, i + 2));
  for (int i = 0; i <= ell - 2; ++i) out.insert(make_edge(i, i + 2));
  for (int j = 0; j < static_cast<int>(beams_left.size()); ++j) {
    out.insert(make_edge(m + 3 + j, beams_left[static_cast<std::size_t>(j)]));
  }
  for (int j = 0; j < static_cast<int>(beams_right.size()); ++j) {
    out.insert(make_edge(k + t + 1 + j, beams_right[static_cast<std::size_t>(j)]));
  }
  if (out.size() != n - 1) throw std::logic_error("bouquet template produced a collision");
  return out;
}

EdgeSet build_nm1_blocker(int n, const Nm1Classification& c) {
  switch (c.variant) {
    case Nm1Variant::kSeagull:
      return build_seagull_blocker(n, c.ell, c.m, c.beams).rotated(c.rotation);
    case Nm1Variant::kButterfly:
      return build_butterfly_blocker(n, c.ell, c.m, c.beams).rotated(c.rotation);
    case Nm1Variant::kBouquet:
      return build_bouquet_blocker(n, c.ell, c.m, c.k, c.t, c.beams_left, c.beams_right).rotated(c.rotation);
  }
  throw std::logic_error("unknown classification variant");
}

Nm1Classification classify_nm1(const EdgeSet& b) {
  int n = b.polygon_size();
  if (n <= 5) throw ConstraintError("size-(n-1) classification needs n > 5, got n=" + std::to_string(n));
  if (b.size() != n - 1) {
    throw ConstraintError("classification expects exactly n-1 = " + std::to_string(n - 1) + " edges, got " + std::to_string(b.size()));
  }

  std::vector<Nm1Classification> seagulls, butterflies, bouquets;
  for (int r = 0; r < n; ++r) {
    EdgeSet c = b.rotated((n - r) % n);
    match_seagull(c, r, seagulls);
    match_butterfly(c, r, butterflies);
    match_bouquet(c, r, bouquets);
  }

  auto best = [](std::vector<Nm1Classification>& v) { return *std::min_element(v.begin(), v.end(), param_less); };
  if (!seagulls.empty()) return best(seagulls);
  if (!butterflies.empty()) return best(butterflies);
  if (!bouquets.empty()) return best(bouquets);
  throw ConstraintError("edge set matches no seagull/butterfly/bouquet template in any rotation: not a saturated blocker of size n-1");
}

std::pair<EdgeSet, int> stability_distance(const EdgeSet& b) {
  Nm1Classification c = classify_nm1(b);
  int n = b.polygon_size();
  EdgeSet frame = b.rotated((n - c.rotation) % n);
  switch (c.variant) {
    case Nm1Variant::kSeagull:
      frame.erase(make_edge(c.ell - 1, c.ell + 2));
      frame.erase(make_edge(c.ell - 2, c.ell + 1));
      frame.insert(make_edge(c.ell - 1, c.ell + 1));
      break;
    case Nm1Variant::kButterfly:
      frame.erase(make_edge(c.ell, c.ell + 3));
      frame.erase(make_edge(c.ell - 1, c.ell + 2));
      frame.erase(make_edge(c.ell - 2, c.ell + 1));
      frame.insert(make_edge(c.ell, c.ell + 2));
      frame.insert(make_edge(c.ell - 1, c.ell + 1));
      break;
    case Nm1Variant::kBouquet:
      frame.erase(make_edge(c.k, c.ell - 1));
      frame.erase(make_edge(c.k, c.k + c.t));
      frame.insert(make_edge(c.k, c.ell));
      break;
  }
  EdgeSet smaller = frame.rotated(c.rotation);
  int distance = (b - smaller).size() + (smaller - b).size();
  return {std::move(smaller), distance};
}

EdgeSet extend_by_vertex(const EdgeSet& b, int gap, Edge e1, Edge e2) {
  int n = b.polygon_size();
  if (n < 3) throw ConstraintError("cannot insert a vertex into a polygon with fewer than 3 vertices");
  if (gap < 0 || gap >= n) throw ConstraintError("gap index must name a boundary gap in [0, n-1], got " + std::to_string(gap));

  int v = gap + 1;
  EdgeSet out(n + 1);
  for (const Edge& e : b.edges()) {
    out.insert(make_edge(e.a > gap ? e.a + 1 : e.a, e.b > gap ? e.b + 1 : e.b));
  }
  for (Edge e : {e1, e2}) {
    Edge ce = make_edge(e.a, e.b);
    if (ce.a != v && ce.b != v) {
      throw ConstraintError("edge (" + std::to_string(ce.a) + ", " + std::to_string(ce.b) + ") is not incident to the inserted vertex " + std::to_string(v));
    }
    out.insert(ce);
  }
  return out;
}

}  // namespace triblock
