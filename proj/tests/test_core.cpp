#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "triblock/core.hpp"

using namespace triblock;

namespace {

EdgeSet from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  EdgeSet out(n);
  for (auto [a, b] : pairs) out.insert(make_edge(a, b));
  return out;
}

EdgeSet random_subset(int n, std::mt19937_64& rng) {
  int total = EdgeSet::diagonal_count(n);
  std::uniform_int_distribution<int> coin(0, 3);
  EdgeSet out(n);
  for (int slot = 0; slot < total; ++slot) {
    if (coin(rng) == 0) out.set_slot(slot);  // density 1/4 keeps verdicts mixed
  }
  return out;
}

// Saturation straight from the definition: removing any one edge must break
// the blocking property.  The production check avoids the per-edge rerun;
// this is its ground truth.
bool is_saturated_naive(const EdgeSet& b) {
  if (!is_blocker(b)) return false;
  for (const Edge& e : b.edges()) {
    EdgeSet smaller = b;
    smaller.erase(e);
    if (is_blocker(smaller)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_triangulation accepts fans and rejects the rest") {
  CHECK(is_triangulation(from_pairs(6, {{0, 2}, {0, 3}, {0, 4}})));
  CHECK(is_triangulation(from_pairs(6, {{1, 5}, {2, 5}, {2, 4}})));
  CHECK_FALSE(is_triangulation(from_pairs(6, {{0, 2}, {0, 3}})));          // too few
  CHECK_FALSE(is_triangulation(from_pairs(6, {{0, 2}, {1, 3}, {0, 3}})));  // crossing
  CHECK(is_triangulation(from_pairs(4, {{0, 2}})));
  CHECK(is_triangulation(EdgeSet(3)));  // the empty triangulation
}

TEST_CASE("contains_triangulation on canonical allowed sets") {
  CHECK(contains_triangulation(EdgeSet::all_diagonals(6)));
  CHECK(contains_triangulation(from_pairs(6, {{0, 2}, {0, 3}, {0, 4}})));
  CHECK_FALSE(contains_triangulation(EdgeSet(5)));
  CHECK_FALSE(contains_triangulation(from_pairs(6, {{0, 2}, {0, 4}})));  // gap at 2..4
  CHECK(contains_triangulation(EdgeSet(3)));  // triangle needs no diagonals
}

TEST_CASE("witness is deterministic, valid, and drawn from the allowed set") {
  CHECK(witness_triangulation(EdgeSet::all_diagonals(6)) == from_pairs(6, {{1, 5}, {2, 5}, {3, 5}}));

  std::mt19937_64 rng(20240811);
  for (int n = 5; n <= 9; ++n) {
    for (int trial = 0; trial < 400; ++trial) {
      EdgeSet allowed = random_subset(n, rng);
      auto w = witness_triangulation(allowed);
      CHECK(w.has_value() == contains_triangulation(allowed));
      if (w) {
        CHECK(is_triangulation(*w));
        CHECK((*w - allowed).empty());
        CHECK(witness_triangulation(allowed) == w);  // repeatable
      }
    }
  }
}

TEST_CASE("blocking verdicts on the smallest polygons") {
  CHECK(is_blocker(from_pairs(4, {{0, 2}, {1, 3}})));
  CHECK_FALSE(is_blocker(from_pairs(4, {{0, 2}})));
  CHECK(is_blocker(from_pairs(5, {{0, 2}, {1, 3}, {2, 4}})));
  CHECK_FALSE(is_blocker(from_pairs(5, {{0, 2}, {1, 3}})));
  CHECK(is_blocker(from_pairs(6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}})));
  CHECK(is_blocker(from_pairs(6, {{0, 2}, {1, 3}, {2, 4}, {3, 5}})));
  CHECK_FALSE(is_blocker(from_pairs(6, {{0, 2}, {1, 3}, {2, 4}})));
}

TEST_CASE("adding edges never destroys blocking") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 500; ++trial) {
    EdgeSet b = random_subset(7, rng);
    if (!is_blocker(b)) continue;
    EdgeSet bigger = b | random_subset(7, rng);
    CHECK(is_blocker(bigger));
  }
}

TEST_CASE("saturation verdicts on known shapes") {
  CHECK(is_saturated_blocker(from_pairs(4, {{0, 2}, {1, 3}})));
  CHECK_FALSE(is_saturated_blocker(from_pairs(4, {{0, 2}})));
  CHECK(is_saturated_blocker(from_pairs(5, {{0, 2}, {1, 3}, {2, 4}})));
  CHECK_FALSE(is_saturated_blocker(EdgeSet::all_diagonals(5)));  // blocker, not minimal
  CHECK(is_saturated_blocker(from_pairs(6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}})));
  CHECK(is_saturated_blocker(from_pairs(6, {{0, 2}, {1, 3}, {2, 4}, {3, 5}})));
  CHECK_FALSE(is_saturated_blocker(from_pairs(6, {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {0, 3}})));
}

TEST_CASE("triangle convention: the empty set blocks and is saturated") {
  CHECK(is_blocker(EdgeSet(3)));
  CHECK(is_saturated_blocker(EdgeSet(3)));
}

TEST_CASE("interval-split saturation check matches the remove-one-edge definition") {
  // Exhaustive at n=6: every subset of the nine diagonals.
  for (int mask = 0; mask < (1 << 9); ++mask) {
    EdgeSet b(6);
    for (int slot = 0; slot < 9; ++slot) {
      if (mask & (1 << slot)) b.set_slot(slot);
    }
    CHECK(is_saturated_blocker(b) == is_saturated_naive(b));
  }
  // Sampled at n=7 and n=8.
  std::mt19937_64 rng(5150);
  for (int n = 7; n <= 8; ++n) {
    for (int trial = 0; trial < 2000; ++trial) {
      EdgeSet b = random_subset(n, rng);
      CHECK(is_saturated_blocker(b) == is_saturated_naive(b));
    }
  }
}

TEST_CASE("vertex deletion drops the star and the covering ear") {
  EdgeSet b6 = from_pairs(6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}});
  CHECK(vertex_deletion(b6, 2) == from_pairs(5, {{0, 2}, {0, 3}, {1, 3}}));

  EdgeSet net5 = from_pairs(5, {{0, 2}, {1, 3}, {2, 4}});
  CHECK(vertex_deletion(net5, 0) == from_pairs(4, {{0, 2}, {1, 3}}));

  CHECK_THROWS_AS(vertex_deletion(b6, 6), ConstraintError);
  CHECK_THROWS_AS(vertex_deletion(EdgeSet(3), 0), ConstraintError);
}
