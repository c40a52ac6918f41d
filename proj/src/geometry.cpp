#include "triblock/geometry.hpp"

#include <algorithm>
#include <bit>

namespace triblock {

namespace {

void check_polygon_size(int n) {
  if (n < 3) throw ConstraintError("polygon size must be at least 3, got " + std::to_string(n));
}

}  // namespace

Edge make_edge(int u, int v) {
  if (u < 0 || v < 0) throw ConstraintError("edge endpoints must be non-negative");
  if (u == v) throw ConstraintError("edge endpoints must be distinct, got (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return Edge{std::min(u, v), std::max(u, v)};
}

int edge_order(Edge e, int n) {
  check_polygon_size(n);
  if (e.b >= n) throw ConstraintError("edge endpoint " + std::to_string(e.b) + " out of range for polygon size " + std::to_string(n));
  int span = e.b - e.a;
  return std::min(span, n - span);
}

bool is_boundary_edge(Edge e, int n) { return edge_order(e, n) == 1; }

bool is_diagonal(Edge e, int n) { return edge_order(e, n) >= 2; }

bool crosses(Edge e, Edge f) {
  // Canonical storage gives e.a < e.b and f.a < f.b; interleaving means one
  // endpoint of f lies strictly inside the arc (e.a, e.b) and the other
  // strictly outside.
  auto inside = [&](int v) { return e.a < v && v < e.b; };
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  return inside(f.a) != inside(f.b);
}

EdgeSet::EdgeSet(int n) : n_(n) {
  check_polygon_size(n);
  words_.assign(static_cast<std::size_t>((diagonal_count(n) + 63) / 64), 0);
}

int EdgeSet::diagonal_count(int n) {
  check_polygon_size(n);
  return n * (n - 3) / 2;
}

int EdgeSet::slot_of(int n, Edge e) {
  if (!is_diagonal(e, n)) {
    throw ConstraintError("(" + std::to_string(e.a) + "," + std::to_string(e.b) + ") is not a diagonal of a " + std::to_string(n) + "-gon");
  }
  // Row a = 0 holds b in [2, n-2]; row a >= 1 holds b in [a+2, n-1].
  if (e.a == 0) return e.b - 2;
  int offset = (n - 3) + (e.a - 1) * (n - 2) - (e.a - 1) * e.a / 2;
  return offset + (e.b - e.a - 2);
}

Edge EdgeSet::edge_at(int n, int slot) {
  if (slot < 0 || slot >= diagonal_count(n)) throw ConstraintError("diagonal slot out of range");
  if (slot < n - 3) return Edge{0, slot + 2};
  int rest = slot - (n - 3);
  for (int a = 1; a < n - 2; ++a) {
    int row = n - a - 2;
    if (rest < row) return Edge{a, a + 2 + rest};
    rest -= row;
  }
  throw ConstraintError("diagonal slot out of range");
}

int EdgeSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool EdgeSet::test_slot(int slot) const {
  return (words_[static_cast<std::size_t>(slot) / 64] >> (slot % 64)) & 1u;
}

void EdgeSet::set_slot(int slot) {
  words_[static_cast<std::size_t>(slot) / 64] |= std::uint64_t{1} << (slot % 64);
}

bool EdgeSet::contains(Edge e) const {
  if (!is_diagonal(e, n_)) return false;
  return test_slot(slot_of(n_, e));
}

void EdgeSet::insert(Edge e) { set_slot(slot_of(n_, e)); }

void EdgeSet::erase(Edge e) {
  int slot = slot_of(n_, e);
  words_[static_cast<std::size_t>(slot) / 64] &= ~(std::uint64_t{1} << (slot % 64));
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  int total = diagonal_count(n_);
  for (int slot = 0; slot < total; ++slot) {
    if (test_slot(slot)) out.push_back(edge_at(n_, slot));
  }
  return out;
}

void EdgeSet::check_same_polygon(const EdgeSet& rhs) const {
  if (n_ != rhs.n_) throw ConstraintError("edge sets belong to different polygon sizes");
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& rhs) {
  check_same_polygon(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& rhs) {
  check_same_polygon(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& rhs) {
  check_same_polygon(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
  return *this;
}

bool EdgeSet::operator<(const EdgeSet& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  return words_ < rhs.words_;
}

EdgeSet EdgeSet::all_diagonals(int n) {
  EdgeSet s(n);
  int total = diagonal_count(n);
  for (int slot = 0; slot < total; ++slot) s.set_slot(slot);
  return s;
}

EdgeSet EdgeSet::rotated(int r) const {
  EdgeSet out(n_);
  r = ((r % n_) + n_) % n_;
  for (const Edge& e : edges()) {
    out.insert(make_edge((e.a + r) % n_, (e.b + r) % n_));
  }
  return out;
}

EdgeSet EdgeSet::reflected() const {
  EdgeSet out(n_);
  for (const Edge& e : edges()) {
    out.insert(make_edge((n_ - e.a) % n_, (n_ - e.b) % n_));
  }
  return out;
}

int degree(const EdgeSet& b, int v) {
  int n = b.polygon_size();
  if (v < 0 || v >= n) throw ConstraintError("vertex out of range");
  int d = 0;
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    Edge e = make_edge(v, w);
    if (is_diagonal(e, n) && b.contains(e)) ++d;
  }
  return d;
}

}  // namespace triblock
