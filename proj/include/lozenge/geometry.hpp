#pragma once

#include "lozenge/bigint.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

// T_k = k(k+1)/2 for k >= 0, else 0.
constexpr std::int64_t tri(std::int64_t k) { return k >= 0 ? k * (k + 1) / 2 : 0; }

inline BigInt tri_number(std::int64_t k) {
  if (k < 0) return 0;
  BigInt v = k;
  return v * (v + 1) / 2;
}

// M_k = 3 T_k, the edge count of the side-k subdivision.
constexpr std::int64_t matchstick(std::int64_t k) { return 3 * tri(k); }

enum class EdgeOrientation : std::uint8_t { Horizontal = 0, RisingLR = 1, FallingLR = 2 };
enum class FaceOrientation : std::uint8_t { Up = 0, Down = 1 };

inline constexpr std::array<EdgeOrientation, 3> kEdgeOrientations{
    EdgeOrientation::Horizontal, EdgeOrientation::RisingLR, EdgeOrientation::FallingLR};

inline char orientation_letter(EdgeOrientation o) {
  switch (o) {
    case EdgeOrientation::Horizontal: return 'H';
    case EdgeOrientation::RisingLR: return 'R';
    case EdgeOrientation::FallingLR: return 'F';
  }
  return '?';
}

inline EdgeOrientation orientation_from_letter(char c) {
  switch (c) {
    case 'H': return EdgeOrientation::Horizontal;
    case 'R': return EdgeOrientation::RisingLR;
    case 'F': return EdgeOrientation::FallingLR;
    default: throw std::invalid_argument(std::string("unknown edge orientation letter: ") + c);
  }
}

// Integer lattice point in the basis a = (1, 0), b = (1/2, sqrt(3)/2).
struct LatticePoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

// Unit edge of the infinite triangular lattice, stored as its start point plus
// direction: Horizontal (1,0), RisingLR (0,1), FallingLR (1,-1).
struct LatticeEdge {
  int x = 0;
  int y = 0;
  EdgeOrientation orientation = EdgeOrientation::Horizontal;

  auto operator<=>(const LatticeEdge&) const = default;

  LatticePoint start() const { return {x, y}; }
  LatticePoint end() const {
    switch (orientation) {
      case EdgeOrientation::Horizontal: return {x + 1, y};
      case EdgeOrientation::RisingLR: return {x, y + 1};
      case EdgeOrientation::FallingLR: return {x + 1, y - 1};
    }
    return {x, y};
  }
  LatticeEdge translated(int dx, int dy) const { return {x + dx, y + dy, orientation}; }
};

// Edge joining two lattice points at unit distance.
inline LatticeEdge edge_between(LatticePoint p, LatticePoint q) {
  const int dx = q.x - p.x;
  const int dy = q.y - p.y;
  if (dx == 1 && dy == 0) return {p.x, p.y, EdgeOrientation::Horizontal};
  if (dx == 0 && dy == 1) return {p.x, p.y, EdgeOrientation::RisingLR};
  if (dx == 1 && dy == -1) return {p.x, p.y, EdgeOrientation::FallingLR};
  if (dx == -1 && dy == 0) return {q.x, q.y, EdgeOrientation::Horizontal};
  if (dx == 0 && dy == -1) return {q.x, q.y, EdgeOrientation::RisingLR};
  if (dx == -1 && dy == 1) return {q.x, q.y, EdgeOrientation::FallingLR};
  throw std::invalid_argument("points are not lattice neighbours");
}

// The side-n triangle occupies lattice points x, y >= 0, x + y <= n: the
// bottom-left corner is (0,0), the apex (0,n) points up.
inline bool in_triangle(int n, LatticeEdge e) {
  const auto a = e.start();
  const auto b = e.end();
  auto inside = [n](LatticePoint p) { return p.x >= 0 && p.y >= 0 && p.x + p.y <= n; };
  return inside(a) && inside(b);
}

inline bool on_boundary(int n, LatticeEdge e) {
  switch (e.orientation) {
    case EdgeOrientation::Horizontal: return e.y == 0;
    case EdgeOrientation::RisingLR: return e.x == 0;
    case EdgeOrientation::FallingLR: return e.x + e.y == n;
  }
  return false;
}

inline bool is_internal(int n, LatticeEdge e) { return in_triangle(n, e) && !on_boundary(n, e); }

struct GridEdge {
  LatticeEdge lattice;
  bool boundary = false;
  std::array<int, 2> vertices{-1, -1};
  std::array<int, 2> faces{-1, -1};  // faces[1] == -1 on the boundary

  EdgeOrientation orientation() const { return lattice.orientation; }
  int face_count() const { return (faces[0] >= 0) + (faces[1] >= 0); }
};

struct GridFace {
  int row = 0;
  int slot = 0;
  FaceOrientation orientation = FaceOrientation::Up;
  std::array<int, 3> edges{-1, -1, -1};
};

/// Subdivided side-n equilateral triangle. Faces are addressed by
/// (row, slot) with row in [0, n) counted from the apex and slot in [0, 2 row];
/// even slots point up. All indices are pure functions of n.
class TriGrid {
 public:
  explicit TriGrid(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("grid side length must be >= 1, got " + std::to_string(n));
    build();
  }

  int n() const { return n_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<GridEdge>& edges() const { return edges_; }
  const std::vector<GridFace>& faces() const { return faces_; }
  const std::vector<std::vector<int>>& face_adjacency() const { return adjacency_; }
  const std::vector<int>& internal_edges() const { return internal_; }

  int vertex_index(LatticePoint p) const {
    const int k = n_ - p.y;
    return static_cast<int>(tri(k)) + p.x;
  }

  // Arithmetic edge index: orientation block of T_n edges, then row from the
  // top, then x.
  std::optional<int> edge_index(LatticeEdge e) const {
    if (!in_triangle(n_, e)) return std::nullopt;
    const int k = e.orientation == EdgeOrientation::FallingLR ? n_ - e.y : n_ - 1 - e.y;
    return static_cast<int>(static_cast<int>(e.orientation) * tri(n_) + tri(k) + e.x);
  }

  static int face_index(int row, int slot) { return row * row + slot; }

  std::size_t adjacency_pair_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency_) twice += nb.size();
    return twice / 2;
  }

 private:
  void build();

  int n_;
  std::vector<LatticePoint> vertices_;
  std::vector<GridEdge> edges_;
  std::vector<GridFace> faces_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> internal_;
};

inline void TriGrid::build() {
  vertices_.resize(static_cast<std::size_t>(tri(n_ + 1)));
  for (int k = 0; k <= n_; ++k) {
    for (int x = 0; x <= k; ++x) {
      const LatticePoint p{x, n_ - k};
      vertices_[static_cast<std::size_t>(vertex_index(p))] = p;
    }
  }

  edges_.resize(static_cast<std::size_t>(matchstick(n_)));
  for (auto o : kEdgeOrientations) {
    for (int k = 0; k < n_; ++k) {
      const int y = o == EdgeOrientation::FallingLR ? n_ - k : n_ - 1 - k;
      for (int x = 0; x <= k; ++x) {
        const LatticeEdge le{x, y, o};
        auto& e = edges_[static_cast<std::size_t>(*edge_index(le))];
        e.lattice = le;
        e.boundary = on_boundary(n_, le);
        e.vertices = {vertex_index(le.start()), vertex_index(le.end())};
      }
    }
  }

  faces_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) {
    const int y0 = n_ - r - 1;
    for (int j = 0; j <= 2 * r; ++j) {
      const int i = j / 2;
      GridFace f{r, j, j % 2 == 0 ? FaceOrientation::Up : FaceOrientation::Down, {}};
      std::array<LatticeEdge, 3> le;
      if (f.orientation == FaceOrientation::Up) {
        le = {LatticeEdge{i, y0, EdgeOrientation::Horizontal}, LatticeEdge{i, y0, EdgeOrientation::RisingLR},
              LatticeEdge{i, y0 + 1, EdgeOrientation::FallingLR}};
      } else {
        le = {LatticeEdge{i, y0 + 1, EdgeOrientation::Horizontal},
              LatticeEdge{i + 1, y0, EdgeOrientation::RisingLR},
              LatticeEdge{i, y0 + 1, EdgeOrientation::FallingLR}};
      }
      const int fi = face_index(r, j);
      for (std::size_t s = 0; s < 3; ++s) {
        const int ei = *edge_index(le[s]);
        f.edges[s] = ei;
        auto& slots = edges_[static_cast<std::size_t>(ei)].faces;
        (slots[0] < 0 ? slots[0] : slots[1]) = fi;
      }
      faces_[static_cast<std::size_t>(fi)] = f;
    }
  }

  adjacency_.assign(faces_.size(), {});
  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    const auto& e = edges_[ei];
    if (e.faces[1] >= 0) {
      adjacency_[static_cast<std::size_t>(e.faces[0])].push_back(e.faces[1]);
      adjacency_[static_cast<std::size_t>(e.faces[1])].push_back(e.faces[0]);
    }
    if (!e.boundary) internal_.push_back(static_cast<int>(ei));
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

inline TriGrid build_grid(int n) { return TriGrid(n); }

struct OrientationCounts {
  std::array<std::int64_t, 3> counts{};
  std::int64_t& operator[](EdgeOrientation o) { return counts[static_cast<std::size_t>(o)]; }
  std::int64_t operator[](EdgeOrientation o) const { return counts[static_cast<std::size_t>(o)]; }
  std::int64_t total() const { return counts[0] + counts[1] + counts[2]; }
  bool operator==(const OrientationCounts&) const = default;
};

inline OrientationCounts count_edges_by_orientation(const TriGrid& grid, bool internal_only) {
  OrientationCounts out;
  for (const auto& e : grid.edges()) {
    if (internal_only && e.boundary) continue;
    ++out[e.orientation()];
  }
  return out;
}

}  // namespace lozenge
