#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

inline constexpr int kPolyedgeGuard = 6;

namespace detail {

// Unit steps in counter-clockwise order, 60 degrees apart.
inline constexpr std::array<LatticePoint, 6> kSteps{
    LatticePoint{1, 0}, LatticePoint{0, 1}, LatticePoint{-1, 1},
    LatticePoint{-1, 0}, LatticePoint{0, -1}, LatticePoint{1, -1}};

inline int step_index(LatticePoint from, LatticePoint to) {
  const LatticePoint d{to.x - from.x, to.y - from.y};
  for (int i = 0; i < 6; ++i) {
    if (kSteps[static_cast<std::size_t>(i)] == d) return i;
  }
  throw std::invalid_argument("points are not lattice neighbours");
}

// Element g of the order-12 dihedral group: optional mirror (x,y) -> (y,x)
// when g is odd, then g/2 rotations by 60 degrees, (x,y) -> (-y, x+y).
inline LatticePoint apply_symmetry(int g, LatticePoint p) {
  if (g & 1) p = {p.y, p.x};
  for (int k = 0; k < g / 2; ++k) p = {-p.y, p.x + p.y};
  return p;
}

}  // namespace detail

/// Two distinct edges are 60-degree adjacent when they share an endpoint and
/// their directions away from it differ by 60 degrees, i.e. they bound a common
/// unit triangle.
inline bool sixty_degree_adjacent(const LatticeEdge& a, const LatticeEdge& b) {
  const std::array<LatticePoint, 2> pa{a.start(), a.end()};
  const std::array<LatticePoint, 2> pb{b.start(), b.end()};
  int shared = 0;
  LatticePoint common, far_a, far_b;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (pa[static_cast<std::size_t>(i)] == pb[static_cast<std::size_t>(j)]) {
        ++shared;
        common = pa[static_cast<std::size_t>(i)];
        far_a = pa[static_cast<std::size_t>(1 - i)];
        far_b = pb[static_cast<std::size_t>(1 - j)];
      }
    }
  }
  if (shared != 1) return false;
  const int diff = (detail::step_index(common, far_a) - detail::step_index(common, far_b) + 6) % 6;
  return diff == 1 || diff == 5;
}

/// Finite edge set translated so that its smallest edge starts at the origin.
class FixedPolyedge {
 public:
  FixedPolyedge() = default;
  explicit FixedPolyedge(std::vector<LatticeEdge> edges) : edges_(std::move(edges)) {
    if (edges_.empty()) throw std::invalid_argument("polyedge must have at least one edge");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    const int dx = -edges_.front().x;
    const int dy = -edges_.front().y;
    for (auto& e : edges_) e = e.translated(dx, dy);
  }

  const std::vector<LatticeEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool is_connected() const {
    return component_count([](const LatticeEdge& a, const LatticeEdge& b) {
             return a.start() == b.start() || a.start() == b.end() || a.end() == b.start() || a.end() == b.end();
           }) == 1;
  }

  // Every edge has a 60-degree partner in the set.
  bool is_forbidden() const {
    if (edges_.size() < 2) return false;
    return std::all_of(edges_.begin(), edges_.end(), [&](const LatticeEdge& a) {
      return std::any_of(edges_.begin(), edges_.end(),
                         [&](const LatticeEdge& b) { return a != b && sixty_degree_adjacent(a, b); });
    });
  }

  // Connected components of the 60-degree adjacency graph on the edges.
  std::size_t conflict_components() const { return component_count(sixty_degree_adjacent); }

  // A forbidden polyedge whose 60-degree graph splits is a coincidence of
  // smaller forbidden polyedges touching only at vertices.
  bool is_cut_decomposable() const { return is_forbidden() && conflict_components() > 1; }
  bool is_indecomposable() const { return edges_.size() >= 2 && conflict_components() == 1; }

  FixedPolyedge transformed(int g) const {
    std::vector<LatticeEdge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
      out.push_back(edge_between(detail::apply_symmetry(g, e.start()), detail::apply_symmetry(g, e.end())));
    }
    return FixedPolyedge(std::move(out));
  }

  auto operator<=>(const FixedPolyedge&) const = default;

 private:
  template <typename Linked>
  std::size_t component_count(Linked linked) const {
    const std::size_t m = edges_.size();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    std::size_t comps = m;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!linked(edges_[i], edges_[j])) continue;
        const auto a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
    }
    return comps;
  }

  std::vector<LatticeEdge> edges_;
};

/// Orbit of a fixed polyedge under the dihedral group, translation-normalized.
inline std::set<FixedPolyedge> dihedral_orbit(const FixedPolyedge& shape) {
  std::set<FixedPolyedge> orbit;
  for (int g = 0; g < 12; ++g) orbit.insert(shape.transformed(g));
  return orbit;
}

struct FreePolyedge {
  FixedPolyedge canonical;  // smallest image over the dihedral group
  std::size_t orbit_size = 0;

  auto operator<=>(const FreePolyedge& o) const { return canonical <=> o.canonical; }
  bool operator==(const FreePolyedge& o) const { return canonical == o.canonical; }
};

inline FreePolyedge make_free(const FixedPolyedge& shape) {
  const auto orbit = dihedral_orbit(shape);
  return {*orbit.begin(), orbit.size()};
}

inline void check_polyedge_guard(int k) {
  if (k < 1 || k > kPolyedgeGuard) {
    throw std::invalid_argument("polyedge size must be in [1, " + std::to_string(kPolyedgeGuard) +
                                "], got " + std::to_string(k));
  }
}

/// Connected free polyedges with k edges, grown one vertex-sharing edge at a time.
inline std::set<FreePolyedge> enumerate_free_polyedges(int k) {
  check_polyedge_guard(k);
  std::set<FreePolyedge> level{make_free(FixedPolyedge({LatticeEdge{0, 0, EdgeOrientation::Horizontal}}))};
  for (int size = 2; size <= k; ++size) {
    std::set<FreePolyedge> grown;
    for (const auto& parent : level) {
      const auto& edges = parent.canonical.edges();
      std::set<LatticePoint> points;
      for (const auto& e : edges) {
        points.insert(e.start());
        points.insert(e.end());
      }
      for (const auto& p : points) {
        for (const auto& step : detail::kSteps) {
          const auto e = edge_between(p, {p.x + step.x, p.y + step.y});
          if (std::binary_search(edges.begin(), edges.end(), e)) continue;
          auto child = edges;
          child.push_back(e);
          grown.insert(make_free(FixedPolyedge(std::move(child))));
        }
      }
    }
    level = std::move(grown);
  }
  return level;
}

inline std::set<FreePolyedge> enumerate_forbidden_free(int k) {
  std::set<FreePolyedge> out;
  for (const auto& s : enumerate_free_polyedges(k)) {
    if (s.canonical.is_forbidden()) out.insert(s);
  }
  return out;
}

inline std::set<FixedPolyedge> expand_to_fixed(const std::set<FreePolyedge>& shapes) {
  std::set<FixedPolyedge> out;
  for (const auto& s : shapes) {
    const auto orbit = dihedral_orbit(s.canonical);
    out.insert(orbit.begin(), orbit.end());
  }
  return out;
}

/// Fixed forbidden polyedges with a connected 60-degree graph: the shapes that
/// occupy the top rank of the l = k inclusion-exclusion.
inline std::set<FixedPolyedge> indecomposable_fixed_forbidden(int k) {
  std::set<FixedPolyedge> out;
  for (const auto& s : expand_to_fixed(enumerate_forbidden_free(k))) {
    if (s.is_indecomposable()) out.insert(s);
  }
  return out;
}

// ---- placement inside the big triangle ----

/// Translations (dx, dy) that put every edge of the shape on an internal edge
/// of the side-n triangle.
inline std::vector<LatticePoint> placements(const FixedPolyedge& shape, int n) {
  std::vector<LatticePoint> out;
  if (n < 1) return out;
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& e : shape.edges()) {
    for (auto p : {e.start(), e.end()}) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  for (int dy = -min_y; dy <= n - max_y; ++dy) {
    for (int dx = -min_x; dx <= n - max_x; ++dx) {
      const bool fits = std::all_of(shape.edges().begin(), shape.edges().end(),
                                    [&](const LatticeEdge& e) { return is_internal(n, e.translated(dx, dy)); });
      if (fits) out.push_back({dx, dy});
    }
  }
  return out;
}

struct PlacementCount {
  FixedPolyedge shape;
  int n = 0;
  BigInt count;
  std::optional<int> offset;  // count == T_{n - offset} across the fitted range
};

/// Offset c with placements(shape, m) == T_{m-c} for every m in [n_lo, n_hi],
/// if one exists.
inline std::optional<int> triangular_offset(const FixedPolyedge& shape, int n_lo, int n_hi) {
  const auto top = static_cast<std::int64_t>(placements(shape, n_hi).size());
  if (top == 0) return std::nullopt;
  std::int64_t side = 0;
  while (tri(side) < top) ++side;
  if (tri(side) != top) return std::nullopt;
  const int c = n_hi - static_cast<int>(side);
  for (int m = n_lo; m <= n_hi; ++m) {
    if (static_cast<std::int64_t>(placements(shape, m).size()) != tri(m - c)) return std::nullopt;
  }
  return c;
}

inline constexpr int kOffsetFitMaxN = 12;

inline PlacementCount placement_count(const FixedPolyedge& shape, int n) {
  if (n < 1) throw std::invalid_argument("side length must be >= 1, got " + std::to_string(n));
  PlacementCount pc{shape, n, BigInt(placements(shape, n).size()), std::nullopt};
  pc.offset = triangular_offset(shape, 1, std::max(n, kOffsetFitMaxN));
  return pc;
}

// ---- text format: one shape per line, "(x,y,O)" triples in canonical order ----

inline std::string format_shape(const FixedPolyedge& shape) {
  std::string out;
  for (const auto& e : shape.edges()) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(e.x) + ',' + std::to_string(e.y) + ',' + orientation_letter(e.orientation) + ')';
  }
  return out;
}

inline FixedPolyedge parse_shape(const std::string& line) {
  std::vector<LatticeEdge> edges;
  std::size_t pos = 0;
  while ((pos = line.find('(', pos)) != std::string::npos) {
    const auto close = line.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated edge triple: " + line);
    std::istringstream in(line.substr(pos + 1, close - pos - 1));
    int x = 0, y = 0;
    char c1 = 0, c2 = 0, o = 0;
    if (!(in >> x >> c1 >> y >> c2 >> o) || c1 != ',' || c2 != ',') {
      throw std::invalid_argument("malformed edge triple: " + line.substr(pos, close - pos + 1));
    }
    edges.push_back({x, y, orientation_from_letter(o)});
    pos = close + 1;
  }
  return FixedPolyedge(std::move(edges));
}

inline void write_shapes(std::ostream& os, const std::vector<FixedPolyedge>& shapes, const std::string& header) {
  os << "# " << header << " count=" << shapes.size() << '\n';
  for (const auto& s : shapes) os << format_shape(s) << '\n';
}

inline std::vector<FixedPolyedge> read_shapes(std::istream& is) {
  std::vector<FixedPolyedge> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_shape(line));
  }
  return out;
}

}  // namespace lozenge
