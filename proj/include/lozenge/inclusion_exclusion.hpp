#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/geometry.hpp"
#include "lozenge/polyedges.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

// Partition of l-subsets of internal edges by the shapes of their 60-degree
// conflict components. A "cluster" is a component with >= 2 edges, i.e. an
// indecomposable forbidden fixed polyedge; singletons are free edges.
//
//   rank = l - (number of components)
//
// Rank 0 sets are exactly the lozenge tilings.

/// One node of the Hasse diagram: a multiset of clusters plus free edges.
struct RankedFamily {
  std::vector<std::size_t> clusters;  // sorted indices into the cluster catalogue
  int free_edges = 0;
  int rank = 0;
};

class InclusionExclusion {
 public:
  explicit InclusionExclusion(int l) : l_(l) {
    if (l < 2 || l > 4) throw std::invalid_argument("inclusion-exclusion supports l in {2,3,4}, got " + std::to_string(l));
    for (int k = 2; k <= l; ++k) {
      for (const auto& s : indecomposable_fixed_forbidden(k)) catalogue_.push_back(s);
    }
    build_families({}, 0, 0);
    std::stable_sort(families_.begin(), families_.end(),
                     [](const RankedFamily& a, const RankedFamily& b) { return a.rank > b.rank; });
    build_multiplicities();
  }

  int l() const { return l_; }
  const std::vector<FixedPolyedge>& catalogue() const { return catalogue_; }
  const std::vector<RankedFamily>& families() const { return families_; }  // rank descending

  // Number of families at each rank.
  std::map<int, std::size_t> rank_sizes() const {
    std::map<int, std::size_t> out;
    for (const auto& f : families_) ++out[f.rank];
    return out;
  }

  // Ways a set whose exact structure is `below` contains a realization of
  // `above`: unordered collections of pairwise disjoint sub-placements.
  const BigInt& multiplicity(std::size_t above, std::size_t below) const { return multiplicity_[above][below]; }

  /// Closure count: pairwise edge-disjoint placements of the clusters inside
  /// TriGrid(n) times any choice of the free edges among the rest. Computed as
  /// the product of the individual placement counts minus coinciding pairs.
  BigInt closure(std::size_t family, int n) const {
    const auto& f = families_[family];
    const std::int64_t m = matchstick(n - 1);
    std::int64_t used = 0;
    for (auto c : f.clusters) used += static_cast<std::int64_t>(catalogue_[c].size());
    const BigInt rest = binomial(m - used, f.free_edges);
    if (f.clusters.empty()) return rest;

    const TriGrid grid(n);
    if (f.clusters.size() == 1) return BigInt(placed_edge_sets(f.clusters[0], grid).size()) * rest;
    if (f.clusters.size() != 2) throw std::logic_error("families with more than two clusters need l > 4");

    const auto a = placed_edge_sets(f.clusters[0], grid);
    const auto b = placed_edge_sets(f.clusters[1], grid);
    const bool same = f.clusters[0] == f.clusters[1];
    const BigInt product = same ? binomial(static_cast<std::int64_t>(a.size()), 2)
                                : BigInt(a.size()) * BigInt(b.size());
    std::int64_t coinciding = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
        if (intersects(a[i], b[j])) ++coinciding;
      }
    }
    return (product - coinciding) * rest;
  }

  /// Exact counts per family: closures inverted from the highest rank down.
  std::vector<BigInt> exact_counts(int n) const {
    if (n < 1) throw std::invalid_argument("side length must be >= 1, got " + std::to_string(n));
    std::vector<BigInt> exact(families_.size());
    for (std::size_t f = 0; f < families_.size(); ++f) {
      BigInt v = closure(f, n);
      for (std::size_t g = 0; g < f; ++g) {
        if (families_[g].rank > families_[f].rank) v -= multiplicity_[f][g] * exact[g];
      }
      const BigInt& self = multiplicity_[f][f];
      if (v % self != 0) throw std::logic_error("Moebius inversion left a non-integral count");
      exact[f] = v / self;
    }
    return exact;
  }

  std::map<int, BigInt> rank_totals(int n) const {
    const auto exact = exact_counts(n);
    std::map<int, BigInt> out;
    for (std::size_t f = 0; f < families_.size(); ++f) out[families_[f].rank] += exact[f];
    return out;
  }

 private:
  void build_families(std::vector<std::size_t> chosen, std::size_t from, int used) {
    const int free = l_ - used;
    RankedFamily fam{chosen, free, l_ - static_cast<int>(chosen.size()) - free};
    families_.push_back(fam);
    for (std::size_t c = from; c < catalogue_.size(); ++c) {
      const int size = static_cast<int>(catalogue_[c].size());
      if (used + size > l_) continue;
      chosen.push_back(c);
      build_families(chosen, c, used + size);
      chosen.pop_back();
    }
  }

  // Sub-placements of catalogue shape c inside edge set `host`.
  std::vector<std::vector<LatticeEdge>> sub_placements(std::size_t c, const std::set<LatticeEdge>& host) const {
    const auto& shape = catalogue_[c].edges();
    std::set<std::vector<LatticeEdge>> found;
    for (const auto& e : host) {
      if (e.orientation != shape.front().orientation) continue;
      const int dx = e.x - shape.front().x;
      const int dy = e.y - shape.front().y;
      std::vector<LatticeEdge> moved;
      for (const auto& s : shape) moved.push_back(s.translated(dx, dy));
      if (std::all_of(moved.begin(), moved.end(), [&](const LatticeEdge& m) { return host.count(m) > 0; })) {
        found.insert(std::move(moved));
      }
    }
    return {found.begin(), found.end()};
  }

  void build_multiplicities() {
    const std::size_t count = families_.size();
    multiplicity_.assign(count, std::vector<BigInt>(count, 0));
    for (std::size_t g = 0; g < count; ++g) {
      // Representative of g: its clusters spaced far enough apart not to touch.
      std::set<LatticeEdge> host;
      int shift = 0;
      for (auto c : families_[g].clusters) {
        for (const auto& e : catalogue_[c].edges()) host.insert(e.translated(shift, 0));
        shift += 16;
      }
      for (std::size_t f = 0; f < count; ++f) {
        if (families_[f].rank > families_[g].rank) continue;
        multiplicity_[f][g] = count_realizations(families_[f].clusters, host);
      }
    }
  }

  BigInt count_realizations(const std::vector<std::size_t>& clusters, const std::set<LatticeEdge>& host) const {
    std::vector<std::vector<std::vector<LatticeEdge>>> options;
    for (auto c : clusters) options.push_back(sub_placements(c, host));
    std::set<LatticeEdge> taken;
    // Equal clusters are placed in increasing option order to count unordered collections.
    auto rec = [&](auto&& self, std::size_t k, std::size_t first) -> std::int64_t {
      if (k == clusters.size()) return 1;
      std::int64_t total = 0;
      for (std::size_t o = first; o < options[k].size(); ++o) {
        const auto& edges = options[k][o];
        if (std::any_of(edges.begin(), edges.end(), [&](const LatticeEdge& e) { return taken.count(e) > 0; })) continue;
        for (const auto& e : edges) taken.insert(e);
        const bool same_next = k + 1 < clusters.size() && clusters[k + 1] == clusters[k];
        total += self(self, k + 1, same_next ? o + 1 : 0);
        for (const auto& e : edges) taken.erase(e);
      }
      return total;
    };
    return rec(rec, 0, 0);
  }

  std::vector<std::vector<int>> placed_edge_sets(std::size_t c, const TriGrid& grid) const {
    std::vector<std::vector<int>> out;
    for (const auto& t : placements(catalogue_[c], grid.n())) {
      std::vector<int> ids;
      for (const auto& e : catalogue_[c].edges()) ids.push_back(*grid.edge_index(e.translated(t.x, t.y)));
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
    return out;
  }

  static bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      a[i] < b[j] ? ++i : ++j;
    }
    return false;
  }

  int l_;
  std::vector<FixedPolyedge> catalogue_;
  std::vector<RankedFamily> families_;
  std::vector<std::vector<BigInt>> multiplicity_;
};

namespace detail {
inline const InclusionExclusion& plan_for(int l) {
  if (l < 2 || l > 4) throw std::invalid_argument("l must be in {2,3,4}, got " + std::to_string(l));
  static const InclusionExclusion plans[3] = {InclusionExclusion(2), InclusionExclusion(3), InclusionExclusion(4)};
  return plans[l - 2];
}
}  // namespace detail

/// l-subsets of internal edges with at least one 60-degree pair: the sum of
/// the exact counts over all ranks >= 1.
inline BigInt count_violating_subsets(int n, int l) {
  BigInt total = 0;
  for (const auto& [rank, v] : detail::plan_for(l).rank_totals(n)) {
    if (rank >= 1) total += v;
  }
  return total;
}

inline BigInt reconstruct_L(int n, int l) {
  return binomial(matchstick(n - 1), l) - count_violating_subsets(n, l);
}

/// Per-rank totals of exact counts (rank >= 1).
inline std::map<int, BigInt> rank_sum_report(int n, int l) {
  auto totals = detail::plan_for(l).rank_totals(n);
  totals.erase(0);
  return totals;
}

}  // namespace lozenge
