// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "lozenge/lozenge.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace {

using namespace lozenge;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::map<int, CountVector> dp_cache;

const CountVector& dp(int n) {
  auto it = dp_cache.find(n);
  if (it == dp_cache.end()) it = dp_cache.emplace(n, count_dp(n)).first;
  return it->second;
}

// Collects mismatches for one criterion; the first few are echoed on failure.
struct Tally {
  std::ostringstream detail;
  int failures = 0;

  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    if (++failures <= 5) detail << "  mismatch " << what << ": got " << got << ", want " << want << '\n';
  }
  void expect(bool ok, const std::string& what) {
    if (!ok && ++failures <= 5) detail << "  failed " << what << '\n';
  }
};

// Oracle for criterion 9: l-subsets of internal edges with at least one pair
// bounding a common face.
BigInt scan_violating(int n, int l) {
  const auto g = build_grid(n);
  const auto& internal = g.internal_edges();
  const int m = static_cast<int>(internal.size());
  auto shares_face = [&](int a, int b) {
    for (int fa : g.edges()[static_cast<std::size_t>(a)].faces) {
      for (int fb : g.edges()[static_cast<std::size_t>(b)].faces) {
        if (fa >= 0 && fa == fb) return true;
      }
    }
    return false;
  };
  BigInt count = 0;
  std::vector<int> pick;
  std::function<void(int, bool)> visit = [&](int from, bool bad) {
    if (static_cast<int>(pick.size()) == l) {
      count += bad;
      return;
    }
    for (int e = from; e < m; ++e) {
      const int edge = internal[static_cast<std::size_t>(e)];
      bool now = bad;
      for (int p : pick) now = now || shares_face(p, edge);
      pick.push_back(edge);
      visit(e + 1, now);
      pick.pop_back();
    }
  };
  visit(0, false);
  return count;
}

void table_reproduction(Tally& t) {
  const auto t0 = Clock::now();
  for (int n = 1; n <= 15; ++n) dp(n);
  const double elapsed = seconds_since(t0);
  for (const auto& e : ReferenceTable::entries()) {
    t.expect_eq(dp(e.n).at(e.l), parse_decimal(e.count), "L(" + std::to_string(e.n) + "," + std::to_string(e.l) + ")");
  }
  t.expect_eq(dp(15).at(11), parse_decimal("32139701729335767774"), "L(15,11)");
  t.expect_eq(dp(7).at(7), BigInt(146208393), "L(7,7)");
  t.expect(elapsed < 60.0, "n <= 15 sweep under 60s (took " + std::to_string(elapsed) + "s)");
  t.detail << "  sweep n=1..15 took " << elapsed << "s\n";
}

void oracle_equivalence(Tally& t) {
  for (int n = 1; n <= 5; ++n) {
    const auto t0 = Clock::now();
    const auto brute = count_brute_force(n);
    const double elapsed = seconds_since(t0);
    t.expect(brute == dp(n), "brute force equals profile sweep at n=" + std::to_string(n));
    if (n == 5) {
      t.expect(elapsed < 60.0, "brute force n=5 under 60s (took " + std::to_string(elapsed) + "s)");
      t.detail << "  brute force n=5 took " << elapsed << "s\n";
    }
  }
}

void row_sums(Tally& t) {
  const auto& sums = ReferenceTable::row_sums();
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    t.expect_eq(row_sum(dp(n)), parse_decimal(sums[i]), "row sum n=" + std::to_string(n));
  }
}

void maximal_packings(Tally& t) {
  const auto& packs = ReferenceTable::maximal_packings();
  for (int n = 2; n <= 8; ++n) {
    const auto& v = dp(n);
    const auto lmax = max_lozenge_count(v);
    t.expect_eq(v.values().back(), parse_decimal(packs[static_cast<std::size_t>(n - 1)]),
                "last nonzero entry n=" + std::to_string(n));
    t.detail << "  n=" << n << " max l=" << lmax << " T(n-2)=" << tri(n - 2)
             << (lmax != tri(n - 2) ? " differs" : " agrees") << '\n';
  }
}

void closed_forms(Tally& t) {
  for (int l = 0; l <= 4; ++l) {
    const auto id = lozenge_formula(l);
    for (int n = std::max(1, formula_min_n(id)); n <= 15; ++n) {
      t.expect_eq(eval_formula(id, n), dp(n).at(l), std::string(formula_name(id)) + " n=" + std::to_string(n));
    }
  }
  for (int n = 3; n <= 15; ++n) {
    t.expect_eq(eval_formula(FormulaId::L5conj, n), dp(n).at(5), "L5 n=" + std::to_string(n));
    t.expect_eq(l4_from_rank_sums(n), dp(n).at(4), "L4 from rank sums n=" + std::to_string(n));
  }
  for (int n = 4; n <= 15; ++n) t.expect_eq(eval_formula(FormulaId::L6conj, n), dp(n).at(6), "L6 n=" + std::to_string(n));
}

void binomial_transforms(Tally& t) {
  for (auto id : {FormulaId::BinTrans_L2, FormulaId::BinTrans_L3}) {
    for (const auto& c : binomial_transform_check(id, 15)) {
      t.expect(c.equal, std::string(formula_name(id)) + " n=" + std::to_string(c.n));
    }
  }
  const auto gf = gf_L1_coefficients(16);
  for (int n = 1; n <= 15; ++n) t.expect_eq(gf[static_cast<std::size_t>(n)], BigInt(matchstick(n - 1)), "GF n=" + std::to_string(n));
}

void polyedge_censuses(Tally& t) {
  const std::vector<std::size_t> free{1, 3, 12, 60, 375};
  for (int k = 1; k <= 5; ++k) t.expect_eq(enumerate_free_polyedges(k).size(), free[static_cast<std::size_t>(k - 1)], "free k=" + std::to_string(k));
  const std::vector<std::size_t> forbidden{1, 3, 12, 39, 209};
  for (int k = 2; k <= 6; ++k) {
    t.expect_eq(enumerate_forbidden_free(k).size(), forbidden[static_cast<std::size_t>(k - 2)], "forbidden k=" + std::to_string(k));
  }
  const std::vector<std::size_t> fixed{6, 14, 36};
  for (int k = 2; k <= 4; ++k) {
    t.expect_eq(indecomposable_fixed_forbidden(k).size(), fixed[static_cast<std::size_t>(k - 2)], "fixed forbidden k=" + std::to_string(k));
  }
}

void placement_laws(Tally& t) {
  const auto vs = indecomposable_fixed_forbidden(2);
  for (int n = 1; n <= 12; ++n) {
    std::size_t total = 0;
    for (const auto& v : vs) total += placements(v, n).size();
    t.expect_eq(total, static_cast<std::size_t>(3 * (n - 1) * (n - 1)), "V placements n=" + std::to_string(n));
  }
  const std::map<int, std::map<int, int>> expected{
      {2, {{1, 3}, {2, 3}}}, {3, {{1, 1}, {2, 12}, {3, 1}}}, {4, {{2, 21}, {3, 15}}}};
  for (const auto& [k, hist] : expected) {
    std::map<int, int> got;
    for (const auto& s : indecomposable_fixed_forbidden(k)) {
      const auto c = triangular_offset(s, 1, 12);
      t.expect(c.has_value(), "triangular law for " + format_shape(s));
      if (c) ++got[*c];
    }
    t.expect(got == hist, "offset multiset k=" + std::to_string(k));
  }
}

void inclusion_exclusion(Tally& t) {
  for (int n = 2; n <= 12; ++n) {
    for (int l = 2; l <= 4; ++l) {
      t.expect_eq(reconstruct_L(n, l), dp(n).at(l), "reconstruct n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int l = 2; l <= 4; ++l) {
      t.expect_eq(count_violating_subsets(n, l), scan_violating(n, l),
                  "violating n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
  }
}

void structural_invariants(Tally& t) {
  for (int n = 1; n <= 20; ++n) {
    const auto g = build_grid(n);
    const auto nv = static_cast<std::int64_t>(g.vertices().size());
    const auto ne = static_cast<std::int64_t>(g.edges().size());
    const auto nf = static_cast<std::int64_t>(g.faces().size());
    const std::string at = " n=" + std::to_string(n);
    t.expect_eq(nv, tri(n + 1), "vertices" + at);
    t.expect_eq(ne, matchstick(n), "edges" + at);
    t.expect_eq(nf, static_cast<std::int64_t>(n) * n, "faces" + at);
    t.expect_eq(nf + nv, ne + 1, "Euler" + at);
    t.expect_eq(static_cast<std::int64_t>(g.internal_edges().size()), matchstick(n - 1), "internal edges" + at);
    t.expect_eq(static_cast<std::int64_t>(g.adjacency_pair_count()), matchstick(n - 1), "face adjacencies" + at);
    const auto counts = count_edges_by_orientation(g, true);
    for (auto o : kEdgeOrientations) t.expect_eq(counts[o], tri(n - 1), "orientation count" + at);
  }
  for (int n = 1; n <= 15; ++n) {
    const auto& v = dp(n);
    for (std::size_t l = 0; l < v.size(); ++l) {
      t.expect(v[l] <= binomial_upper_bound(n, static_cast<std::int64_t>(l)),
               "dominance n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Tally&)>> criteria{
      {"table reproduction", table_reproduction},
      {"brute force equals profile sweep", oracle_equivalence},
      {"row sums", row_sums},
      {"maximal packings", maximal_packings},
      {"closed forms", closed_forms},
      {"binomial transforms", binomial_transforms},
      {"polyedge censuses", polyedge_censuses},
      {"placement laws", placement_laws},
      {"inclusion-exclusion pipeline", inclusion_exclusion},
      {"structural invariants", structural_invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      ++t.failures;
      t.detail << "  exception: " << e.what() << '\n';
    }
    const bool ok = t.failures == 0;
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << "criterion " << i + 1 << ": " << criteria[i].first << " ("
              << seconds_since(t0) << "s)\n"
              << t.detail.str();
  }
  std::cout << (failed ? "FAILED " : "OK ") << criteria.size() - static_cast<std::size_t>(failed) << '/'
            << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
