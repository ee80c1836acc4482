#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/closedforms.hpp"
#include "lozenge/counting.hpp"
#include "lozenge/inclusion_exclusion.hpp"
#include "lozenge/polyedges.hpp"
#include "lozenge/reference.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace lozenge {

enum class Suite { Table, Formulas, Conjectures, Polyedges, Identities };

inline constexpr std::array<Suite, 5> kAllSuites{Suite::Table, Suite::Formulas, Suite::Conjectures, Suite::Polyedges,
                                                 Suite::Identities};

inline std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Table: return "table";
    case Suite::Formulas: return "formulas";
    case Suite::Conjectures: return "conjectures";
    case Suite::Polyedges: return "polyedges";
    case Suite::Identities: return "identities";
  }
  return "?";
}

inline Suite parse_suite(const std::string& s) {
  for (auto suite : kAllSuites) {
    if (suite_name(suite) == s) return suite;
  }
  throw std::invalid_argument("unknown suite: " + s);
}

inline std::vector<Suite> parse_suites(const std::string& csv) {
  std::vector<Suite> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_suite(item));
  }
  if (out.empty()) throw std::invalid_argument("no suites selected");
  return out;
}

struct CheckResult {
  Suite suite;
  std::string name;
  int n = 0;
  int l = 0;
  std::string expected;
  std::string computed;
  bool passed = false;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // informational lines, never failures

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
  }
  int exit_code() const { return all_passed() ? 0 : 1; }

  void print(std::ostream& os) const {
    for (const auto& c : checks) {
      os << (c.passed ? "PASS " : "FAIL ") << suite_name(c.suite) << ' ' << c.name << " n=" << c.n << " l=" << c.l;
      if (c.passed) {
        os << " value=" << c.computed;
      } else {
        os << " expected=" << c.expected << " computed=" << c.computed;
      }
      os << " (" << c.seconds << "s)\n";
    }
    for (const auto& note : notes) os << "NOTE " << note << '\n';
    os << (all_passed() ? "OK " : "FAILED ") << checks.size() - failures() << '/' << checks.size() << " checks passed\n";
  }
};

inline constexpr int kVerifyMaxN = 15;
inline constexpr int kPlacementMaxN = 12;

class Verifier {
 public:
  explicit Verifier(int max_n, std::ostream* progress = nullptr) : max_n_(max_n), progress_(progress) {
    if (max_n < 1 || max_n > kVerifyMaxN) {
      throw std::invalid_argument("--max-n must be in [1, " + std::to_string(kVerifyMaxN) + "], got " +
                                  std::to_string(max_n));
    }
  }

  VerificationReport run(const std::vector<Suite>& suites) {
    report_ = {};
    for (auto s : suites) {
      if (progress_) *progress_ << "running suite " << suite_name(s) << '\n';
      switch (s) {
        case Suite::Table: table(); break;
        case Suite::Formulas: formulas(); break;
        case Suite::Conjectures: conjectures(); break;
        case Suite::Polyedges: polyedges(); break;
        case Suite::Identities: identities(); break;
      }
    }
    std::stable_sort(report_.checks.begin(), report_.checks.end(), [](const CheckResult& a, const CheckResult& b) {
      return std::tie(a.suite, a.n, a.l) < std::tie(b.suite, b.n, b.l);
    });
    return std::move(report_);
  }

  const CountVector& dp(int n) {
    auto it = dp_cache_.find(n);
    if (it == dp_cache_.end()) {
      if (progress_) *progress_ << "  profile sweep n=" << n << '\n';
      it = dp_cache_.emplace(n, count_dp(n)).first;
    }
    return it->second;
  }

 private:
  template <typename Expected, typename Computed>
  void check(Suite suite, std::string name, int n, int l, Expected&& expected, Computed&& computed) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{suite, std::move(name), n, l, "", "", false, 0.0};
    try {
      const BigInt e = expected();
      const BigInt c = computed();
      r.expected = to_decimal(e);
      r.computed = to_decimal(c);
      r.passed = e == c;
    } catch (const std::exception& ex) {
      r.computed = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(r));
  }

  void table() {
    for (int n = 1; n <= max_n_; ++n) {
      const auto& v = dp(n);
      for (const auto& e : ReferenceTable::entries()) {
        if (e.n != n) continue;
        check(Suite::Table, "L", n, e.l, [&] { return parse_decimal(e.count); }, [&] { return v.at(e.l); });
      }
      const auto& sums = ReferenceTable::row_sums();
      if (static_cast<std::size_t>(n) <= sums.size()) {
        check(Suite::Table, "row_sum", n, -1, [&] { return parse_decimal(sums[n - 1]); }, [&] { return row_sum(v); });
      }
      const auto& maxima = ReferenceTable::maximal_packings();
      if (static_cast<std::size_t>(n) <= maxima.size()) {
        const auto lmax = max_lozenge_count(v);
        check(Suite::Table, "max_packing_value", n, static_cast<int>(lmax),
              [&] { return parse_decimal(maxima[n - 1]); }, [&] { return v.at(lmax); });
        check(Suite::Table, "max_l_is_T(n-1)", n, static_cast<int>(lmax), [&] { return BigInt(tri(n - 1)); },
              [&] { return BigInt(lmax); });
        if (lmax != tri(n - 2)) {
          report_.notes.push_back("n=" + std::to_string(n) + ": measured max l=" + std::to_string(lmax) +
                                  " differs from T(n-2)=" + std::to_string(tri(n - 2)));
        }
      }
    }
  }

  void formulas() {
    for (int l = 0; l <= 4; ++l) {
      const auto id = lozenge_formula(l);
      for (int n = std::max(1, formula_min_n(id)); n <= max_n_; ++n) {
        check(Suite::Formulas, std::string(formula_name(id)), n, l, [&] { return dp(n).at(l); },
              [&] { return eval_formula(id, n); });
      }
    }
    for (int n = 3; n <= max_n_; ++n) {
      check(Suite::Formulas, "L4_from_rank_sums", n, 4, [&] { return dp(n).at(4); },
            [&] { return l4_from_rank_sums(n); });
    }
    for (int n = 1; n <= max_n_; ++n) {
      const auto& v = dp(n);
      int violations = 0;
      for (std::int64_t l = 0; l < static_cast<std::int64_t>(v.size()); ++l) {
        if (v.at(l) > binomial_upper_bound(n, l)) ++violations;
      }
      check(Suite::Formulas, "binomial_dominance_violations", n, -1, [] { return BigInt(0); },
            [&] { return BigInt(violations); });
    }
  }

  void conjectures() {
    for (int l : {5, 6}) {
      const auto id = lozenge_formula(l);
      for (int n = formula_min_n(id); n <= max_n_; ++n) {
        check(Suite::Conjectures, std::string(formula_name(id)), n, l, [&] { return dp(n).at(l); },
              [&] { return eval_formula(id, n); });
        check(Suite::Conjectures, std::string(formula_name(id)) + "_bracketed", n, l,
              [&] { return eval_formula(id, n); }, [&] { return conjecture_bracket_form(l, n); });
      }
    }
  }

  void polyedges() {
    const std::vector<int> free_counts{1, 3, 12, 60, 375};
    for (int k = 1; k <= 5; ++k) {
      check(Suite::Polyedges, "free_census", 0, k, [&] { return BigInt(free_counts[k - 1]); },
            [&] { return BigInt(enumerate_free_polyedges(k).size()); });
    }
    const std::vector<int> forbidden_counts{1, 3, 12, 39, 209};
    for (int k = 2; k <= 6; ++k) {
      check(Suite::Polyedges, "forbidden_census", 0, k, [&] { return BigInt(forbidden_counts[k - 2]); },
            [&] { return BigInt(enumerate_forbidden_free(k).size()); });
    }
    const std::vector<int> fixed_counts{6, 14, 36};
    for (int k = 2; k <= 4; ++k) {
      check(Suite::Polyedges, "fixed_forbidden_census", 0, k, [&] { return BigInt(fixed_counts[k - 2]); },
            [&] { return BigInt(indecomposable_fixed_forbidden(k).size()); });
      check(Suite::Polyedges, "orbit_sum_equals_fixed", 0, k,
            [&] { return BigInt(expand_to_fixed(enumerate_forbidden_free(k)).size()); },
            [&] {
              std::size_t s = 0;
              for (const auto& f : enumerate_forbidden_free(k)) s += f.orbit_size;
              return BigInt(s);
            });
    }
    const auto vs = indecomposable_fixed_forbidden(2);
    for (int n = 1; n <= kPlacementMaxN; ++n) {
      check(Suite::Polyedges, "V_placements_3(n-1)^2", n, 2, [&] { return BigInt(3 * (n - 1) * (n - 1)); },
            [&] {
              BigInt s = 0;
              for (const auto& v : vs) s += placement_count(v, n).count;
              return s;
            });
    }
    // Offset histograms c -> shape count.
    const std::map<int, std::map<int, int>> expected_offsets{
        {2, {{1, 3}, {2, 3}}}, {3, {{1, 1}, {2, 12}, {3, 1}}}, {4, {{2, 21}, {3, 15}}}};
    for (const auto& [k, hist] : expected_offsets) {
      std::map<int, int> got;
      int unfit = 0;
      for (const auto& s : indecomposable_fixed_forbidden(k)) {
        const auto c = triangular_offset(s, 1, kPlacementMaxN);
        c ? ++got[*c] : ++unfit;
      }
      for (const auto& [c, count] : hist) {
        check(Suite::Polyedges, "offset_T(n-" + std::to_string(c) + ")_shapes", 0, k,
              [&, count = count] { return BigInt(count); }, [&, c = c] { return BigInt(got[c]); });
      }
      check(Suite::Polyedges, "shapes_without_triangular_law", 0, k, [] { return BigInt(0); },
            [&] { return BigInt(unfit); });
    }
  }

  void identities() {
    for (auto id : {FormulaId::BinTrans_L2, FormulaId::BinTrans_L3}) {
      for (const auto& c : binomial_transform_check(id, max_n_)) {
        check(Suite::Identities, std::string(formula_name(id)), static_cast<int>(c.n), -1,
              [&] { return c.product_form; }, [&] { return c.binomial_form; });
      }
    }
    const auto gf = gf_L1_coefficients(static_cast<std::size_t>(max_n_) + 1);
    for (int n = 1; n <= max_n_; ++n) {
      check(Suite::Identities, "GF_L1", n, 1, [&] { return BigInt(matchstick(n - 1)); }, [&] { return gf[n]; });
    }
    const int top = std::min(max_n_, kPlacementMaxN);
    for (int n = 1; n <= top; ++n) {
      check(Suite::Identities, "RankSumV", n, 2, [&] { return eval_rank_sum(FormulaId::RankSumV, n); },
            [&] { return count_violating_subsets(n, 2); });
      for (int l = 2; l <= 4; ++l) {
        check(Suite::Identities, "reconstruct_L", n, l, [&] { return dp(n).at(l); },
              [&] { return reconstruct_L(n, l); });
      }
      if (n >= 2) {
        const std::map<int, FormulaId> ranks{
            {1, FormulaId::RankSum6}, {2, FormulaId::RankSum35}, {3, FormulaId::RankSum36}};
        const auto report = rank_sum_report(n, 4);
        for (const auto& [rank, id] : ranks) {
          check(Suite::Identities, std::string(formula_name(id)), n, 4, [&, id = id] { return eval_rank_sum(id, n); },
                [&, rank = rank] {
                  auto it = report.find(rank);
                  return it == report.end() ? BigInt(0) : it->second;
                });
        }
      }
    }
  }

  int max_n_;
  std::ostream* progress_;
  std::map<int, CountVector> dp_cache_;
  VerificationReport report_;
};

}  // namespace lozenge
