#include "lozenge/closedforms.hpp"
#include "lozenge/counting.hpp"

#include <gtest/gtest.h>

namespace lozenge {
namespace {

// Monomial coefficients (constant term first) of the polynomial through the
// given points, by Newton divided differences.
std::vector<Rational> interpolate(const std::vector<std::int64_t>& xs, const std::vector<BigInt>& ys) {
  const std::size_t k = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    }
  }
  std::vector<Rational> poly{dd[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + dd[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

BigInt dp_value(int n, int l) { return count_dp_prefix(n, l).at(static_cast<std::size_t>(l)); }

TEST(Formulas, Examples) {
  EXPECT_EQ(eval_formula(FormulaId::L2, 3), 24);
  EXPECT_EQ(eval_formula(FormulaId::L3, 3), 18);
  EXPECT_EQ(eval_formula(FormulaId::L2, 1), 0);
  EXPECT_EQ(eval_formula(FormulaId::L5conj, 6), 515970);
  EXPECT_EQ(eval_formula(FormulaId::L6conj, 6), 2139120);
  EXPECT_EQ(eval_formula(FormulaId::L1, 1), 0);
  EXPECT_EQ(eval_formula(FormulaId::L0, 7), 1);
}

TEST(Formulas, DomainErrors) {
  EXPECT_THROW(eval_formula(FormulaId::L3, 1), std::domain_error);
  EXPECT_THROW(eval_formula(FormulaId::L4, 2), std::domain_error);
  EXPECT_THROW(eval_formula(FormulaId::L5conj, 2), std::domain_error);
  EXPECT_THROW(eval_formula(FormulaId::L6conj, 3), std::domain_error);
  EXPECT_THROW(eval_formula(FormulaId::L1, 0), std::domain_error);
  EXPECT_THROW(eval_formula(FormulaId::BinoBound, 4), std::invalid_argument);
  EXPECT_THROW(binomial_upper_bound(0, 2), std::domain_error);
}

TEST(Formulas, IntegralAcrossWideRange) {
  for (auto id : kAllFormulas) {
    if (id == FormulaId::BinoBound) continue;
    for (std::int64_t n = formula_min_n(id); n <= 200; ++n) {
      EXPECT_NO_THROW(eval_formula(id, n)) << formula_name(id) << " n=" << n;
    }
  }
}

TEST(Formulas, MatchProfileDp) {
  for (int n = 1; n <= 15; ++n) {
    const auto prefix = count_dp_prefix(n, 6);
    for (int l = 0; l <= 6; ++l) {
      const auto id = lozenge_formula(l);
      if (n < formula_min_n(id)) continue;
      const BigInt dp = static_cast<std::size_t>(l) < prefix.size() ? prefix[static_cast<std::size_t>(l)] : BigInt(0);
      EXPECT_EQ(eval_formula(id, n), dp) << formula_name(id) << " n=" << n;
    }
  }
}

TEST(Formulas, ConjecturesHoldBeyondTable) {
  for (int n = 16; n <= 20; ++n) {
    EXPECT_EQ(eval_formula(FormulaId::L5conj, n), dp_value(n, 5)) << "n=" << n;
    EXPECT_EQ(eval_formula(FormulaId::L6conj, n), dp_value(n, 6)) << "n=" << n;
  }
}

TEST(Formulas, L6CoefficientsRecoveredByInterpolation) {
  std::vector<std::int64_t> xs;
  std::vector<BigInt> ys;
  for (int n = 4; n <= 16; ++n) {
    xs.push_back(n);
    ys.push_back(dp_value(n, 6));
  }
  const auto poly = interpolate(xs, ys);
  const auto& form = detail::factored_form(FormulaId::L6conj);
  ASSERT_EQ(form.factors.size(), 1u);
  const auto& stored = form.factors[0];
  ASSERT_EQ(poly.size(), stored.size());
  for (std::size_t i = 0; i < stored.size(); ++i) {
    const Rational scaled = poly[stored.size() - 1 - i] / form.prefactor;
    EXPECT_EQ(scaled, Rational(stored[i])) << "coefficient of n^" << stored.size() - 1 - i;
  }
  EXPECT_EQ(stored[11], 19678080);
}

TEST(Formulas, BracketFormsAgreeWithProducts) {
  for (std::int64_t n = 3; n <= 60; ++n) {
    EXPECT_EQ(conjecture_bracket_form(5, n), eval_formula(FormulaId::L5conj, n)) << "n=" << n;
    if (n >= 4) EXPECT_EQ(conjecture_bracket_form(6, n), eval_formula(FormulaId::L6conj, n)) << "n=" << n;
  }
  EXPECT_THROW(conjecture_bracket_form(4, 5), std::invalid_argument);
}

TEST(BinomialBound, Examples) {
  EXPECT_EQ(binomial_upper_bound(3, 2), 36);
  EXPECT_EQ(binomial_upper_bound(3, 2) - eval_formula(FormulaId::L2, 3), 12);
  EXPECT_EQ(binomial_upper_bound(3, 0), 1);
  EXPECT_EQ(binomial_upper_bound(4, 3), 816);
  EXPECT_EQ(binomial_upper_bound(2, 5), 0);
}

TEST(BinomialBound, DominatesCounts) {
  for (int n = 1; n <= 10; ++n) {
    const auto v = count_dp(n);
    for (std::size_t l = 0; l < v.size(); ++l) EXPECT_LE(v[l], binomial_upper_bound(n, static_cast<std::int64_t>(l)));
  }
}

TEST(GeneratingFunction, Coefficients) {
  EXPECT_EQ(gf_L1_coefficients(5), (std::vector<BigInt>{0, 0, 3, 9, 18}));
  EXPECT_EQ(gf_L1_coefficients(1), (std::vector<BigInt>{0}));
  EXPECT_EQ(gf_L1_coefficients(8)[7], 63);
  const auto c = gf_L1_coefficients(41);
  for (std::int64_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(c[static_cast<std::size_t>(n)], eval_formula(FormulaId::L1, n));
    EXPECT_EQ(eval_formula(FormulaId::GF_L1, n), matchstick(n - 1));
  }
}

TEST(BinomialTransform, AgreesWithProductForms) {
  for (auto id : {FormulaId::BinTrans_L2, FormulaId::BinTrans_L3}) {
    const auto checks = binomial_transform_check(id, 40);
    ASSERT_FALSE(checks.empty());
    for (const auto& c : checks) EXPECT_TRUE(c.equal) << formula_name(id) << " n=" << c.n;
  }
  const auto single = binomial_transform_check(FormulaId::BinTrans_L2, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].binomial_form, 0);
  EXPECT_EQ(single[0].product_form, 0);
  EXPECT_TRUE(binomial_transform_check(FormulaId::BinTrans_L3, 1).empty());
  EXPECT_THROW(binomial_transform_check(FormulaId::L2, 5), std::invalid_argument);
}

TEST(RankSums, Examples) {
  EXPECT_EQ(eval_rank_sum(FormulaId::RankSumV, 3), 12);
  EXPECT_EQ(eval_rank_sum(FormulaId::RankSumV, 1), 0);
  EXPECT_EQ(eval_rank_sum(FormulaId::RankSum36, 3), 21);
  EXPECT_THROW(eval_rank_sum(FormulaId::L4, 5), std::invalid_argument);
}

TEST(RankSums, ReassembleL4) {
  for (std::int64_t n = 3; n <= 80; ++n) EXPECT_EQ(l4_from_rank_sums(n), eval_formula(FormulaId::L4, n)) << "n=" << n;
}

TEST(RankSums, ReassembleL2) {
  for (std::int64_t n = 1; n <= 80; ++n) {
    EXPECT_EQ(binomial_upper_bound(n, 2) - eval_rank_sum(FormulaId::RankSumV, n), eval_formula(FormulaId::L2, n));
  }
}

TEST(FormulaNames, RoundTripThroughLozengeFormula) {
  for (int l = 0; l <= 6; ++l) EXPECT_FALSE(formula_name(lozenge_formula(l)).empty());
  EXPECT_THROW(lozenge_formula(7), std::invalid_argument);
}

}  // namespace
}  // namespace lozenge
