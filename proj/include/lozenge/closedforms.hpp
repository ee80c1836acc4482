#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/geometry.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lozenge {

enum class FormulaId {
  L0,
  L1,
  L2,
  L3,
  L4,
  L5conj,
  L6conj,
  BinoBound,
  GF_L1,
  BinTrans_L2,
  BinTrans_L3,
  RankSumV,
  RankSum36,
  RankSum35,
  RankSum6,
};

inline constexpr std::array<FormulaId, 15> kAllFormulas{
    FormulaId::L0,          FormulaId::L1,          FormulaId::L2,        FormulaId::L3,
    FormulaId::L4,          FormulaId::L5conj,      FormulaId::L6conj,    FormulaId::BinoBound,
    FormulaId::GF_L1,       FormulaId::BinTrans_L2, FormulaId::BinTrans_L3, FormulaId::RankSumV,
    FormulaId::RankSum36,   FormulaId::RankSum35,   FormulaId::RankSum6};

inline std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::L0: return "L0";
    case FormulaId::L1: return "L1";
    case FormulaId::L2: return "L2";
    case FormulaId::L3: return "L3";
    case FormulaId::L4: return "L4";
    case FormulaId::L5conj: return "L5conj";
    case FormulaId::L6conj: return "L6conj";
    case FormulaId::BinoBound: return "BinoBound";
    case FormulaId::GF_L1: return "GF_L1";
    case FormulaId::BinTrans_L2: return "BinTrans_L2";
    case FormulaId::BinTrans_L3: return "BinTrans_L3";
    case FormulaId::RankSumV: return "RankSumV";
    case FormulaId::RankSum36: return "RankSum36";
    case FormulaId::RankSum35: return "RankSum35";
    case FormulaId::RankSum6: return "RankSum6";
  }
  return "?";
}

// Smallest valid n.
inline int formula_min_n(FormulaId id) {
  switch (id) {
    case FormulaId::L3:
    case FormulaId::BinTrans_L3:
    case FormulaId::RankSum36:
    case FormulaId::RankSum35:
    case FormulaId::RankSum6: return 2;
    case FormulaId::L4:
    case FormulaId::L5conj: return 3;
    case FormulaId::L6conj: return 4;
    case FormulaId::GF_L1: return 0;
    default: return 1;
  }
}

// The L-formula for l lozenges, l in [0, 6].
inline FormulaId lozenge_formula(int l) {
  static constexpr std::array<FormulaId, 7> ids{FormulaId::L0, FormulaId::L1,     FormulaId::L2,    FormulaId::L3,
                                                FormulaId::L4, FormulaId::L5conj, FormulaId::L6conj};
  if (l < 0 || l > 6) throw std::invalid_argument("closed forms exist for l <= 6 only, got l=" + std::to_string(l));
  return ids[static_cast<std::size_t>(l)];
}

/// prefactor * product of integer polynomials, coefficients highest degree
/// first so each entry reads like its printed form.
struct FactoredPolynomial {
  Rational prefactor;
  std::vector<std::vector<std::int64_t>> factors;

  Rational operator()(std::int64_t n) const {
    Rational v = prefactor;
    for (const auto& f : factors) {
      BigInt acc = 0;
      for (auto c : f) acc = acc * n + c;
      v *= acc;
    }
    return v;
  }
};

namespace detail {

inline const FactoredPolynomial& factored_form(FormulaId id) {
  using P = FactoredPolynomial;
  static const P l1{Rational(3, 2), {{1, 0}, {1, -1}}};
  static const P l2{Rational(3, 8), {{1, -1}, {1, -2}, {3, 3, -4}}};
  static const P l3{Rational(1, 16), {{1, -2}, {9, -9, -81, 81, 160, -192}}};
  static const P l4{Rational(3, 128), {{1, -2}, {1, -3}, {9, 9, -135, -81, 670, 104, -1216}}};
  static const P l5{Rational(3, 1280),
                    {{1, -3}, {1, 3}, {27, -135, -387, 2835, -168, -18732, 19568, 36992, -56320}}};
  // Linear coefficient +19678080 fixed by interpolating count_dp at n = 4..16.
  static const P l6{Rational(1, 5120),
                    {{81, -486, -2835, 21870, 26775, -384786, 131751, 3275730, -3798716, -13254088, 22481984,
                      19678080, -42024960}}};
  static const P v{Rational(3), {{1, -1}, {1, -1}}};
  static const P r36{Rational(3), {{6, -11}, {1, -2}}};
  static const P r35{Rational(3, 2), {{1, -2}, {10, -20, -47, 95}}};
  static const P r6{Rational(3, 8), {{1, -2}, {9, -18, -96, 198, 235, -520}}};
  switch (id) {
    case FormulaId::L1: return l1;
    case FormulaId::L2: return l2;
    case FormulaId::L3: return l3;
    case FormulaId::L4: return l4;
    case FormulaId::L5conj: return l5;
    case FormulaId::L6conj: return l6;
    case FormulaId::RankSumV: return v;
    case FormulaId::RankSum36: return r36;
    case FormulaId::RankSum35: return r35;
    case FormulaId::RankSum6: return r6;
    default: throw std::logic_error("no factored form for " + std::string(formula_name(id)));
  }
}

// Coefficients of C(n, k), k = 0, 1, ...
inline const std::vector<std::int64_t>& binomial_basis(FormulaId id) {
  static const std::vector<std::int64_t> l2{-3, 3, -3, 27, 27};
  static const std::vector<std::int64_t> l3{24, -22, 20, 0, 378, 810, 405};
  if (id == FormulaId::BinTrans_L2) return l2;
  if (id == FormulaId::BinTrans_L3) return l3;
  throw std::invalid_argument("no binomial-sum form for " + std::string(formula_name(id)));
}

inline BigInt require_integral(const Rational& v, FormulaId id, std::int64_t n) {
  if (boost::multiprecision::denominator(v) != 1) {
    throw std::logic_error(std::string(formula_name(id)) + " at n=" + std::to_string(n) +
                           " does not reduce to an integer");
  }
  return boost::multiprecision::numerator(v);
}

inline void require_domain(FormulaId id, std::int64_t n) {
  if (n < formula_min_n(id)) {
    throw std::domain_error(std::string(formula_name(id)) + " is valid for n >= " +
                            std::to_string(formula_min_n(id)) + ", got n=" + std::to_string(n));
  }
}

}  // namespace detail

/// First `count` power-series coefficients of 3x^2 / (1-x)^3, by series division.
inline std::vector<BigInt> gf_L1_coefficients(std::size_t count) {
  const std::array<std::int64_t, 3> numerator{0, 0, 3};
  const std::array<std::int64_t, 4> denominator{1, -3, 3, -1};
  std::vector<BigInt> q(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigInt acc = k < numerator.size() ? numerator[k] : 0;
    for (std::size_t j = 1; j < denominator.size() && j <= k; ++j) acc -= denominator[j] * q[k - j];
    q[k] = acc;  // denominator[0] == 1
  }
  return q;
}

inline BigInt binomial_upper_bound(std::int64_t n, std::int64_t l) {
  if (n < 1) throw std::domain_error("binomial bound needs n >= 1, got n=" + std::to_string(n));
  if (l < 0) throw std::domain_error("binomial bound needs l >= 0, got l=" + std::to_string(l));
  return binomial(matchstick(n - 1), l);
}

/// Exact value of a closed form at n. Out-of-domain n throws std::domain_error;
/// a non-integral evaluation throws std::logic_error.
inline BigInt eval_formula(FormulaId id, std::int64_t n) {
  detail::require_domain(id, n);
  switch (id) {
    case FormulaId::L0: return 1;
    case FormulaId::BinoBound:
      throw std::invalid_argument("BinoBound depends on l; use binomial_upper_bound(n, l)");
    case FormulaId::GF_L1: return gf_L1_coefficients(static_cast<std::size_t>(n) + 1).back();
    case FormulaId::BinTrans_L2:
    case FormulaId::BinTrans_L3: {
      const auto& coeffs = detail::binomial_basis(id);
      BigInt acc = 0;
      for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * binomial(n, static_cast<std::int64_t>(k));
      return acc;
    }
    default: {
      const BigInt v = detail::require_integral(detail::factored_form(id)(n), id, n);
      if (v < 0) throw std::logic_error(std::string(formula_name(id)) + " is negative at n=" + std::to_string(n));
      return v;
    }
  }
}

inline BigInt eval_rank_sum(FormulaId id, std::int64_t n) {
  switch (id) {
    case FormulaId::RankSumV:
    case FormulaId::RankSum36:
    case FormulaId::RankSum35:
    case FormulaId::RankSum6: return eval_formula(id, n);
    default: throw std::invalid_argument(std::string(formula_name(id)) + " is not a rank sum");
  }
}

/// C(M_{n-1}, 4) minus the three l = 4 rank sums.
inline BigInt l4_from_rank_sums(std::int64_t n) {
  return binomial_upper_bound(n, 4) -
         (eval_rank_sum(FormulaId::RankSum36, n) + eval_rank_sum(FormulaId::RankSum35, n) +
          eval_rank_sum(FormulaId::RankSum6, n));
}

/// The l = 5, 6 conjectures in their bracketed form
/// C(M,l) - [3(n-1)^2 C(M-2, l-2) - q(n)/d].
inline BigInt conjecture_bracket_form(int l, std::int64_t n) {
  std::vector<std::int64_t> q;
  std::int64_t d = 1;
  FormulaId id;
  if (l == 5) {
    id = FormulaId::L5conj;
    q = {63, -315, 60, 1845, -2031, -3102, 4704};
    d = 4;
  } else if (l == 6) {
    id = FormulaId::L6conj;
    q = {153, -918, -90, 9828, -10851, -41206, 69420, 61472, -131088};
    d = 16;
  } else {
    throw std::invalid_argument("bracketed conjecture exists for l = 5, 6 only");
  }
  detail::require_domain(id, n);
  const BigInt m = matchstick(n - 1);
  BigInt qn = 0;
  for (auto c : q) qn = qn * n + c;
  const Rational inner = Rational(3 * (n - 1) * (n - 1)) * binomial(m - 2, l - 2) - Rational(qn, d);
  return detail::require_integral(Rational(binomial(m, l)) - inner, id, n);
}

struct TransformCheck {
  std::int64_t n = 0;
  BigInt binomial_form;
  BigInt product_form;
  bool equal = false;
};

/// Compares the binomial-sum and product forms for every valid n <= n_max.
inline std::vector<TransformCheck> binomial_transform_check(FormulaId id, std::int64_t n_max) {
  FormulaId product;
  if (id == FormulaId::BinTrans_L2) {
    product = FormulaId::L2;
  } else if (id == FormulaId::BinTrans_L3) {
    product = FormulaId::L3;
  } else {
    throw std::invalid_argument(std::string(formula_name(id)) + " is not a binomial transform");
  }
  std::vector<TransformCheck> out;
  for (std::int64_t n = formula_min_n(id); n <= n_max; ++n) {
    TransformCheck c{n, eval_formula(id, n), eval_formula(product, n), false};
    c.equal = c.binomial_form == c.product_form;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lozenge
