#pragma once

#include "lozenge/bigint.hpp"
#include "lozenge/geometry.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

/// L_{n,0..}: number of configurations of l non-overlapping lozenges in the
/// side-n triangle. Trailing zeros are trimmed, so the last stored entry is the
/// maximal packing; at(l) is zero beyond it.
class CountVector {
 public:
  CountVector() = default;
  CountVector(int n, std::vector<BigInt> counts) : n_(n), counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  }

  int n() const { return n_; }
  std::size_t size() const { return counts_.size(); }
  const std::vector<BigInt>& values() const { return counts_; }

  BigInt at(std::int64_t l) const {
    if (l < 0 || static_cast<std::size_t>(l) >= counts_.size()) return 0;
    return counts_[static_cast<std::size_t>(l)];
  }
  const BigInt& operator[](std::size_t l) const { return counts_[l]; }

  // Each lozenge covers two of the n^2 unit triangles.
  std::int64_t capacity() const { return static_cast<std::int64_t>(n_) * n_ / 2; }

  bool operator==(const CountVector&) const = default;

 private:
  int n_ = 0;
  std::vector<BigInt> counts_;
};

inline constexpr int kDefaultBruteForceGuard = 5;

/// Exhaustive selection of internal-edge subsets in which no two removed edges
/// lie on a common unit triangle. Depth-first with conflict pruning.
inline CountVector count_brute_force(int n, int max_n_guard = kDefaultBruteForceGuard) {
  if (n < 1) throw std::invalid_argument("side length must be >= 1, got " + std::to_string(n));
  if (n > max_n_guard) {
    throw std::invalid_argument("brute force at n=" + std::to_string(n) + " scans up to 2^" +
                                std::to_string(matchstick(n - 1)) + " internal-edge subsets; guard is n <= " +
                                std::to_string(max_n_guard));
  }
  const TriGrid grid(n);
  const auto& internal = grid.internal_edges();
  const std::size_t m = internal.size();

  std::vector<int> local(grid.edges().size(), -1);
  for (std::size_t i = 0; i < m; ++i) local[static_cast<std::size_t>(internal[i])] = static_cast<int>(i);

  // Two internal edges conflict when they bound a common face.
  std::vector<std::vector<std::size_t>> conflicts(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (int f : grid.edges()[static_cast<std::size_t>(internal[i])].faces) {
      if (f < 0) continue;
      for (int e : grid.faces()[static_cast<std::size_t>(f)].edges) {
        const int j = local[static_cast<std::size_t>(e)];
        if (j >= 0 && static_cast<std::size_t>(j) != i) conflicts[i].push_back(static_cast<std::size_t>(j));
      }
    }
  }

  std::vector<std::uint64_t> tally(m + 1, 0);
  std::vector<int> blocked(m, 0);
  auto dfs = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
    ++tally[depth];
    for (std::size_t i = from; i < m; ++i) {
      if (blocked[i]) continue;
      for (auto c : conflicts[i]) ++blocked[c];
      self(self, i + 1, depth + 1);
      for (auto c : conflicts[i]) --blocked[c];
    }
  };
  dfs(dfs, 0, 0);

  std::vector<BigInt> counts(tally.begin(), tally.end());
  return CountVector(n, std::move(counts));
}

namespace detail {

// Primes just below 2^62; sums of two residues never overflow 64 bits.
inline constexpr std::array<std::uint64_t, 16> kResiduePrimes{
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL, 4611686018427387761ULL,
    4611686018427387751ULL, 4611686018427387737ULL, 4611686018427387733ULL, 4611686018427387709ULL,
    4611686018427387701ULL, 4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387587ULL,
    4611686018427387461ULL, 4611686018427387421ULL, 4611686018427387409ULL, 4611686018427387329ULL};

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

// Garner reconstruction of the unique value in [0, prod(primes)).
inline BigInt crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> primes) {
  BigInt value = residues[0];
  BigInt modulus = primes[0];
  for (std::size_t k = 1; k < residues.size(); ++k) {
    const std::uint64_t p = primes[k];
    const auto value_mod = static_cast<std::uint64_t>(value % p);
    const auto modulus_mod = static_cast<std::uint64_t>(modulus % p);
    const std::uint64_t diff = (residues[k] + p - value_mod) % p;
    const std::uint64_t t = mul_mod(diff, pow_mod(modulus_mod, p - 2, p), p);
    value += modulus * t;
    modulus *= p;
  }
  return value;
}

/// Broken-profile sweep over faces in (row, slot) order, every coefficient
/// reduced mod p. A lozenge is committed at its first face in sweep order.
///
/// State index = (mask << 1) | h. While row r is swept at up face 2i:
///   bit k < i of mask: down face (r+1, 2k+1) is already covered from above;
///   bit k >= i:        down face (r, 2k+1) is already covered from above;
///   h:                 the current up face is covered by its left neighbour.
/// Row r only touches indices below 2^(r+2).
class ResidueSweep {
 public:
  ResidueSweep(int n, std::size_t width)
      : n_(n), width_(width), states_(std::size_t{1} << (n + 1)), cur_(states_ * width), next_(states_ * width),
        live_(states_), live_next_(states_) {}

  std::vector<std::uint64_t> run(std::uint64_t p) {
    p_ = p;
    std::fill(cur_.begin(), cur_.end(), 0);
    std::fill(live_.begin(), live_.end(), 0);
    cur_[0] = 1;
    live_[0] = 1;
    top_ = 0;

    for (int r = 0; r < n_; ++r) {
      const bool last = r == n_ - 1;
      const std::size_t active = std::size_t{1} << (r + 2);
      for (int i = 0; i < r; ++i) {
        begin_step(active);
        for (std::size_t idx = 0; idx < active; ++idx) {
          if (!live_[idx]) continue;
          const bool h = idx & 1;
          const std::size_t mask = idx >> 1;
          const bool d = (mask >> i) & 1;
          const std::size_t base = mask & ~(std::size_t{1} << i);
          // u: up face pairs with the down face below; dcov: up face pairs right.
          auto emit = [&](std::size_t u, std::size_t placed, bool dcov) {
            const std::size_t nm = base | (u << i);
            add(idx, nm << 1, placed);
            if (!(d || dcov)) add(idx, (nm << 1) | 1, placed + 1);
          };
          emit(0, 0, false);
          if (!h) {
            if (!last) emit(1, 1, false);
            if (!d) emit(0, 1, true);
          }
        }
        end_step(2);
      }
      begin_step(active);
      for (std::size_t idx = 0; idx < active; ++idx) {
        if (!live_[idx]) continue;
        const std::size_t mask = idx >> 1;
        add(idx, mask << 1, 0);
        if (!(idx & 1) && !last) add(idx, (mask | (std::size_t{1} << r)) << 1, 1);
      }
      end_step(1);
    }

    std::vector<std::uint64_t> total(width_, 0);
    for (std::size_t idx = 0; idx < states_; ++idx) {
      if (!live_[idx]) continue;
      for (std::size_t l = 0; l < width_; ++l) total[l] = add_mod(total[l], cur_[idx * width_ + l]);
    }
    return total;
  }

 private:
  std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  void begin_step(std::size_t active) {
    std::fill(next_.begin(), next_.begin() + static_cast<std::ptrdiff_t>(active * width_), 0);
    std::fill(live_next_.begin(), live_next_.begin() + static_cast<std::ptrdiff_t>(active), 0);
  }

  void end_step(std::size_t max_new) {
    std::swap(cur_, next_);
    std::swap(live_, live_next_);
    top_ = std::min(top_ + max_new, width_ - 1);
  }

  void add(std::size_t src, std::size_t dst, std::size_t shift) {
    if (shift >= width_) return;
    const std::uint64_t* from = &cur_[src * width_];
    std::uint64_t* to = &next_[dst * width_ + shift];
    const std::size_t len = std::min(top_ + 1, width_ - shift);
    for (std::size_t l = 0; l < len; ++l) to[l] = add_mod(to[l], from[l]);
    live_next_[dst] = 1;
  }

  int n_;
  std::size_t width_;
  std::size_t states_;
  std::vector<std::uint64_t> cur_, next_;
  std::vector<char> live_, live_next_;
  std::uint64_t p_ = 0;
  std::size_t top_ = 0;
};

// Exact L_{n,0..max_l}. L_{n,l} <= C(M_{n-1}, l) bounds every coefficient, which
// fixes how many primes the reconstruction needs.
inline std::vector<BigInt> profile_dp(int n, std::int64_t max_l) {
  if (n < 1) throw std::invalid_argument("side length must be >= 1, got " + std::to_string(n));
  if (n > 30) throw std::invalid_argument("profile sweep supports n <= 30, got " + std::to_string(n));
  const std::int64_t max_packing = tri(n - 1);  // each lozenge covers exactly one down face
  const std::int64_t top = std::min(max_l, max_packing);
  const auto width = static_cast<std::size_t>(top + 1);

  BigInt bound = 0;
  for (std::int64_t l = 0; l <= top; ++l) bound = std::max(bound, binomial(matchstick(n - 1), l));
  std::size_t prime_count = 1;
  for (BigInt product = kResiduePrimes[0]; product <= bound; ++prime_count) {
    if (prime_count == kResiduePrimes.size()) throw std::runtime_error("not enough residue primes for n");
    product *= kResiduePrimes[prime_count];
  }

  ResidueSweep sweep(n, width);
  std::vector<std::vector<std::uint64_t>> residues;
  for (std::size_t k = 0; k < prime_count; ++k) residues.push_back(sweep.run(kResiduePrimes[k]));

  std::vector<BigInt> out(width);
  std::vector<std::uint64_t> column(prime_count);
  const std::span<const std::uint64_t> primes(kResiduePrimes.data(), prime_count);
  for (std::size_t l = 0; l < width; ++l) {
    for (std::size_t k = 0; k < prime_count; ++k) column[k] = residues[k][l];
    out[l] = crt_reconstruct(column, primes);
  }
  return out;
}

}  // namespace detail

/// Every L_{n,l} in one profile sweep.
inline CountVector count_dp(int n) { return CountVector(n, detail::profile_dp(n, tri(n - 1))); }

/// L_{n,0..max_l} only; much cheaper for large n and small l.
inline std::vector<BigInt> count_dp_prefix(int n, std::int64_t max_l) {
  if (max_l < 0) throw std::invalid_argument("max_l must be >= 0");
  auto v = detail::profile_dp(n, max_l);
  v.resize(static_cast<std::size_t>(max_l + 1), 0);
  return v;
}

inline BigInt row_sum(const CountVector& v) {
  BigInt s = 0;
  for (const auto& c : v.values()) s += c;
  return s;
}

inline std::int64_t max_lozenge_count(const CountVector& v) { return static_cast<std::int64_t>(v.size()) - 1; }

}  // namespace lozenge
