#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lozenge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a nonnegative decimal integer: " + std::string(s));
  }
  return BigInt(std::string(s));
}

// C(top, k); zero when top < k or k < 0 (including negative top).
inline BigInt binomial(const BigInt& top, std::int64_t k) {
  if (k < 0 || top < k) return 0;
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= top - i;
    result /= i + 1;
  }
  return result;
}

inline BigInt binomial(std::int64_t top, std::int64_t k) { return binomial(BigInt(top), k); }

}  // namespace lozenge
