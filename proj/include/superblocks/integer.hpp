#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace superblocks {

using Integer = boost::multiprecision::cpp_int;

/// base^exponent for a non-negative exponent.
inline Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Least non-negative residue of a modulo b (b > 0).
inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += b;
  return r;
}

/// p-adic valuation; std::nullopt stands for v_p(0) = infinity.
inline std::optional<int> valuation(Integer x, const Integer& p) {
  if (x == 0) return std::nullopt;
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace superblocks
