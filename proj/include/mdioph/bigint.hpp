#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdioph {

/// Arbitrary-precision signed integer used for every equation value.
using BigInt = boost::multiprecision::cpp_int;

/// Exponents (p, q, x, y) stay small; values built from them do not.
using Exponent = std::uint32_t;

/// 2^e as a big integer.
inline BigInt pow2(Exponent e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

inline BigInt ipow(const BigInt& base, Exponent e) {
  return boost::multiprecision::pow(base, e);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Parses a non-negative decimal integer; throws std::invalid_argument on junk.
inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a non-negative decimal integer: " + std::string(text));
  }
  return BigInt(std::string(text));
}

/// Narrowing to uint64 with range check.
inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(UINT64_MAX)) throw std::out_of_range("value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

}  // namespace mdioph
