#ifndef ABCENSUS_INT128_HPP
#define ABCENSUS_INT128_HPP

#include <cstdint>
#include <string>

#include "abcensus/errors.hpp"

namespace abcensus {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Checked 128-bit arithmetic. All counts and intermediate products are
// held in 128 bits; wrapping is reported, never silent.

inline u128 checked_add(u128 a, u128 b) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("u128 add overflow");
  return r;
}

inline u128 checked_mul(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("u128 mul overflow");
  return r;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("i128 add overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("i128 mul overflow");
  return r;
}

// base^exp with overflow detection.
inline u128 checked_pow(u128 base, unsigned exp) {
  u128 r = 1;
  while (exp--) r = checked_mul(r, base);
  return r;
}

std::string to_string(u128 v);
std::string to_string(i128 v);

}  // namespace abcensus

#endif  // ABCENSUS_INT128_HPP
