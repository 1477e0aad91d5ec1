#ifndef ABCENSUS_ARITH_HPP
#define ABCENSUS_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "abcensus/errors.hpp"
#include "abcensus/int128.hpp"

namespace abcensus::arith {

/// Prime power factorization of a 64-bit natural.
/// factors are (prime, exponent) pairs sorted by prime; empty for value 1.
struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, unsigned>> factors;

  u64 num_divisors() const {
    u64 d = 1;
    for (const auto& [p, a] : factors) d *= a + 1;
    return d;
  }
};

inline constexpr u64 kDefaultDivisorCap = 1'000'000;

// Deterministic for all 64-bit inputs (Miller-Rabin with a fixed base set).
bool is_prime(u64 n);

// Trial division by a small wheel, then Brent's rho with a seed derived
// from n so output is reproducible. Total over [1, 2^64).
Factorization factorize(u64 n);

// All divisors of n in ascending order. Throws CapExceeded if the divisor
// count exceeds cap.
std::vector<u64> divisors(const Factorization& f, u64 cap = kDefaultDivisorCap);
std::vector<u64> divisors(u64 n, u64 cap = kDefaultDivisorCap);

inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

// lcm of a nonempty list; throws OverflowError if it leaves 64 bits.
u64 lcm(std::span<const u64> values);
u64 lcm(u64 a, u64 b);

// Mobius function: 0 on non-squarefree n, else (-1)^(#prime factors).
int moebius(const Factorization& f);
int moebius(u64 n);

u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 n);

// Jordan totient phi_r(n) = n^r prod_{p|n} (1 - 1/p^r), exact.
u128 jordan_phi(unsigned r, const Factorization& f);
u128 jordan_phi(unsigned r, u64 n);

/// Reduced fraction of signed 128-bit integers, denominator > 0.
struct Rational {
  i128 num = 0;
  i128 den = 1;

  Rational() = default;
  Rational(i128 n, i128 d);

  static Rational integer(i128 n) { return Rational(n, 1); }

  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  bool is_integral() const { return den == 1; }
  std::string str() const;
};

}  // namespace abcensus::arith

#endif  // ABCENSUS_ARITH_HPP
