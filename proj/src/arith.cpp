#include "abcensus/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace abcensus::arith {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic witness set for n < 2^64 (Sinclair).
constexpr std::array<u64, 7> kWitnesses = {2, 325, 9375, 28178, 450775,
                                           9780504, 1795265022};

bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    a %= n;
    if (a == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard's rho. n must be odd composite, not a
// prime power of 2. Constants vary deterministically with n.
u64 brent_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1 + (n % 7);; ++c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      // Backtrack one step at a time.
      do {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

Factorization factorize(u64 n) {
  Factorization f;
  f.value = n;
  if (n == 1) return f;
  std::vector<u64> primes;
  // Strip small primes first; keeps rho off easy inputs.
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  // Trial division up to 10^4 covers everything rho would find slowly.
  for (u64 p = 49; p * p <= n && p < 10000; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(p, 1);
  }
  return f;
}

std::vector<u64> divisors(const Factorization& f, u64 cap) {
  u64 count = f.num_divisors();
  if (count > cap)
    throw CapExceeded("divisor count " + std::to_string(count) + " of " +
                      std::to_string(f.value) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<u64> divs = {1};
  divs.reserve(count);
  for (const auto& [p, a] : f.factors) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= a; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<u64> divisors(u64 n, u64 cap) { return divisors(factorize(n), cap); }

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) throw DomainError("lcm of 0 is undefined here");
  u64 g = std::gcd(a, b);
  u64 q = a / g;
  u64 r;
  if (__builtin_mul_overflow(q, b, &r))
    throw OverflowError("lcm(" + std::to_string(a) + "," + std::to_string(b) +
                        ") exceeds 64 bits");
  return r;
}

u64 lcm(std::span<const u64> values) {
  if (values.empty()) throw DomainError("lcm of empty list");
  u64 r = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) r = lcm(r, values[i]);
  return r;
}

int moebius(const Factorization& f) {
  for (const auto& [p, a] : f.factors)
    if (a >= 2) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(u64 n) { return moebius(factorize(n)); }

u64 euler_phi(const Factorization& f) {
  u64 r = f.value;
  for (const auto& [p, a] : f.factors) r = r / p * (p - 1);
  return r;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u128 jordan_phi(unsigned r, const Factorization& f) {
  if (r == 0) throw DomainError("jordan_phi requires r >= 1");
  // n^r * prod (1 - 1/p^r) = prod p^(r*(a-1)) * (p^r - 1) over p^a || n.
  u128 result = 1;
  for (const auto& [p, a] : f.factors) {
    u128 pr = checked_pow(p, r);
    result = checked_mul(result, pr - 1);
    for (unsigned e = 1; e < a; ++e) result = checked_mul(result, pr);
  }
  return result;
}

u128 jordan_phi(unsigned r, u64 n) { return jordan_phi(r, factorize(n)); }

namespace {
i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rational::Rational(i128 n, i128 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rational Rational::operator+(const Rational& o) const {
  i128 g = gcd128(den, o.den);
  i128 l = checked_mul(den / g, o.den);
  i128 n = checked_add(checked_mul(num, l / den), checked_mul(o.num, l / o.den));
  return Rational(n, l);
}

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce before multiplying to delay overflow.
  i128 g1 = gcd128(num, o.den);
  i128 g2 = gcd128(o.num, den);
  return Rational(checked_mul(num / g1, o.num / g2),
                  checked_mul(den / g2, o.den / g1));
}

std::string Rational::str() const {
  if (den == 1) return to_string(num);
  return to_string(num) + "/" + to_string(den);
}

}  // namespace abcensus::arith
