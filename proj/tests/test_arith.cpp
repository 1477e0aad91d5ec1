#include "abcensus/arith.hpp"

#include <numeric>
#include <random>

#include <doctest.h>

using namespace abcensus;
using namespace abcensus::arith;

namespace {

// Independent brute-force oracles; kept free of the library's own paths.

std::vector<u64> divisors_by_scan(u64 n) {
  std::vector<u64> ds;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

u64 phi_by_count(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// Count of pairs (i, j) mod n with gcd(i, j, n) = 1.
u64 jordan2_by_count(u64 n) {
  u64 count = 0;
  for (u64 i = 0; i < n; ++i)
    for (u64 j = 0; j < n; ++j)
      if (std::gcd(std::gcd(i, j), n) == 1) ++count;
  return count;
}

// Lucas-Lehmer test for M_p = 2^p - 1, p odd prime.
bool lucas_lehmer(unsigned p) {
  const u64 m = (u64(1) << p) - 1;
  u64 s = 4;
  for (unsigned i = 0; i < p - 2; ++i)
    s = static_cast<u64>((static_cast<u128>(s) * s + m - 2) % m);
  return s == 0;
}

}  // namespace

TEST_CASE("factorize basics") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).value == 1);

  auto f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == std::pair<u64, unsigned>{2, 2});
  CHECK(f12.factors[1] == std::pair<u64, unsigned>{3, 1});
  CHECK(f12.num_divisors() == 6);
}

TEST_CASE("factorize recognizes the Mersenne prime 2^61-1") {
  REQUIRE(lucas_lehmer(61));  // independent certificate
  const u64 m61 = (u64(1) << 61) - 1;
  auto f = factorize(m61);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == m61);
  CHECK(f.factors[0].second == 1);
  CHECK(is_prime(m61));
}

TEST_CASE("factorize round-trips on random 64-bit inputs") {
  std::mt19937_64 rng(20120423);
  for (int i = 0; i < 60; ++i) {
    const u64 n = rng() | 1;  // odd keeps rho busy
    auto f = factorize(n);
    u128 product = 1;
    u64 prev = 0;
    for (const auto& [p, a] : f.factors) {
      CHECK(p > prev);
      CHECK(is_prime(p));
      prev = p;
      for (unsigned e = 0; e < a; ++e) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  auto d2310 = divisors(2310);
  CHECK(d2310.size() == 32);
  CHECK(d2310 == divisors_by_scan(2310));
  CHECK(d2310.front() == 1);
  CHECK(d2310.back() == 2310);
  CHECK_THROWS_AS(divisors(720720, 20), CapExceeded);
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  const std::vector<u64> v{4, 6, 10};
  CHECK(lcm(v) == 60);
  const std::vector<u64> single{42};
  CHECK(lcm(single) == 42);
  // Two coprime 33-bit values overflow.
  const std::vector<u64> big{(u64(1) << 62) - 1, (u64(1) << 61) - 1};
  CHECK_THROWS_AS(lcm(big), OverflowError);
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == phi_by_count(12));
  CHECK(euler_phi(12) == 4);
  for (u64 p : {2, 3, 5, 7, 97}) CHECK(euler_phi(p) == p - 1);
  for (u64 n : {1, 2, 15, 36, 100, 720}) CHECK(euler_phi(n) == phi_by_count(n));
}

TEST_CASE("jordan_phi") {
  for (u64 n = 1; n <= 50; ++n) CHECK(jordan_phi(1, n) == euler_phi(n));
  CHECK(jordan_phi(2, 2) == 3);
  CHECK(jordan_phi(2, 2) == jordan2_by_count(2));
  CHECK(jordan_phi(2, 6) == 24);
  CHECK(jordan_phi(2, 6) == jordan2_by_count(6));
  for (u64 n = 1; n <= 30; ++n) CHECK(jordan_phi(2, n) == jordan2_by_count(n));
}

TEST_CASE("divisor sum identities up to 10^4") {
  for (u64 n = 1; n <= 10000; ++n) {
    auto f = factorize(n);
    u64 phi_sum = 0;
    int mu_sum = 0;
    for (u64 d : divisors(f)) {
      phi_sum += euler_phi(d);
      mu_sum += moebius(d);
    }
    CHECK(phi_sum == n);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("phi and jordan_phi are multiplicative on coprime pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<u64> dist(1, 1'000'000);
  int done = 0;
  while (done < 200) {
    const u64 a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++done;
    CHECK(static_cast<u128>(euler_phi(a)) * euler_phi(b) ==
          euler_phi(a * b));
    for (unsigned r = 2; r <= 3; ++r)
      CHECK(checked_mul(jordan_phi(r, a), jordan_phi(r, b)) ==
            jordan_phi(r, a * b));
  }
}

TEST_CASE("phi gcd-lcm identity up to 300") {
  for (u64 d1 = 1; d1 <= 300; ++d1)
    for (u64 d2 = 1; d2 <= 300; ++d2)
      CHECK(static_cast<u128>(euler_phi(d1)) * euler_phi(d2) ==
            static_cast<u128>(euler_phi(std::gcd(d1, d2))) *
                euler_phi(std::lcm(d1, d2)));
}

TEST_CASE("rational arithmetic") {
  Rational half(1, 2), third(2, 6);
  CHECK(third.num == 1);
  CHECK(third.den == 3);
  CHECK((half + third) == Rational(5, 6));
  CHECK((half * third) == Rational(1, 6));
  CHECK(Rational(-4, -8) == half);
  CHECK(Rational(3, -2).str() == "-3/2");
  CHECK(Rational(7, 1).str() == "7");
  CHECK(Rational(14, 2).is_integral());
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}
