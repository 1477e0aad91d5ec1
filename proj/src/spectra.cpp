#include "abcensus/spectra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace abcensus::spectra {

namespace {

constexpr i128 kI128Max = std::numeric_limits<i128>::max();

i128 to_signed(u128 v, const char* what) {
  if (v > static_cast<u128>(kI128Max))
    throw OverflowError(std::string(what) + " exceeds signed 128-bit range");
  return static_cast<i128>(v);
}

std::string spec_str(const GroupSpec& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(spec.orders[i]);
  }
  return s;
}

// Row-major odometer over a list of divisor lists. Calls fn with the
// current tuple until exhausted. Throws CapExceeded if the grid is larger
// than cap.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<u64>>& lists, u64 cap,
                    Fn&& fn) {
  u128 cells = 1;
  for (const auto& l : lists) cells = checked_mul(cells, l.size());
  if (cells > cap)
    throw CapExceeded("divisor grid has " + to_string(cells) +
                      " cells, cap is " + std::to_string(cap));
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<u64> tuple(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) tuple[i] = lists[i][0];
  for (;;) {
    fn(std::span<const u64>(tuple));
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++idx[k] < lists[k].size()) {
        tuple[k] = lists[k][idx[k]];
        break;
      }
      idx[k] = 0;
      tuple[k] = lists[k][0];
      if (k == 0) return;
    }
  }
}

// phi over the divisors of a fixed number, memoized per computation.
class PhiCache {
 public:
  u64 operator()(u64 n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    u64 v = arith::euler_phi(n);
    cache_.emplace(n, v);
    return v;
  }

 private:
  std::map<u64, u64> cache_;
};

}  // namespace

GroupSpec GroupSpec::of(std::vector<u64> orders) {
  if (orders.empty()) throw DomainError("group spec needs at least one order");
  for (u64 n : orders)
    if (n == 0) throw DomainError("cyclic order must be >= 1");
  GroupSpec spec;
  spec.exponent = arith::lcm(orders);
  spec.size = 1;
  for (u64 n : orders) spec.size = checked_mul(spec.size, n);
  spec.orders = std::move(orders);
  return spec;
}

const SpectrumEntry* OrderSpectrum::find(u64 delta) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), delta,
      [](const SpectrumEntry& e, u64 d) { return e.delta < d; });
  if (it == entries.end() || it->delta != delta) return nullptr;
  return &*it;
}

PGroupType PGroupType::of(u64 p, std::vector<unsigned> lambdas) {
  if (!arith::is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
  if (lambdas.empty()) throw DomainError("p-group type needs k >= 1");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] < 1) throw DomainError("lambda_i must be >= 1");
    if (i > 0 && lambdas[i] < lambdas[i - 1])
      throw DomainError("lambdas must be nondecreasing");
  }
  return PGroupType{p, std::move(lambdas)};
}

u128 order_count_moebius(const GroupSpec& spec, u64 delta) {
  if (delta == 0 || spec.exponent % delta != 0)
    throw DomainError(std::to_string(delta) + " does not divide the exponent " +
                      std::to_string(spec.exponent) + " of " + spec_str(spec));
  i128 sum = 0;
  for (u64 e : arith::divisors(delta)) {
    int mu = arith::moebius(delta / e);
    if (mu == 0) continue;
    u128 term = 1;
    for (u64 n : spec.orders) term = checked_mul(term, arith::gcd(e, n));
    i128 signed_term = to_signed(term, "gcd product");
    sum = checked_add(sum, mu > 0 ? signed_term : -signed_term);
  }
  if (sum < 0) throw Error("internal: negative order count");
  return static_cast<u128>(sum);
}

u128 order_count_lcm_convolution(const GroupSpec& spec, u64 delta,
                                 const Caps& caps) {
  if (delta == 0 || spec.exponent % delta != 0)
    throw DomainError(std::to_string(delta) + " does not divide the exponent " +
                      std::to_string(spec.exponent) + " of " + spec_str(spec));
  // Only divisors of gcd(n_i, delta) can appear in a tuple with lcm delta.
  std::vector<std::vector<u64>> lists;
  lists.reserve(spec.orders.size());
  for (u64 n : spec.orders)
    lists.push_back(arith::divisors(arith::gcd(n, delta)));
  PhiCache phi;
  u128 sum = 0;
  for_each_tuple(lists, caps.convolution, [&](std::span<const u64> tuple) {
    if (arith::lcm(tuple) != delta) return;
    u128 prod = 1;
    for (u64 d : tuple) prod = checked_mul(prod, phi(d));
    sum = checked_add(sum, prod);
  });
  return sum;
}

OrderSpectrum full_spectrum(const GroupSpec& spec, const Caps& caps) {
  OrderSpectrum result;
  result.spec = spec;
  for (u64 delta : arith::divisors(spec.exponent, caps.spectrum)) {
    SpectrumEntry entry;
    entry.delta = delta;
    entry.order_count = order_count_moebius(spec, delta);
    u64 phi = arith::euler_phi(delta);
    if (entry.order_count % phi != 0)
      throw Error("internal: phi(" + std::to_string(delta) +
                  ") does not divide o_delta for " + spec_str(spec));
    entry.cyclic_count = entry.order_count / phi;
    result.entries.push_back(entry);
  }
  return result;
}

u128 cyclic_total(const GroupSpec& spec, const Caps& caps) {
  std::vector<std::vector<u64>> lists;
  lists.reserve(spec.orders.size());
  for (u64 n : spec.orders) lists.push_back(arith::divisors(n));
  PhiCache phi;
  Rational sum;
  for_each_tuple(lists, caps.convolution, [&](std::span<const u64> tuple) {
    u128 num = 1;
    for (u64 d : tuple) num = checked_mul(num, phi(d));
    u64 den = phi(arith::lcm(tuple));
    sum = sum + Rational(to_signed(num, "phi product"), den);
  });
  if (!sum.is_integral() || sum.num < 0)
    throw Error("internal: cyclic subgroup total is not a natural number");
  return static_cast<u128>(sum.num);
}

u128 cyclic_total_rank2(u64 n1, u64 n2, const Caps& caps) {
  std::vector<std::vector<u64>> lists = {arith::divisors(n1),
                                         arith::divisors(n2)};
  PhiCache phi;
  u128 sum = 0;
  for_each_tuple(lists, caps.convolution, [&](std::span<const u64> t) {
    sum = checked_add(sum, phi(arith::gcd(t[0], t[1])));
  });
  return sum;
}

u128 cyclic_count_prime_power(u64 p, std::span<const unsigned> exponents,
                              unsigned nu) {
  if (!arith::is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
  if (exponents.empty()) throw DomainError("need at least one exponent");
  unsigned max_a = 0;
  for (unsigned a : exponents) {
    if (a < 1) throw DomainError("exponents must be >= 1");
    max_a = std::max(max_a, a);
  }
  if (nu < 1 || nu > max_a)
    throw DomainError("nu = " + std::to_string(nu) +
                      " is outside [1, max exponent]");
  unsigned hi = 0, lo = 0;
  for (unsigned a : exponents) {
    hi += std::min(nu, a);
    lo += std::min(nu - 1, a);
  }
  u128 numerator = checked_pow(p, hi) - checked_pow(p, lo);
  u128 denominator = checked_mul(checked_pow(p, nu - 1), p - 1);
  if (numerator % denominator != 0)
    throw Error("internal: prime-power count division not exact");
  return numerator / denominator;
}

u128 cyclic_count_pgroup_type(const PGroupType& t, unsigned nu) {
  if (nu < 1) throw DomainError("nu must be >= 1");
  const auto& l = t.lambdas;
  const std::size_t k = l.size();
  if (nu > l.back()) return 0;  // no elements of that order
  // j is the unique index with lambda_j < nu <= lambda_{j+1}, lambda_0 = 0.
  std::size_t j = 0;
  while (j < k && l[j] < nu) ++j;
  // Geometric factor (p^(k-j) - 1) / (p - 1).
  u128 geom = 0, pw = 1;
  for (std::size_t t2 = 0; t2 < k - j; ++t2) {
    geom = checked_add(geom, pw);
    pw = checked_mul(pw, t.p);
  }
  unsigned exp = 0;  // lambda_0 + ... + lambda_j + (k - j - 1)(nu - 1)
  for (std::size_t i = 0; i < j; ++i) exp += l[i];
  exp += static_cast<unsigned>(k - j - 1) * (nu - 1);
  return checked_mul(geom, checked_pow(t.p, exp));
}

Rational average_order(const GroupSpec& spec, const Caps& caps) {
  std::vector<std::vector<u64>> lists;
  lists.reserve(spec.orders.size());
  for (u64 n : spec.orders) lists.push_back(arith::divisors(n));
  PhiCache phi;
  u128 weighted = 0;  // sum of phi(d1)...phi(dr) * lcm(d1,...,dr)
  for_each_tuple(lists, caps.convolution, [&](std::span<const u64> tuple) {
    u128 prod = 1;
    for (u64 d : tuple) prod = checked_mul(prod, phi(d));
    weighted = checked_add(weighted, checked_mul(prod, arith::lcm(tuple)));
  });
  return Rational(to_signed(weighted, "order sum"),
                  to_signed(spec.size, "group size"));
}

u128 von_sterneck(unsigned r, u64 delta, const Caps& caps) {
  if (r < 1) throw DomainError("von_sterneck requires r >= 1");
  std::vector<std::vector<u64>> lists(r, arith::divisors(delta));
  PhiCache phi;
  u128 sum = 0;
  for_each_tuple(lists, caps.convolution, [&](std::span<const u64> tuple) {
    if (arith::lcm(tuple) != delta) return;
    u128 prod = 1;
    for (u64 d : tuple) prod = checked_mul(prod, phi(d));
    sum = checked_add(sum, prod);
  });
  return sum;
}

u128 subgroup_total_rank2(u64 n1, u64 n2, const Caps& caps) {
  std::vector<std::vector<u64>> lists = {arith::divisors(n1),
                                         arith::divisors(n2)};
  u128 sum = 0;
  for_each_tuple(lists, caps.convolution, [&](std::span<const u64> t) {
    sum = checked_add(sum, arith::gcd(t[0], t[1]));
  });
  return sum;
}

std::pair<u64, u64> split_divisor(u64 delta, u64 n, u64 m) {
  u64 a = 1, b = 1;
  for (const auto& [p, e] : arith::factorize(delta).factors) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const bool in_n = n % p == 0, in_m = m % p == 0;
    if (in_n && in_m)
      throw DomainError("prime " + std::to_string(p) +
                        " divides both sides; split is not unique");
    if (in_n)
      a *= pe;
    else if (in_m)
      b *= pe;
    else
      throw DomainError("prime " + std::to_string(p) +
                        " of delta divides neither side");
  }
  if (n % a != 0 || m % b != 0)
    throw DomainError("no decomposition delta = a*b with a|" +
                      std::to_string(n) + ", b|" + std::to_string(m));
  return {a, b};
}

}  // namespace abcensus::spectra
