#ifndef ABCENSUS_SPECTRA_HPP
#define ABCENSUS_SPECTRA_HPP

#include <map>
#include <span>
#include <vector>

#include "abcensus/arith.hpp"

namespace abcensus::spectra {

using arith::Factorization;
using arith::Rational;

/// Work caps for the counting formulas. Overridable from the CLI and the
/// ABCENSUS_* environment variables.
struct Caps {
  u64 spectrum = 10'000;         // divisor count of the exponent
  u64 convolution = 10'000'000;  // product of per-component divisor counts
};

/// The direct product C_{n1} x ... x C_{nr}, orders as given (order-sensitive).
struct GroupSpec {
  std::vector<u64> orders;
  u64 exponent = 1;  // lcm of the orders
  u128 size = 1;     // product of the orders

  static GroupSpec of(std::vector<u64> orders);
};

struct SpectrumEntry {
  u64 delta = 1;
  u128 order_count = 0;   // o_delta: elements of order delta
  u128 cyclic_count = 0;  // c_delta = o_delta / phi(delta)
};

/// delta -> (o_delta, c_delta) over every divisor delta of the exponent,
/// ascending.
struct OrderSpectrum {
  GroupSpec spec;
  std::vector<SpectrumEntry> entries;

  const SpectrumEntry* find(u64 delta) const;
};

/// A p-group C_{p^l1} x ... x C_{p^lk} with 1 <= l1 <= ... <= lk.
struct PGroupType {
  u64 p;
  std::vector<unsigned> lambdas;

  static PGroupType of(u64 p, std::vector<unsigned> lambdas);
};

// Number of elements of order delta via the Mobius-weighted gcd sum.
// Requires delta | spec.exponent.
u128 order_count_moebius(const GroupSpec& spec, u64 delta);

// Same count via the lcm-constrained phi convolution; the cross-check path.
u128 order_count_lcm_convolution(const GroupSpec& spec, u64 delta,
                                 const Caps& caps = {});

// Full order spectrum over all divisors of the exponent (Mobius path).
OrderSpectrum full_spectrum(const GroupSpec& spec, const Caps& caps = {});

// Total number of cyclic subgroups; phi-product / phi(lcm) sum over the
// divisor grid, accumulated as exact rationals and asserted integral.
u128 cyclic_total(const GroupSpec& spec, const Caps& caps = {});

// Rank-2 specialization: sum of phi(gcd(d1,d2)) over the divisor grid.
u128 cyclic_total_rank2(u64 n1, u64 n2, const Caps& caps = {});

// Cyclic subgroups of order p^nu in C_{p^a1} x ... x C_{p^ar}.
// Requires 1 <= nu <= max(a_i).
u128 cyclic_count_prime_power(u64 p, std::span<const unsigned> exponents,
                              unsigned nu);

// Same count from the partition-type formula; returns 0 for nu past the
// largest lambda.
u128 cyclic_count_pgroup_type(const PGroupType& t, unsigned nu);

// Arithmetic mean of element orders, as a reduced rational.
Rational average_order(const GroupSpec& spec, const Caps& caps = {});

// Sum of phi(d1)...phi(dr) over ordered r-tuples of divisors of delta with
// lcm exactly delta; equals jordan_phi(r, delta).
u128 von_sterneck(unsigned r, u64 delta, const Caps& caps = {});

// Total number of subgroups (all, not just cyclic) of C_{n1} x C_{n2}:
// sum of gcd(d1,d2) over the divisor grid.
u128 subgroup_total_rank2(u64 n1, u64 n2, const Caps& caps = {});

// For coprime supports, the unique (a, b) with a|n, b|m, a*b = delta.
// Throws DomainError when no such decomposition exists.
std::pair<u64, u64> split_divisor(u64 delta, u64 n, u64 m);

}  // namespace abcensus::spectra

#endif  // ABCENSUS_SPECTRA_HPP
