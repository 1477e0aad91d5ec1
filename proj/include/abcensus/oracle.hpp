#ifndef ABCENSUS_ORACLE_HPP
#define ABCENSUS_ORACLE_HPP

#include <map>
#include <vector>

#include "abcensus/spectra.hpp"

namespace abcensus::oracle {

using spectra::GroupSpec;
using spectra::OrderSpectrum;

/// Element enumeration caps; everything here is exhaustive sweep territory.
struct OracleCaps {
  u64 elements = 100'000;  // max group size for element sweeps
  u64 rank2 = 2'000;       // max n1*n2 for all-subgroup enumeration
};

/// A group element as residues (i1,...,ir), 0 <= i_k < n_k.
using Coords = std::vector<u64>;

// Order of an element, computed by both closed forms (the lcm of component
// orders and the n/gcd form) and cross-asserted.
u64 element_order(const GroupSpec& spec, const Coords& coords);

// Exact spectrum by sweeping every element.
OrderSpectrum oracle_spectrum(const GroupSpec& spec, const OracleCaps& caps = {});

struct CyclicSubgroupCount {
  std::map<u64, u64> by_order;
  u64 total = 0;
};

// Enumerates <x> for every element, dedupes by canonical element list.
CyclicSubgroupCount oracle_cyclic_subgroups(const GroupSpec& spec,
                                            const OracleCaps& caps = {});

// All subgroups of C_{n1} x C_{n2} by joining pairs of cyclic subgroups
// (every subgroup of a rank-2 abelian group is 2-generated).
u64 oracle_all_subgroups_rank2(u64 n1, u64 n2, const OracleCaps& caps = {});

}  // namespace abcensus::oracle

#endif  // ABCENSUS_ORACLE_HPP
