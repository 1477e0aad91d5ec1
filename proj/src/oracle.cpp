#include "abcensus/oracle.hpp"

#include <algorithm>
#include <set>

namespace abcensus::oracle {

namespace {

u64 check_size(const GroupSpec& spec, u64 cap) {
  if (spec.size > cap)
    throw CapExceeded("group size " + to_string(spec.size) +
                      " exceeds oracle cap " + std::to_string(cap));
  return static_cast<u64>(spec.size);
}

// Mixed-radix decode of a linear element index into residues.
void decode(const GroupSpec& spec, u64 index, Coords& out) {
  out.resize(spec.orders.size());
  for (std::size_t k = spec.orders.size(); k-- > 0;) {
    out[k] = index % spec.orders[k];
    index /= spec.orders[k];
  }
}

u64 encode(const GroupSpec& spec, const Coords& coords) {
  u64 index = 0;
  for (std::size_t k = 0; k < coords.size(); ++k)
    index = index * spec.orders[k] + coords[k];
  return index;
}

}  // namespace

u64 element_order(const GroupSpec& spec, const Coords& coords) {
  if (coords.size() != spec.orders.size())
    throw DomainError("coordinate arity mismatch");
  const u64 n = spec.exponent;
  u64 via_lcm = 1;
  u64 g = n;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const u64 nk = spec.orders[k];
    const u64 ik = coords[k];
    if (ik >= nk) throw DomainError("coordinate out of range");
    via_lcm = arith::lcm(via_lcm, nk / arith::gcd(nk, ik));
    // gcd(g, i_k * n/n_k); reduce the product mod g first so it fits.
    u128 scaled = static_cast<u128>(ik) * (n / nk);
    g = arith::gcd(g, static_cast<u64>(scaled % g));
  }
  const u64 via_gcd = n / g;
  if (via_lcm != via_gcd)
    throw Error("internal: element order formulas disagree");
  return via_lcm;
}

OrderSpectrum oracle_spectrum(const GroupSpec& spec, const OracleCaps& caps) {
  const u64 size = check_size(spec, caps.elements);
  std::map<u64, u128> counts;
  Coords coords;
  for (u64 index = 0; index < size; ++index) {
    decode(spec, index, coords);
    counts[element_order(spec, coords)] += 1;
  }
  OrderSpectrum result;
  result.spec = spec;
  for (u64 delta : arith::divisors(spec.exponent)) {
    spectra::SpectrumEntry entry;
    entry.delta = delta;
    auto it = counts.find(delta);
    entry.order_count = it == counts.end() ? 0 : it->second;
    u64 phi = arith::euler_phi(delta);
    if (entry.order_count % phi != 0)
      throw Error("internal: oracle order count not divisible by phi");
    entry.cyclic_count = entry.order_count / phi;
    result.entries.push_back(entry);
  }
  return result;
}

CyclicSubgroupCount oracle_cyclic_subgroups(const GroupSpec& spec,
                                            const OracleCaps& caps) {
  const u64 size = check_size(spec, caps.elements);
  const std::size_t r = spec.orders.size();
  // Each element generates exactly one cyclic subgroup; an element is a
  // generator of exactly one. Mark generators as we go so every subgroup
  // is produced once, then dedupe by canonical element list as a check.
  std::vector<char> seen(size, 0);
  std::set<std::vector<u64>> canonical;
  CyclicSubgroupCount result;
  Coords x, cur(r, 0);
  for (u64 index = 0; index < size; ++index) {
    if (seen[index]) continue;
    decode(spec, index, x);
    // Walk multiples of x until back at the identity.
    std::vector<u64> member_indices;
    std::fill(cur.begin(), cur.end(), 0);
    do {
      for (std::size_t k = 0; k < r; ++k) {
        cur[k] += x[k];
        if (cur[k] >= spec.orders[k]) cur[k] -= spec.orders[k];
      }
      member_indices.push_back(encode(spec, cur));
    } while (member_indices.back() != 0);
    const u64 order = member_indices.size();
    for (u64 k = 1; k <= order; ++k)
      if (arith::gcd(k, order) == 1) seen[member_indices[k - 1]] = 1;
    std::sort(member_indices.begin(), member_indices.end());
    if (canonical.insert(std::move(member_indices)).second) {
      result.by_order[order] += 1;
      result.total += 1;
    }
  }
  return result;
}

u64 oracle_all_subgroups_rank2(u64 n1, u64 n2, const OracleCaps& caps) {
  if (n1 == 0 || n2 == 0) throw DomainError("orders must be >= 1");
  u128 size = static_cast<u128>(n1) * n2;
  if (size > caps.rank2)
    throw CapExceeded("group size " + to_string(size) +
                      " exceeds rank-2 oracle cap " +
                      std::to_string(caps.rank2));
  const GroupSpec spec = GroupSpec::of({n1, n2});
  // Collect the cyclic subgroups as sorted index lists.
  std::set<std::vector<u64>> cyclic;
  Coords x(2), cur(2);
  for (u64 index = 0; index < size; ++index) {
    decode(spec, index, x);
    std::vector<u64> members;
    cur[0] = cur[1] = 0;
    do {
      cur[0] = (cur[0] + x[0]) % n1;
      cur[1] = (cur[1] + x[1]) % n2;
      members.push_back(cur[0] * n2 + cur[1]);
    } while (members.back() != 0);
    std::sort(members.begin(), members.end());
    cyclic.insert(std::move(members));
  }
  // Every subgroup of a rank-2 abelian group is generated by two elements,
  // so it is the join H1 + H2 of two cyclic subgroups.
  std::vector<std::vector<u64>> cyc(cyclic.begin(), cyclic.end());
  std::set<std::vector<u64>> all;
  std::vector<char> mark(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    for (std::size_t j = i; j < cyc.size(); ++j) {
      std::fill(mark.begin(), mark.end(), 0);
      std::vector<u64> join;
      for (u64 a : cyc[i]) {
        const u64 a1 = a / n2, a2 = a % n2;
        for (u64 b : cyc[j]) {
          const u64 s = ((a1 + b / n2) % n1) * n2 + (a2 + b % n2) % n2;
          if (!mark[s]) {
            mark[s] = 1;
            join.push_back(s);
          }
        }
      }
      std::sort(join.begin(), join.end());
      all.insert(std::move(join));
    }
  }
  return all.size();
}

}  // namespace abcensus::oracle
