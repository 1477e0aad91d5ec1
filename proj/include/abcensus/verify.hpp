#ifndef ABCENSUS_VERIFY_HPP
#define ABCENSUS_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "abcensus/oracle.hpp"
#include "abcensus/spectra.hpp"

namespace abcensus::verify {

/// One identity checked on one input, with both sides rendered exactly.
struct PropertyReport {
  std::string identity;
  std::string input;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Summary {
  u64 checked = 0;
  u64 failed = 0;

  bool all_pass() const { return failed == 0; }
  Summary& operator+=(const Summary& o) {
    checked += o.checked;
    failed += o.failed;
    return *this;
  }
};

// Called for every failing case (passing cases are only counted).
using ReportSink = std::function<void(const PropertyReport&)>;

struct Options {
  u64 max_n = 30;        // largest cyclic order per component
  unsigned max_r = 4;    // largest rank where applicable
  u64 max_order = 5000;  // largest group size swept by the oracle
  u64 seed = 0;          // PRNG seed for randomized suites
  spectra::Caps caps;
  oracle::OracleCaps oracle_caps;
};

// Mobius form vs lcm-convolution form of the order count, exhaustive over
// r <= 3, n_i <= max_n, product <= 20000, every delta | exponent.
Summary forms_agree(const Options& opt, const ReportSink& sink);

// Formula spectrum vs element-sweep spectrum, cyclic totals vs subgroup
// enumeration, and the average order vs the spectrum mean. Exhaustive over
// r <= 3, n_i <= 20 under the oracle cap, plus 200 random specs.
Summary oracle_equivalence(const Options& opt, const ReportSink& sink);

// Product laws for c, c_delta (via split_divisor), and A over 500 random
// componentwise-coprime pairs, plus the primary-component factorization.
Summary multiplicativity(const Options& opt, const ReportSink& sink);

// o_delta(n,...,n) = phi_r(delta) for delta | n.
Summary jordan(const Options& opt, const ReportSink& sink);

// von Sterneck sum equals phi_r(delta) for delta <= 200, r <= max_r.
Summary von_sterneck(const Options& opt, const ReportSink& sink);

// Partition-type formula vs prime-power formula vs spectrum, with an
// element-sweep cross-check where the group fits the oracle cap.
Summary pgroup_reduction(const Options& opt, const ReportSink& sink);

// Rank-2 gcd-sum identities and the all-subgroup count vs enumeration.
Summary rank2_subgroups(const Options& opt, const ReportSink& sink);

// All of the above.
Summary all(const Options& opt, const ReportSink& sink);

// Suite dispatch by CLI name; throws ParseError on unknown names.
Summary run_suite(const std::string& name, const Options& opt,
                  const ReportSink& sink);

std::vector<std::string> suite_names();

}  // namespace abcensus::verify

#endif  // ABCENSUS_VERIFY_HPP
