// Acceptance suite: exact identity and oracle-equivalence checks, one
// pass/fail line per criterion. argv[1] is the CLI binary for the
// end-to-end criterion.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "abcensus/verify.hpp"

using namespace abcensus;

namespace {

int g_failures = 0;
std::string g_binary;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  if (!pass) ++g_failures;
}

verify::ReportSink printing_sink(u64& failed_here) {
  return [&failed_here](const verify::PropertyReport& r) {
    ++failed_here;
    if (failed_here <= 5)
      std::cout << "  counterexample " << r.identity << " " << r.input
                << ": lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
  };
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  FILE* pipe = popen((g_binary + " " + args + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  verify::Options opt;
  opt.seed = 42;

  {
    u64 failed = 0;
    auto s = verify::forms_agree(opt, printing_sink(failed));
    report("criterion-1 theorem-2-form-agreement", s.all_pass(),
           "checked=" + std::to_string(s.checked) +
               " failed=" + std::to_string(s.failed));
  }

  // Criterion 2 (oracle equivalence) and the first half of criterion 7
  // (average order vs spectrum) come from the same sweep.
  {
    u64 failed = 0;
    verify::Summary spectrum_sum, average_sum;
    auto sink = printing_sink(failed);
    auto split = [&](const verify::PropertyReport& r) {
      (r.identity == "average-order-vs-spectrum" ? average_sum : spectrum_sum)
          .failed++;
      sink(r);
    };
    auto total = verify::oracle_equivalence(opt, split);
    report("criterion-2 oracle-equivalence", spectrum_sum.failed == 0,
           "checked=" + std::to_string(total.checked) +
               " failed=" + std::to_string(spectrum_sum.failed));
    report("criterion-7a average-order-vs-spectrum", average_sum.failed == 0,
           "failed=" + std::to_string(average_sum.failed));
  }

  {
    u64 failed = 0;
    auto s = verify::rank2_subgroups(opt, printing_sink(failed));
    report("criterion-3 rank2-identities", s.all_pass(),
           "checked=" + std::to_string(s.checked) +
               " failed=" + std::to_string(s.failed));
  }

  {
    u64 failed = 0;
    auto s = verify::pgroup_reduction(opt, printing_sink(failed));
    report("criterion-4 prime-power-chain", s.all_pass(),
           "checked=" + std::to_string(s.checked) +
               " failed=" + std::to_string(s.failed));
  }

  // Criterion 5 (multiplicativity of c and c_delta) and the second half of
  // criterion 7 (multiplicativity of A) share the 500 random pairs.
  {
    u64 failed = 0;
    verify::Summary c_sum, a_sum;
    auto sink = printing_sink(failed);
    auto split = [&](const verify::PropertyReport& r) {
      (r.identity == "average-order-multiplicative" ? a_sum : c_sum).failed++;
      sink(r);
    };
    auto total = verify::multiplicativity(opt, split);
    report("criterion-5 multiplicativity", c_sum.failed == 0,
           "checked=" + std::to_string(total.checked) +
               " failed=" + std::to_string(c_sum.failed));
    report("criterion-7b average-order-multiplicative", a_sum.failed == 0,
           "failed=" + std::to_string(a_sum.failed));
  }

  {
    u64 failed = 0;
    auto sj = verify::jordan(opt, printing_sink(failed));
    auto sv = verify::von_sterneck(opt, printing_sink(failed));
    report("criterion-6 jordan-von-sterneck", sj.all_pass() && sv.all_pass(),
           "checked=" + std::to_string(sj.checked + sv.checked) +
               " failed=" + std::to_string(sj.failed + sv.failed));
  }

  if (g_binary.empty()) {
    report("criterion-8 cli-end-to-end", false, "no CLI binary supplied");
  } else {
    auto verify_all = run_cli("verify all --seed 42");
    bool pass = verify_all.exit_code == 0;
    std::string detail = "verify-all-exit=" +
                         std::to_string(verify_all.exit_code);
    const std::string spectrum_golden =
        "delta,o,c\n1,1,1\n2,3,3\n4,4,2\ntotal,8,6\n";
    for (int i = 0; i < 2; ++i) {
      auto r = run_cli("spectrum 4x2 --format csv");
      if (r.exit_code != 0 || r.out != spectrum_golden) {
        pass = false;
        detail += " spectrum-golden-mismatch";
        break;
      }
    }
    auto table_a = run_cli("table s 1..4 1..4 --format csv");
    auto table_b = run_cli("table s 1..4 1..4 --format csv");
    if (table_a.exit_code != 0 || table_a.out != table_b.out ||
        table_a.out.find("2,2,5\n") == std::string::npos) {
      pass = false;
      detail += " table-golden-mismatch";
    }
    auto json_a = run_cli("spectrum 4x2 --format json");
    auto json_b = run_cli("spectrum 4x2 --format json");
    if (json_a.exit_code != 0 || json_a.out != json_b.out) {
      pass = false;
      detail += " json-nondeterministic";
    }
    report("criterion-8 cli-end-to-end", pass, detail);
  }

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
