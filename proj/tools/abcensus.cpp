// abcensus: element-order spectra and cyclic-subgroup counts of direct
// products of cyclic groups, with a brute-force verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abcensus/oracle.hpp"
#include "abcensus/spectra.hpp"
#include "abcensus/verify.hpp"

namespace {

using namespace abcensus;
using nlohmann::json;

// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error,
// 4 cap exceeded, 5 overflow.
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kParse = 2,
  kDomain = 3,
  kCap = 4,
  kOverflow = 5,
};

u64 parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad " + what + ": '" + s + "'");
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size())
    throw ParseError("bad " + what + ": '" + s + "'");
  return v;
}

// Spec strings are decimal orders joined by 'x', e.g. "4x2x3".
std::vector<u64> parse_spec(const std::string& s) {
  std::vector<u64> orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('x', pos);
    if (next == std::string::npos) next = s.size();
    const u64 n = parse_u64(s.substr(pos, next - pos), "cyclic order");
    if (n == 0) throw ParseError("cyclic orders must be >= 1 in '" + s + "'");
    orders.push_back(n);
    pos = next + 1;
  }
  return orders;
}

struct Range {
  u64 lo = 1, hi = 1;
  u64 count() const { return hi - lo + 1; }
};

// "a..b" inclusive, or a single value "a".
Range parse_range(const std::string& s) {
  const std::size_t dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_u64(s, "range");
  } else {
    r.lo = parse_u64(s.substr(0, dots), "range start");
    r.hi = parse_u64(s.substr(dots + 2), "range end");
  }
  if (r.lo == 0 || r.lo > r.hi)
    throw ParseError("bad range '" + s + "'");
  return r;
}

u64 env_cap(const char* name, u64 fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return parse_u64(v, name);
}

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw Error("cannot open output file " + path);
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

void print_spectrum(std::ostream& os, const spectra::OrderSpectrum& spectrum,
                    const std::string& format) {
  u128 order_sum = 0, cyclic_total = 0;
  for (const auto& e : spectrum.entries) {
    order_sum = checked_add(order_sum, e.order_count);
    cyclic_total = checked_add(cyclic_total, e.cyclic_count);
  }
  if (format == "json") {
    json doc;
    doc["spec"] = spectrum.spec.orders;
    doc["exponent"] = spectrum.spec.exponent;
    doc["entries"] = json::array();
    for (const auto& e : spectrum.entries) {
      doc["entries"].push_back({{"delta", e.delta},
                                {"o", to_string(e.order_count)},
                                {"c", to_string(e.cyclic_count)}});
    }
    doc["totals"] = {{"order_sum", to_string(order_sum)},
                     {"cyclic_total", to_string(cyclic_total)}};
    os << doc.dump(2) << "\n";
  } else {
    os << "delta,o,c\n";
    for (const auto& e : spectrum.entries)
      os << e.delta << "," << to_string(e.order_count) << ","
         << to_string(e.cyclic_count) << "\n";
    os << "total," << to_string(order_sum) << "," << to_string(cyclic_total)
       << "\n";
  }
}

struct TableLayout {
  std::vector<std::string> columns;  // variable column names, value excluded
  std::size_t arity;                 // required number of ranges
};

TableLayout table_layout(const std::string& quantity, std::size_t nranges) {
  if (quantity == "s") return {{"n1", "n2"}, 2};
  if (quantity == "phi_r") return {{"r", "n"}, 2};
  std::vector<std::string> cols;
  if (quantity == "c" || quantity == "A") {
    for (std::size_t i = 1; i <= nranges; ++i)
      cols.push_back("n" + std::to_string(i));
    return {cols, nranges};
  }
  if (quantity == "o_delta" || quantity == "c_delta") {
    if (nranges < 2)
      throw ParseError(quantity + " needs at least one order range and a "
                       "delta range");
    // delta is the last range; the spec components precede it.
    for (std::size_t i = 1; i < nranges; ++i)
      cols.push_back("n" + std::to_string(i));
    cols.push_back("delta");
    return {cols, nranges};
  }
  throw ParseError("unknown table quantity: " + quantity);
}

std::string table_cell(const std::string& quantity, const std::vector<u64>& args,
                       const spectra::Caps& caps) {
  if (quantity == "c")
    return to_string(spectra::cyclic_total(spectra::GroupSpec::of(args), caps));
  if (quantity == "A")
    return spectra::average_order(spectra::GroupSpec::of(args), caps).str();
  if (quantity == "s")
    return to_string(spectra::subgroup_total_rank2(args[0], args[1], caps));
  if (quantity == "phi_r") {
    if (args[0] > 64) throw DomainError("phi_r order r too large");
    return to_string(
        arith::jordan_phi(static_cast<unsigned>(args[0]), args[1]));
  }
  // o_delta / c_delta: last argument is delta, zero when not a divisor.
  std::vector<u64> orders(args.begin(), args.end() - 1);
  const u64 delta = args.back();
  const auto spec = spectra::GroupSpec::of(orders);
  if (delta == 0 || spec.exponent % delta != 0) return "0";
  const u128 o = spectra::order_count_moebius(spec, delta);
  if (quantity == "o_delta") return to_string(o);
  return to_string(o / arith::euler_phi(delta));
}

int run_compute(const std::string& spec_string, const std::string& quantity,
                const std::optional<std::string>& delta_arg, Output& output,
                const spectra::Caps& caps) {
  const auto orders = parse_spec(spec_string);
  const auto spec = spectra::GroupSpec::of(orders);
  const bool needs_delta = quantity == "o_delta" || quantity == "c_delta";
  if (needs_delta != delta_arg.has_value())
    throw ParseError(needs_delta ? "quantity " + quantity + " requires delta"
                                 : "quantity " + quantity + " takes no delta");
  std::string value;
  if (quantity == "c") {
    value = to_string(spectra::cyclic_total(spec, caps));
  } else if (quantity == "A") {
    value = spectra::average_order(spec, caps).str();
  } else if (quantity == "s") {
    if (orders.size() != 2)
      throw DomainError("quantity s is defined for rank-2 specs only");
    value = to_string(spectra::subgroup_total_rank2(orders[0], orders[1], caps));
  } else if (needs_delta) {
    const u64 delta = parse_u64(*delta_arg, "delta");
    const u128 o = spectra::order_count_moebius(spec, delta);
    value = quantity == "o_delta"
                ? to_string(o)
                : to_string(o / arith::euler_phi(delta));
  } else {
    throw ParseError("unknown quantity: " + quantity);
  }
  output.out() << value << "\n";
  return kOk;
}

int run_table(const std::string& quantity, const std::vector<std::string>& specs,
              const std::string& format, Output& output,
              const spectra::Caps& caps, u64 table_cap) {
  std::vector<Range> ranges;
  for (const auto& s : specs) ranges.push_back(parse_range(s));
  const TableLayout layout = table_layout(quantity, ranges.size());
  if (ranges.size() != layout.arity)
    throw ParseError("quantity " + quantity + " takes " +
                     std::to_string(layout.arity) + " ranges");
  u128 cells = 1;
  for (const auto& r : ranges) cells = checked_mul(cells, r.count());
  if (cells > table_cap)
    throw CapExceeded("table has " + to_string(cells) + " cells, cap is " +
                      std::to_string(table_cap));

  std::vector<u64> args;
  for (const auto& r : ranges) args.push_back(r.lo);
  json cells_json = json::array();
  std::ostream& os = output.out();
  if (format == "csv") {
    for (const auto& col : layout.columns) os << col << ",";
    os << "value\n";
  }
  for (;;) {
    const std::string value = table_cell(quantity, args, caps);
    if (format == "json") {
      cells_json.push_back({{"args", args}, {"value", value}});
    } else {
      for (u64 a : args) os << a << ",";
      os << value << "\n";
    }
    std::size_t k = ranges.size();
    bool done = false;
    while (k > 0) {
      --k;
      if (++args[k] <= ranges[k].hi) break;
      args[k] = ranges[k].lo;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  if (format == "json") {
    json doc;
    doc["quantity"] = quantity;
    doc["ranges"] = json::array();
    for (const auto& r : ranges) doc["ranges"].push_back({r.lo, r.hi});
    doc["cells"] = std::move(cells_json);
    os << doc.dump(2) << "\n";
  }
  return kOk;
}

int run_verify(const std::string& suite, const verify::Options& options,
               Output& output) {
  std::ostream& os = output.out();
  const auto summary = verify::run_suite(suite, options, [&](const auto& r) {
    os << "FAIL " << r.identity << " " << r.input << ": lhs=" << r.lhs
       << " rhs=" << r.rhs << "\n";
  });
  os << "suite=" << suite << " checked=" << summary.checked
     << " failed=" << summary.failed << "\n";
  return summary.all_pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Element-order spectra and cyclic-subgroup counts of finite "
               "abelian groups C_{n1} x ... x C_{nr}"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  u64 spectrum_cap = env_cap("ABCENSUS_SPECTRUM_CAP", 10'000);
  u64 oracle_cap = env_cap("ABCENSUS_ORACLE_CAP", 100'000);
  u64 table_cap = env_cap("ABCENSUS_TABLE_CAP", 1'000'000);
  u64 seed = 0;
  u64 max_n = 30, max_order = 5000;
  unsigned max_r = 4;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "Write output to FILE");
    cmd->add_option("--spectrum-cap", spectrum_cap,
                    "Max divisor count of the exponent");
    cmd->add_option("--oracle-cap", oracle_cap,
                    "Max group size for brute-force sweeps");
    cmd->add_option("--table-cap", table_cap, "Max table cells");
  };

  std::string spec_string, quantity, suite;
  std::optional<std::string> delta_arg;
  std::vector<std::string> range_args;

  auto* compute = app.add_subcommand("compute", "Compute one exact value");
  compute->add_option("spec", spec_string, "Group spec, e.g. 4x2x3")
      ->required();
  compute->add_option("quantity", quantity, "One of c, s, A, o_delta, c_delta")
      ->required();
  compute->add_option("delta", delta_arg, "Order delta (o_delta/c_delta only)");
  add_common(compute);

  auto* spectrum = app.add_subcommand("spectrum", "Full order spectrum");
  spectrum->add_option("spec", spec_string, "Group spec")->required();
  add_common(spectrum);

  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest cyclic order");
  verify_cmd->add_option("--max-r", max_r, "Largest rank");
  verify_cmd->add_option("--max-order", max_order, "Largest swept group size");
  verify_cmd->add_option("--seed", seed, "PRNG seed for randomized suites");
  add_common(verify_cmd);

  auto* table = app.add_subcommand("table", "Batch table over ranges");
  table->add_option("quantity", quantity,
                    "One of c, s, A, o_delta, c_delta, phi_r")
      ->required();
  table->add_option("ranges", range_args, "Inclusive ranges, e.g. 1..4")
      ->required();
  add_common(table);

  CLI11_PARSE(app, argc, argv);

  try {
    Output output;
    output.open(out_path);
    spectra::Caps caps;
    caps.spectrum = spectrum_cap;

    if (compute->parsed())
      return run_compute(spec_string, quantity, delta_arg, output, caps);
    if (spectrum->parsed()) {
      print_spectrum(output.out(),
                     spectra::full_spectrum(
                         spectra::GroupSpec::of(parse_spec(spec_string)), caps),
                     format);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      verify::Options options;
      options.max_n = max_n;
      options.max_r = max_r;
      options.max_order = max_order;
      options.seed = seed;
      options.caps = caps;
      options.oracle_caps.elements = oracle_cap;
      return run_verify(suite, options, output);
    }
    return run_table(quantity, range_args, format, output, caps, table_cap);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDomain;
  }
}
