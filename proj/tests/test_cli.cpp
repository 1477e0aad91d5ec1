// End-to-end tests of the abcensus binary; argv[1] is the binary path.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("compute") {
  CHECK(run("compute 4x2 c").out == "6\n");
  CHECK(run("compute 2x2x2 c").out == "8\n");
  CHECK(run("compute 4x2 A").out == "23/8\n");
  CHECK(run("compute 1 A").out == "1\n");
  CHECK(run("compute 4x2 s").out == "8\n");
  CHECK(run("compute 4x2 o_delta 4").out == "4\n");
  CHECK(run("compute 4x2 c_delta 4").out == "2\n");
}

TEST_CASE("compute exit codes") {
  CHECK(run("compute 4x2 c").exit_code == 0);
  CHECK(run("compute 4x 2 c").exit_code == 2);      // whitespace rejected
  CHECK(run("compute 4xx2 c").exit_code == 2);
  CHECK(run("compute 4x2 bogus").exit_code == 2);
  CHECK(run("compute 4x2 c 3").exit_code == 2);     // c takes no delta
  CHECK(run("compute 4x2 o_delta").exit_code == 2); // delta required
  CHECK(run("compute 4x2 o_delta 3").exit_code == 3);
  CHECK(run("compute 4x2x2 s").exit_code == 3);
  CHECK(run("compute 2x3x5x7x11x13 c --spectrum-cap 4").exit_code == 0);
  // lcm of two coprime ~2^63 orders leaves 64 bits
  CHECK(run("compute 9223372036854775807x9223372036854775806 c").exit_code == 5);
}

TEST_CASE("spectrum csv") {
  auto r = run("spectrum 4x2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "delta,o,c\n"
        "1,1,1\n"
        "2,3,3\n"
        "4,4,2\n"
        "total,8,6\n");
  CHECK(run("spectrum 1").out == "delta,o,c\n1,1,1\ntotal,1,1\n");
  CHECK(run("spectrum 720720 --spectrum-cap 100").exit_code == 4);
}

TEST_CASE("spectrum json") {
  auto r = run("spectrum 6x6 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["spec"] == nlohmann::json({6, 6}));
  CHECK(doc["exponent"] == 6);
  REQUIRE(doc["entries"].size() == 4);
  std::vector<int> deltas;
  long long order_sum = 0;
  for (const auto& e : doc["entries"]) {
    deltas.push_back(e["delta"].get<int>());
    order_sum += std::stoll(e["o"].get<std::string>());
  }
  CHECK(deltas == std::vector<int>{1, 2, 3, 6});
  CHECK(order_sum == 36);
  CHECK(doc["totals"]["order_sum"] == "36");
  CHECK(doc["totals"]["cyclic_total"] == "20");
}

TEST_CASE("table") {
  auto r = run("table s 1..4 1..4 --format csv");
  REQUIRE(r.exit_code == 0);
  // header + 16 cells
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
  CHECK(r.out.find("2,2,5\n") != std::string::npos);
  CHECK(r.out.substr(0, 12) == "n1,n2,value\n");

  CHECK(run("table c 1..1 1..1").out == "n1,n2,value\n1,1,1\n");
  CHECK(run("table phi_r 2 1..6").out ==
        "r,n,value\n2,1,1\n2,2,3\n2,3,8\n2,4,12\n2,5,24\n2,6,24\n");

  // JSON round-trip: the parsed cells match compute.
  auto j = run("table s 1..3 1..3 --format json");
  REQUIRE(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc["cells"].size() == 9);
  for (const auto& cell : doc["cells"]) {
    const auto args = cell["args"];
    const std::string spec = std::to_string(args[0].get<int>()) + "x" +
                             std::to_string(args[1].get<int>());
    CHECK(cell["value"].get<std::string>() ==
          run("compute " + spec + " s").out.substr(
              0, run("compute " + spec + " s").out.size() - 1));
  }
}

TEST_CASE("table exit codes and caps") {
  CHECK(run("table bogus 1..2").exit_code == 2);
  CHECK(run("table s 1..2").exit_code == 2);          // s needs two ranges
  CHECK(run("table c 5..2").exit_code == 2);          // inverted range
  CHECK(run("table c 1..200 1..200 --table-cap 100").exit_code == 4);
  CHECK(run("table c 1..200 1..200", "ABCENSUS_TABLE_CAP=100 ").exit_code == 4);
  // flag overrides the environment
  CHECK(run("table c 1..3 1..3 --table-cap 100", "ABCENSUS_TABLE_CAP=2 ")
            .exit_code == 0);
}

TEST_CASE("verify") {
  auto r = run("verify jordan --max-n 15 --max-r 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("failed=0") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("verify bogus").exit_code == 2);
}

TEST_CASE("deterministic output") {
  for (const std::string args :
       {std::string("verify multiplicativity --seed 42 --max-n 8"),
        std::string("spectrum 12x18 --format json"),
        std::string("table A 1..6 1..6")}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

int main(int argc, char** argv) {
  doctest::Context context;
  if (argc > 1) g_binary = argv[argc - 1];
  context.applyCommandLine(argc - 1, argv);
  return context.run();
}
