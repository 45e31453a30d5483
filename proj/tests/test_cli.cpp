// End-to-end checks of the CLI contract (output formats and exit codes),
// run against the real binary.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(NSG_CLI_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("info emits the JSON record") {
  const auto r = run_cli("info --gens 6,7,9,10 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"gens\":[6,7,9,10],\"frobenius\":11,\"genus\":7,\"pf\":[3,8,11],\"type\":3,"
        "\"almost_symmetric\":true}\n");
}

TEST_CASE("info text output lists the invariants") {
  const auto r = run_cli("info --gens 2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("frobenius: 1") != std::string::npos);
  CHECK(r.out.find("pf: 1") != std::string::npos);
}

TEST_CASE("domain errors exit with 65") {
  CHECK(run_cli("info --gens 4,6").exit_code == 65);
  CHECK(run_cli("rf --gens 6,7,9,10 --f 12").exit_code == 65);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run_cli("info").exit_code == 64);
  CHECK(run_cli("info --gens 0,3").exit_code == 64);
  CHECK(run_cli("nonsense").exit_code == 64);
  CHECK(run_cli("verify --checks bogus").exit_code == 64);
  CHECK(run_cli("census --max-genus 55").exit_code == 64);
  CHECK(run_cli("explore --max-genus 3 --min-e 4").exit_code == 64);
}

TEST_CASE("NSG_MAX_GENUS overrides the cap") {
  CHECK(run_cli("census --max-genus 6", "NSG_MAX_GENUS=5").exit_code == 64);
  CHECK(run_cli("census --max-genus 5", "NSG_MAX_GENUS=5").exit_code == 0);
}

TEST_CASE("factorize prints coefficient vectors in enumeration order") {
  const auto r = run_cli("factorize --gens 6,7,9,10 --s 18");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0,0,2,0\n3,0,0,0\n");
  CHECK(run_cli("factorize --gens 6,7,9,10 --s 18 --count").out == "2\n");
  CHECK(run_cli("factorize --gens 6,7,9,10 --s 8").out.empty());
}

TEST_CASE("rf prints matrices separated by blank lines") {
  const auto count = run_cli("rf --gens 6,7,9,10 --f 8 --count");
  CHECK(count.exit_code == 0);
  CHECK(count.out == "2\n");

  const auto r = run_cli("rf --gens 6,7,9,10 --f 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "-1,2,0,0\n1,-1,1,0\n0,1,-1,1\n0,0,2,-1\n"
        "\n"
        "-1,2,0,0\n1,-1,1,0\n0,1,-1,1\n3,0,0,-1\n");

  // not pseudo-Frobenius but outside S: empty output, not an error
  CHECK(run_cli("rf --gens 6,7,9,10 --f 5").out.empty());
  CHECK(run_cli("rf --gens 6,7,9,10 --f 5").exit_code == 0);
}

TEST_CASE("lambda and gamma expose the tables") {
  const auto lam = run_cli("lambda --gens 6,7,9,10");
  CHECK(lam.exit_code == 0);
  const auto lam_lines = lines_of(lam.out);
  REQUIRE(lam_lines.size() == 13);  // header + 12 ordered pairs
  CHECK(lam_lines[0] == "i,j,lambda,m");
  CHECK(lam.out.find("4,1,3,8") != std::string::npos);  // 8 = 3*6 - 10

  const auto gam = run_cli("gamma --gens 6,7,9,10");
  CHECK(gam.exit_code == 0);
  CHECK(gam.out.find("f=3: (1,3) (2,4) (3,1)  size=3") != std::string::npos);
  CHECK(gam.out.find("f=8: (1,2) (4,1) (4,3)  size=3") != std::string::npos);
  CHECK(gam.out.find("total=6") != std::string::npos);
}

TEST_CASE("census CSV totals are consistent with the traversal") {
  const auto r = run_cli("census --max-genus 5 --all --csv -");
  CHECK(r.exit_code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == "genus,embedding_dim,type,count");

  std::vector<std::uint64_t> per_genus(6, 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int genus = 0, e = 0;
    long long type = 0;
    unsigned long long count = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%d,%d,%lld,%llu", &genus, &e, &type, &count) == 4);
    per_genus[static_cast<std::size_t>(genus)] += count;
  }
  CHECK(per_genus == std::vector<std::uint64_t>{1, 1, 2, 4, 7, 12});
}

TEST_CASE("verify is clean and byte-identical across thread counts") {
  const auto a = run_cli("verify --max-genus 6 --threads 1 --json");
  const auto b = run_cli("verify --max-genus 6 --threads 2 --json");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("verify subsets work") {
  const auto golden = run_cli("verify --checks golden");
  CHECK(golden.exit_code == 0);
  CHECK(golden.out.find("golden_6,7,9,10") != std::string::npos);

  const auto theorem = run_cli("verify --checks theorem --max-genus 8");
  CHECK(theorem.exit_code == 0);
  CHECK(theorem.out.find("max_type = 3") != std::string::npos);
}

TEST_CASE("explore reports records and profiles") {
  const auto r = run_cli("explore --max-genus 3 --min-e 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 found") != std::string::npos);
}
