#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KNOTPLATE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("complexity") {
    CHECK(run("complexity --fixture trefoil").out == "3.000\n");
    CHECK(run("complexity --fixture unknot3").out == "2.289\n");
    CHECK(run("complexity --fixture trefoil").code == 0);
  }

  TEST_CASE("certify") {
    const auto u = run("certify --fixture unknot3");
    CHECK(u.code == 0);
    CHECK(u.out == "CERTIFIED: pi1 = Z\n");
    CHECK(run("certify --fixture unknot4").out == "CERTIFIED: pi1 = Z\n");
    CHECK(run("certify --fixture trefoil").out.rfind("INCONCLUSIVE", 0) == 0);
    CHECK(run("certify --pd ''").out.rfind("CERTIFIED: pi1 = Z", 0) == 0);
    CHECK(run("certify --fixture hopf").code == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("info").code == 1);
    CHECK(run("info --fixture trefoil --pd 'X(1,2,2,1)'").code == 1);
    CHECK(run("info --fixture nope").code == 1);
    CHECK(run("info --pd 'X(1,2,2,1)'").code == 2);
    CHECK(run("present --pd 'X(1,2,3'").code == 2);
    CHECK(run("simplify --fixture figure-eight --max-steps 1").code == 3);
    CHECK(run("certify --fixture unknot4 --max-steps 1").code == 3);
    CHECK(run("mesh --fixture trefoil --height -1").code == 1);
    CHECK(run("present --fixture trefoil --format obj").code == 1);
  }

  TEST_CASE("info") {
    const auto r = run("info --fixture trefoil");
    CHECK(r.code == 0);
    CHECK(r.out.find("crossings: 3\n") != std::string::npos);
    CHECK(r.out.find("total=33") != std::string::npos);
    CHECK(r.out.find("euler=1") != std::string::npos);
    CHECK(run("info --pd 'X(1,2,2,1)'").out.find("R1 loop") != std::string::npos);
  }

  TEST_CASE("presentations") {
    const auto p = run("present --fixture trefoil");
    CHECK(p.out.rfind("gens: a b c d e f\n", 0) == 0);
    CHECK(run("wirtinger --fixture trefoil").out.rfind("gens: a b c\n", 0) == 0);
    CHECK(run("simplify --fixture trefoil").out.rfind("gens: ", 0) == 0);
    CHECK(run("simplify --fixture trefoil --source wirtinger").code == 0);
    CHECK(run("present --fixture trefoil --format json").out.find("\"provenance\": \"upper-face 0\"") !=
          std::string::npos);
  }

  TEST_CASE("graphs, mesh and catalog") {
    CHECK(run("graphs --fixture trefoil --which medial").out.rfind("graph medial {", 0) == 0);
    CHECK(run("graphs --fixture trefoil --format json").out.find("\"spanning_tree\"") != std::string::npos);
    const auto obj = run("mesh --fixture trefoil");
    CHECK(obj.code == 0);
    CHECK(obj.out.rfind("# knotplate ", 0) == 0);
    const auto cat = run("catalog");
    for (const char* name : {"trefoil", "figure-eight", "hopf", "borromean", "unknot3", "unknot4"})
      CHECK(cat.out.find(name) != std::string::npos);
    CHECK(run("catalog --emit hopf").out == "X(1,4,2,3) X(3,2,4,1)\n");
  }

  TEST_CASE("input from a file and --out") {
    const std::string in = "cli_test_input.pd", out = "cli_test_output.txt";
    std::ofstream(in) << "# trefoil\nX(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n";
    CHECK(run("complexity --input " + in + " --out " + out).code == 0);
    std::ifstream f(out);
    std::string text((std::istreambuf_iterator<char>(f)), {});
    CHECK(text == "3.000\n");
    CHECK(run("complexity --input missing.pd").code == 1);
    std::remove(in.c_str());
    std::remove(out.c_str());
  }

  TEST_CASE("scan-assignments") {
    const auto r = run("scan-assignments --fixture trefoil-shadow");
    CHECK(r.code == 0);
    std::size_t rows = 0, marked = 0;
    std::size_t pos = r.out.find('\n') + 1;
    while (pos < r.out.size()) {
      const auto end = r.out.find('\n', pos);
      const std::string line = r.out.substr(pos, end - pos);
      ++rows;
      if (line.back() == '*') {
        ++marked;
        CHECK(line.find("\tyes\t") != std::string::npos);
      }
      pos = end + 1;
    }
    CHECK(rows == 8);
    CHECK(marked == 2);
  }

  TEST_CASE("output is deterministic") {
    for (const char* args : {"scan-assignments --fixture figure-eight-shadow --format json", "mesh --fixture borromean",
                             "graphs --fixture hopf --format json", "info --fixture unknot4 --format json"})
      CHECK(run(args).out == run(args).out);
  }
}
