// End-to-end tests for the permpat command line tool: exit status contract,
// output formats, stdin plumbing, and determinism of emitted bytes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

std::string temp_path() {
  static int counter = 0;
  return "/tmp/permpat_cli_test_" + std::to_string(getpid()) + "_" +
         std::to_string(counter++);
}

CmdResult run_shell(const std::string& command) {
  CmdResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

const std::string kCli = std::string("\"") + PERMPAT_CLI_PATH + "\"";

CmdResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string command = kCli + " " + args + " 2>/dev/null";
  std::string file;
  if (!stdin_data.empty()) {
    file = temp_path();
    std::ofstream(file) << stdin_data;
    command += " < " + file;
  }
  CmdResult result = run_shell(command);
  if (!file.empty()) std::remove(file.c_str());
  return result;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("gen prints elements in one-line notation") {
  const auto r1 = run_cli("gen 1");
  CHECK(r1.status == 0);
  CHECK(r1.out == "13 12 10 14 8 11 6 9 4 7 3 2 1 5\n");

  const auto r2 = run_cli("gen 2");
  CHECK(r2.status == 0);
  CHECK(r2.out == "15 14 12 16 10 13 8 11 6 9 4 7 3 2 1 5\n");
}

TEST_CASE("gen rejects bad indices as usage errors") {
  CHECK(run_cli("gen 0").status == 2);
  CHECK(run_cli("gen -4").status == 2);
  CHECK(run_cli("gen").status == 2);
}

TEST_CASE("gen json record carries boundaries and checks") {
  const auto r = run_cli("gen 2 --format json-lines");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 1);
  CHECK(r.out.find("\"record\":\"element\"") != std::string::npos);
  CHECK(r.out.find("\"index\":2") != std::string::npos);
  CHECK(r.out.find("\"middle_end\":12") != std::string::npos);
  CHECK(r.out.find("\"all_checks_pass\":true") != std::string::npos);
}

TEST_CASE("contains encodes its answer in the exit status") {
  const auto yes = run_cli("contains \"1 3 2\" \"2 4 5 3 1\"");
  CHECK(yes.status == 0);
  CHECK(yes.out == "contained\n");

  const auto no = run_cli("contains \"1 2\" \"2 1\"");
  CHECK(no.status == 1);
  CHECK(no.out == "not contained\n");

  CHECK(run_cli("contains \"1 1 2\" \"1 2\"").status == 2);
  CHECK(run_cli("contains \"1 x\" \"1 2\"").status == 2);
}

TEST_CASE("contains prints the leftmost witness on request") {
  const auto r = run_cli("contains \"1 3 2\" \"2 4 5 3 1\" --witness");
  CHECK(r.status == 0);
  CHECK(r.out.find("witness: 1 2 4") != std::string::npos);

  const auto json = run_cli(
      "contains \"1 3 2\" \"2 4 5 3 1\" --witness --format json-lines");
  CHECK(json.out.find("\"witness\":[1,2,4]") != std::string::npos);
  CHECK(json.out.find("\"contained\":true") != std::string::npos);
}

TEST_CASE("contains reads from stdin when arguments are omitted") {
  const auto r = run_cli("contains", "1 3 2\n2 4 5 3 1\n");
  CHECK(r.status == 0);

  const auto no = run_cli("contains", "1 2\n2 1\n");
  CHECK(no.status == 1);

  CHECK(run_cli("contains", "1 3 2\n").status == 2);  // missing text line
}

TEST_CASE("contains agrees across algorithms") {
  for (const char* algorithm : {"fast", "oracle", "both"}) {
    const auto r = run_cli(std::string("contains \"1 3 2\" \"2 4 5 3 1\" "
                                       "--algorithm ") +
                           algorithm);
    CAPTURE(algorithm);
    CHECK(r.status == 0);
  }
}

TEST_CASE("oracle budget refusal is a distinct status") {
  const auto r = run_cli(
      "contains \"1 2 3\" \"5 4 3 6 1 2 7\" --algorithm oracle "
      "--oracle-budget 5");
  CHECK(r.status == 3);
}

TEST_CASE("compare prints the relation") {
  CHECK(run_cli("compare \"1 3 2\" \"2 4 5 3 1\"").out == "less\n");
  CHECK(run_cli("compare \"2 4 5 3 1\" \"1 3 2\"").out == "greater\n");
  CHECK(run_cli("compare \"1 3 2\" \"1 3 2\"").out == "equal\n");
  CHECK(run_cli("compare \"1 2\" \"2 1\"").out == "incomparable\n");
  CHECK(run_cli("compare \"1 2\" \"2 1\" --algorithm both").status == 0);
}

TEST_CASE("verify reports the antichain verdict via the exit status") {
  const auto r = run_cli("verify --up-to 4 --algorithm both");
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict: antichain") != std::string::npos);
  CHECK(r.out.find("6/6 pairs incomparable") != std::string::npos);

  CHECK(run_cli("verify --up-to 2").status == 0);
  CHECK(run_cli("verify --up-to 1").status == 2);
  CHECK(run_cli("verify").status == 2);
}

TEST_CASE("verify emits versioned json-lines records") {
  const auto r = run_cli("verify --up-to 3 --format json-lines");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 4);  // 3 pairs + verdict
  CHECK(r.out.find("{\"v\":1,\"record\":\"pair\"") != std::string::npos);
  CHECK(r.out.find("\"antichain\":true") != std::string::npos);
}

TEST_CASE("verify over piped elements matches internal generation") {
  const auto g1 = run_cli("gen 1");
  const auto g2 = run_cli("gen 2");
  const auto piped = run_cli("verify --stdin", g1.out + g2.out);
  const auto internal = run_cli("verify --up-to 2");
  CHECK(piped.status == internal.status);
  CHECK(piped.out == internal.out);
}

TEST_CASE("verify --jobs renders identically to single-threaded") {
  const auto serial = run_cli("verify --up-to 5 --jobs 1");
  const auto parallel = run_cli("verify --up-to 5 --jobs 4");
  CHECK(serial.status == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("verify in oracle mode refuses when the budget is too small") {
  // C(16,14) = 120 > 50, so the only pair is skipped-by-oracle.
  const auto r = run_cli("verify --up-to 2 --algorithm oracle "
                         "--oracle-budget 50");
  CHECK(r.status == 3);
  CHECK(r.out.find("oracle skipped") != std::string::npos);
}

TEST_CASE("lemmas honors the exit contract and stdin plumbing") {
  const auto direct = run_cli("lemmas 3");
  CHECK(direct.status == 0);
  CHECK(direct.out.find("all checks passed") != std::string::npos);

  CHECK(run_cli("lemmas 0").status == 2);
  CHECK(run_cli("lemmas").status == 2);

  const auto g3 = run_cli("gen 3");
  const auto piped = run_cli("lemmas --stdin", g3.out);
  CHECK(piped.status == 0);
  CHECK(piped.out == direct.out);
}

TEST_CASE("lemmas flags a broken element") {
  // Reversal of a_1: still a permutation, no longer an element.
  const auto r = run_cli("lemmas --stdin", "5 1 2 3 7 4 9 6 11 8 14 10 12 13\n");
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("crosscheck sweeps matcher against oracle") {
  const auto r = run_cli(
      "crosscheck --max-pattern-len 2 --max-text-len 4 --random-trials 20 "
      "--seed 9");
  CHECK(r.status == 0);
  CHECK(r.out.find("100% agreement") != std::string::npos);

  const auto json = run_cli(
      "crosscheck --max-pattern-len 2 --max-text-len 4 --format json-lines");
  CHECK(json.out.find("\"all_agree\":true") != std::string::npos);
}

TEST_CASE("plot draws one mark per entry") {
  const auto ascii = run_cli("plot 1 --format ascii");
  CHECK(ascii.status == 0);
  CHECK(count_lines(ascii.out) == 15);  // 14 rows + legend
  const std::string grid =
      ascii.out.substr(0, ascii.out.rfind('\n', ascii.out.size() - 2) + 1);
  const auto marks = std::count(grid.begin(), grid.end(), '#') +
                     std::count(grid.begin(), grid.end(), 'o') +
                     std::count(grid.begin(), grid.end(), '*');
  CHECK(marks == 14);

  const auto again = run_cli("plot 1 --format ascii");
  CHECK(again.out == ascii.out);

  const auto svg = run_cli("plot 2 --format svg");
  CHECK(svg.status == 0);
  std::size_t circles = 0;
  for (std::size_t at = svg.out.find("<circle"); at != std::string::npos;
       at = svg.out.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == 16);

  CHECK(run_cli("plot 1 --format png").status == 2);
  CHECK(run_cli("plot 0").status == 2);
}

TEST_CASE("bench prints one row per requested pair") {
  const auto r = run_cli("bench --up-to 2 --reps 1");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 2);  // header + single pair
  CHECK(r.out.find("a_1 vs a_2") != std::string::npos);
  CHECK(r.out.find("incomparable") != std::string::npos);
}

TEST_CASE("bench workload is deterministic for a fixed seed") {
  const std::string args =
      "bench --up-to 2 --reps 1 --random-trials 3 --seed 5";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.status == 0);
  REQUIRE(second.status == 0);

  // Strip the timing columns; workload and relations must match exactly.
  const auto workload_of = [](const std::string& out) {
    std::string kept;
    std::size_t start = 0;
    while (start < out.size()) {
      std::size_t end = out.find('\n', start);
      if (end == std::string::npos) end = out.size();
      std::string line = out.substr(start, end - start);
      int fields = 0;
      std::size_t cut = line.size();
      for (std::size_t i = 0; i < line.size(); ++i) {
        const bool boundary =
            line[i] != ' ' && (i == 0 || line[i - 1] == ' ');
        if (boundary && ++fields == 5) {
          cut = i;
          break;
        }
      }
      kept += line.substr(0, cut);
      kept += '\n';
      start = end + 1;
    }
    return kept;
  };
  CHECK(workload_of(first.out) == workload_of(second.out));
}

TEST_CASE("generated output round-trips through parsing commands") {
  const auto g4 = run_cli("gen 4");
  std::string oneline = g4.out;
  if (!oneline.empty() && oneline.back() == '\n') oneline.pop_back();
  const auto self = run_cli("contains \"" + oneline + "\" \"" + oneline + "\"");
  CHECK(self.status == 0);
}
