// End-to-end checks of the command-line tool: exit codes, output shapes,
// determinism, and JSONL round-trips through the library readers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bibifix/codes.hpp"
#include "bibifix/graycode.hpp"
#include "bibifix/jsonl.hpp"
#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(BIBIFIX_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t line_count(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    lines += c == '\n';
  }
  return lines;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("count commands print bare numbers") {
  auto bf = run_cli("count bf --n 9 --q 2");
  CHECK(bf.exit_code == 0);
  CHECK(bf.output == "148\n");

  auto bbf = run_cli("count bbf --n 4 --q 2");
  CHECK(bbf.exit_code == 0);
  CHECK(bbf.output == "30720\n");

  auto one = run_cli("count bbf --n 1 --q 3");
  CHECK(one.exit_code == 0);
  CHECK(one.output == "3\n");
}

TEST_CASE("check word reports bifix structure through the exit code") {
  auto bad = run_cli("check word 100100100");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("not bifix-free") != std::string::npos);
  CHECK(bad.output.find("3 6") != std::string::npos);

  auto good = run_cli("check word 111010100");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("bifix-free") != std::string::npos);

  CHECK(run_cli("check word 0").exit_code == 0);
  CHECK(run_cli("check word 10a").exit_code == 2);
  CHECK(run_cli("check word 102 --q 2").exit_code == 2);
  CHECK(run_cli("check word 102").exit_code == 0);  // q inferred as 3
}

TEST_CASE("check matrix validates shape and freeness") {
  auto free = run_cli("check matrix 10/00");
  CHECK(free.exit_code == 0);
  CHECK(free.output.find("bibifix-free") != std::string::npos);

  auto bound = run_cli("check matrix 11110/10111/10010/01111/10010");
  CHECK(bound.exit_code == 1);
  CHECK(bound.output.find("dimensions: 2") != std::string::npos);

  CHECK(run_cli("check matrix 10/0").exit_code == 2);
  CHECK(run_cli("check matrix 12/00 --q 2").exit_code == 2);
}

TEST_CASE("generate bbf streams a JSONL set") {
  auto small = run_cli("generate bbf --n 2 --q 2");
  CHECK(small.exit_code == 0);
  CHECK(line_count(small.output) == 9);  // header + 8 members
  CHECK(small.output.find("\"count\":8") != std::string::npos);

  auto brute = run_cli("generate bbf --n 2 --q 2 --method brute");
  CHECK(brute.output == small.output);

  auto text = run_cli("generate bbf --n 2 --q 2 --format text");
  CHECK(line_count(text.output) == 8);
  CHECK(text.output.find("10/00") != std::string::npos);

  CHECK(run_cli("generate bbf --n 6 --q 2").exit_code == 3);
  CHECK(run_cli("generate bbf --n 2 --q 2 --method magic").exit_code == 2);
  CHECK(run_cli("generate bbf --n 2").exit_code == 2);  // missing --q
}

TEST_CASE("build cbbf emits the code with its diagonal header") {
  auto code = run_cli("build cbbf --n 3 --q 3");
  CHECK(code.exit_code == 0);
  CHECK(line_count(code.output) == 2917);  // header + 2916 members
  CHECK(code.output.find("\"diagonal\":[\"100\",\"102\",\"120\",\"122\"]") !=
        std::string::npos);

  auto variant = run_cli("build cbbf --n 4 --q 2 --k 2");
  CHECK(variant.exit_code == 0);
  CHECK(variant.output.find("\"diagonal\":[\"1100\"]") != std::string::npos);

  auto rect = run_cli("build rect --n 3 --m 4 --q 2");
  CHECK(rect.exit_code == 0);
  CHECK(line_count(rect.output) == 65);  // header + 64 members

  CHECK(run_cli("build cbbf --n 2 --q 2").exit_code == 2);
  CHECK(run_cli("build cbbf --n 4 --q 2 --diagonal 1010").exit_code == 2);
}

TEST_CASE("verify commands expose the paper-level verdicts") {
  CHECK(run_cli("verify cross --n 3 --q 3").exit_code == 0);
  CHECK(run_cli("verify nonexpandable --n 3 --q 2").exit_code == 0);
  CHECK(run_cli("verify nonexpandable --n 4 --q 2").exit_code == 0);

  auto expandable = run_cli("verify nonexpandable --n 4 --q 2 --diagonal 1100");
  CHECK(expandable.exit_code == 1);
  CHECK(expandable.output.find("expanding-witness") != std::string::npos);
  CHECK(expandable.output.find("1000/0000/0010/0010") != std::string::npos);

  auto cross_bad = run_cli("verify cross --n 3 --q 2 --diagonal 100,001");
  CHECK(cross_bad.exit_code == 1);
  CHECK(cross_bad.output.find("cross-conflict-pair") != std::string::npos);

  CHECK(run_cli("verify rect --n 3 --m 4 --q 2").exit_code == 0);
}

TEST_CASE("gray listing and its check mode") {
  auto check = run_cli("gray --n 3 --q 3 --check");
  CHECK(check.exit_code == 0);
  CHECK(check.output == "{\"kind\":\"verdict\",\"ok\":true,\"count\":2916}\n");

  auto listing = run_cli("gray --n 3 --q 2");
  CHECK(listing.exit_code == 0);
  CHECK(line_count(listing.output) == 65);
  CHECK(listing.output.find("\"seq\":0,\"matrix\":\"100/000/000\"") !=
        std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  auto first = run_cli("build cbbf --n 3 --q 3");
  auto second = run_cli("build cbbf --n 3 --q 3");
  CHECK(first.output == second.output);

  auto gray_a = run_cli("gray --n 3 --q 2");
  auto gray_b = run_cli("gray --n 3 --q 2");
  CHECK(gray_a.output == gray_b.output);
}

TEST_CASE("emitted JSONL re-parses into the same in-memory objects") {
  std::string path = "cli_roundtrip.jsonl";
  auto run = run_cli("build cbbf --n 3 --q 2 --out " + path);
  REQUIRE(run.exit_code == 0);
  {
    std::ifstream in(path);
    REQUIRE(in.good());
    bibifix::MatrixCode parsed = bibifix::jsonl::read_matrix_code(in);
    bibifix::MatrixCode direct = bibifix::build_cbbf(3, 2);
    CHECK(parsed.members() == direct.members());
    CHECK(parsed.diagonal_code() == direct.diagonal_code());
    CHECK(parsed.k() == direct.k());
  }
  std::remove(path.c_str());

  std::string gray_path = "cli_gray.jsonl";
  auto gray = run_cli("gray --n 3 --q 2 --out " + gray_path);
  REQUIRE(gray.exit_code == 0);
  {
    std::ifstream in(gray_path);
    REQUIRE(in.good());
    auto parsed = bibifix::jsonl::read_matrix_listing(in);
    auto direct = bibifix::build_cbbf_gray(3, 2);
    CHECK(parsed.items == direct.items);
  }
  std::remove(gray_path.c_str());
}

TEST_CASE("stress gate refuses huge materializations without the flag") {
  auto refused = run_cli("generate bbf --n 5 --q 2");
  CHECK(refused.exit_code == 3);
  CHECK(refused.output.find("--stress") != std::string::npos);
}

TEST_CASE("the budget flag caps enumerations") {
  auto capped = run_cli("build cbbf --n 5 --q 2 --budget 1000");
  CHECK(capped.exit_code == 3);
  CHECK(run_cli("build cbbf --n 3 --q 2 --budget 1000").exit_code == 0);
}

TEST_CASE("a diagonal set without a Hamming path reports no gray order") {
  auto no_order = run_cli("gray --n 4 --q 2 --diagonal 1000,0111");
  CHECK(no_order.exit_code == 1);
  CHECK(no_order.output.find("no gray order") != std::string::npos);
}

TEST_CASE("rect output re-parses into the library construction") {
  std::string path = "cli_rect.jsonl";
  auto run = run_cli("build rect --n 3 --m 4 --q 2 --out " + path);
  REQUIRE(run.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  bibifix::RectCode parsed = bibifix::jsonl::read_rect_code(in);
  bibifix::RectCode direct = bibifix::build_cbbf_rect(3, 4, 2);
  CHECK(parsed.members == direct.members);
  CHECK(parsed.diagonal_code == direct.diagonal_code);
  CHECK(parsed.k == direct.k);
  std::remove(path.c_str());
}

TEST_SUITE_END();
