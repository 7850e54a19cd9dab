#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

#ifndef FINECAT_BIN
#error "FINECAT_BIN must point at the command line binary"
#endif

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(FINECAT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli sequences") {
  SUBCASE("bfile output is bit exact") {
    CmdResult r = run_cli("seq --m 0 --n 3 --format bfile");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1\n2 0\n3 1\n");
  }
  SUBCASE("higher tower levels") {
    CmdResult r = run_cli("seq --m 2 --n 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "f2"));
    CHECK(contains(r.out, "5 42"));
  }
  SUBCASE("level out of range is a usage error") {
    CmdResult r = run_cli("seq --m 5 --n 3");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli triangles") {
  SUBCASE("closed form rows") {
    CmdResult r = run_cli("triangle --m 2 --rows 3 --method closed --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n1,1\n2,2,1\n");
  }
  SUBCASE("all three routes print identical rows") {
    CmdResult conv = run_cli("triangle --m 3 --rows 6 --method conv --format csv");
    CmdResult matrix =
        run_cli("triangle --m 3 --rows 6 --method matrix --format csv");
    CmdResult closed =
        run_cli("triangle --m 3 --rows 6 --method closed --format csv");
    CHECK(conv.exit_code == 0);
    CHECK(matrix.exit_code == 0);
    CHECK(closed.exit_code == 0);
    CHECK(conv.out == matrix.out);
    CHECK(conv.out == closed.out);
    CHECK(contains(conv.out, "14,14,6,1"));
  }
  SUBCASE("json carries the method") {
    CmdResult r = run_cli("triangle --m 2 --rows 3 --method closed --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"m\":2,\"rows\":[[\"1\"],[\"1\",\"1\"],[\"2\",\"2\",\"1\"]],"
          "\"method\":\"closed\"}\n");
  }
  SUBCASE("triangle index out of range is a usage error") {
    CmdResult r = run_cli("triangle --m 7 --rows 3");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli verification") {
  SUBCASE("the whole registry matches expectations") {
    CmdResult r = run_cli("verify --all --max-n 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "matched expectations"));
    CHECK(!contains(r.out, "UNEXPECTED"));
  }
  SUBCASE("an expected failure reports its counterexamples and still exits 0") {
    CmdResult r = run_cli("verify --id I-exotic-8.as_printed --max-n 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "falsified"));
    CHECK(contains(r.out, "(4,1)"));
    CHECK(contains(r.out, "as expected"));
  }
  SUBCASE("family prefix selects the pair") {
    CmdResult r = run_cli("verify --id I-g2-alt --max-n 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "I-g2-alt.as_printed"));
    CHECK(contains(r.out, "I-g2-alt.corrected"));
  }
  SUBCASE("json report form") {
    CmdResult r = run_cli("verify --id P-segner --max-n 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"id\":\"P-segner\""));
    CHECK(contains(r.out, "\"as_expected\":true"));
  }
  SUBCASE("unknown id is a usage error") {
    CmdResult r = run_cli("verify --id I-nonsense");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli oracles") {
  SUBCASE("colored count") {
    CmdResult r = run_cli("oracle colored --n 3 --k 2 --m 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
  }
  SUBCASE("ternary count") {
    CmdResult r = run_cli("oracle ternary --n 2 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
  }
  SUBCASE("total count") {
    CmdResult r = run_cli("oracle total --n 3 --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "10\n");
  }
  SUBCASE("ballot count") {
    CmdResult r = run_cli("oracle ballot --n 4 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n");
  }
  SUBCASE("out of range enumerations exit 3") {
    CmdResult r = run_cli("oracle colored --n 20 --k 1 --m 1");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("missing arguments are usage errors") {
    CHECK(run_cli("oracle colored --n 3").exit_code == 2);
    CHECK(run_cli("oracle ternary --n 3").exit_code == 2);
    CHECK(run_cli("oracle pentagonal --n 3").exit_code == 2);
  }
}

TEST_CASE("cli bijection") {
  SUBCASE("single pair at the top of the column") {
    CmdResult r = run_cli("bijection list --n 3 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "UD2 UD2 <-> 11\n");
  }
  SUBCASE("empty objects render as placeholders") {
    CmdResult r = run_cli("bijection list --n 1 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(empty) <-> (empty)\n");
  }
  SUBCASE("mixed colors list") {
    CmdResult r = run_cli("bijection list --n 3 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "UD1 UD2 <-> 101\nUD2 UD1 <-> 110\n");
  }
  SUBCASE("no color two hills at the diagonal") {
    CmdResult r = run_cli("bijection list --n 3 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "UUDD <-> 1100\nUD1 UD1 <-> 1010\n");
  }
  SUBCASE("roundtrip covers a full catalan cohort") {
    CmdResult r = run_cli("bijection roundtrip --n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ok, 132 pairs\n");
  }
  SUBCASE("exhaustive modes are capped") {
    CmdResult r = run_cli("bijection roundtrip --n 9");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("k outside the row is a usage error") {
    CmdResult r = run_cli("bijection list --n 3 --k 4");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli parse behavior") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("unknown-subcommand").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("seq --m 0 --format yaml").exit_code == 2);
}
