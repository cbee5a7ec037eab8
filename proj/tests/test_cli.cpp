#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run pmon(std::string const& args, std::string const& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" PMON_CLI_PATH "\" " + args + " 2>/dev/null";
    Run         r;
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf;
    size_t                 got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  fs::path scratch_dir(std::string const& tag) {
    auto dir = fs::temp_directory_path() / ("pmon-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
  }

}  // namespace

TEST_CASE("stats", "[cli]") {
  auto a = pmon("stats --monoid Pn --n 4 --rank 3");
  CHECK(a.code == 0);
  CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring("P_D = 10"));
  CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring("E_D = 34"));
  auto b = pmon("stats --monoid Pn --n 3 --rank 2");
  CHECK_THAT(b.out, Catch::Matchers::ContainsSubstring("P_D = 6"));
  CHECK_THAT(b.out, Catch::Matchers::ContainsSubstring("E_D = 18"));
  auto c = pmon("stats --monoid Brauer --n 4 --rank 0");
  CHECK_THAT(c.out, Catch::Matchers::ContainsSubstring("P_D = 3"));
  CHECK_THAT(c.out, Catch::Matchers::ContainsSubstring("E_D = 9"));
  CHECK_THAT(c.out, Catch::Matchers::ContainsSubstring("connected"));
  auto j = pmon("stats --monoid Tn --n 4 --rank 2 --format json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["idempotents"].size() == 24);
  CHECK(doc["gh_connected"] == true);
}

TEST_CASE("identify", "[cli]") {
  auto a = pmon("identify --family ig --n 3 --rank 0");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("Z (free rank 1)\n", 0) == 0);
  auto b = pmon("identify --family pg-linked --n 3 --rank 0");
  CHECK(b.out.rfind("trivial\n", 0) == 0);
  auto c = pmon("identify --family pg --n 4 --rank 2");
  CHECK(c.out.rfind("S_2 (order 2, certified)\n", 0) == 0);
  auto d = pmon("identify --family ig --n 4 --rank 2 --format json");
  REQUIRE(d.code == 0);
  auto doc = nlohmann::json::parse(d.out);
  CHECK(doc["verdict"] == "Z_CROSS_FINITE(2, partial)");
  CHECK(doc["family"] == "ig");
}

TEST_CASE("adjacency input", "[cli]") {
  auto dir = scratch_dir("adj");
  std::ofstream(dir / "c4.txt") << "1 2\n2 3\n3 4\n4 1\n";
  auto r = pmon("identify --family pg --monoid Adjacency --graph \"" + (dir / "c4.txt").string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Z (free rank 1)\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("presentation, squares and graph output", "[cli]") {
  auto p = pmon("presentation --family ig --n 3 --rank 2 --simplify");
  CHECK(p.code == 0);
  CHECK(p.out.rfind("F := FreeGroup(\"a1\",\"a2\",\"a3\",\"a4\",\"a5\",\"a6\",\"a7\");", 0) == 0);
  CHECK_THAT(p.out, Catch::Matchers::ContainsSubstring("rels := [ ];"));
  auto pj = pmon("presentation --family pg --n 3 --rank 1 --format json");
  CHECK(nlohmann::json::parse(pj.out)["format"] == "pmon.presentation");
  auto sg = pmon("presentation --n 2 --semigroup ig");
  CHECK(sg.out.rfind("# IG: 12 generators", 0) == 0);
  auto sq = pmon("squares --n 3 --rank 2");
  CHECK(sq.out == "0 non-degenerate singular squares\n");
  auto dm = pmon("squares --n 3 --rank 0 --diamonds --format json");
  CHECK(nlohmann::json::parse(dm.out)["format"] == "pmon.diamonds");
  auto g = pmon("graph --n 4 --rank 2 --tree lex");
  CHECK(g.code == 0);
  CHECK(g.out.rfind("graph GH {", 0) == 0);
  auto gt = pmon("graph --n 4 --rank 2 --tree s --format json");
  auto st = nlohmann::json::parse(pmon("stats --n 4 --rank 2 --format json").out);
  CHECK(nlohmann::json::parse(gt.out)["edges"].size() == 2 * st["projections"].size() - 1);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(pmon("stats --n 3").code == 2);
  CHECK(pmon("no-such-command").code == 2);
  CHECK(pmon("stats --monoid Qn --n 3 --rank 1").code == 2);
  CHECK(pmon("stats --n 99 --rank 1").code == 2);
  CHECK(pmon("identify --family xx --n 3 --rank 1").code == 2);
  CHECK(pmon("graph --n 3 --rank 2 --tree lex").code == 2);
  CHECK(pmon("stats --monoid Adjacency").code == 2);
  CHECK(pmon("--help").code == 0);
}

TEST_CASE("verify reports every criterion", "[cli]") {
  auto r     = pmon("verify");
  int  lines = 0, failed = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("PASS [", 0) == 0 || line.rfind("FAIL [", 0) == 0)
      ++lines;
    failed += line.rfind("FAIL [", 0) == 0;
  }
  CHECK(lines == 17);
  CHECK(r.code == (failed ? 1 : 0));
}

TEST_CASE("cache round trip", "[cli]") {
  auto dir = scratch_dir("cache");
  auto a   = pmon("presentation --family pg --n 3 --rank 1 --cache-dir \"" + dir.string() + "\"");
  REQUIRE(a.code == 0);
  auto file = dir / "Pn-n3-r1-v1.json";
  REQUIRE(fs::exists(file));
  auto first = slurp(file);
  auto b     = pmon("presentation --family pg --n 3 --rank 1", "PMON_CACHE_DIR=\"" + dir.string() + "\"");
  CHECK(b.out == a.out);
  CHECK(slurp(file) == first);
  auto c = pmon("presentation --family pg --n 3 --rank 1");
  CHECK(c.out == a.out);
  // a corrupt cache file is ignored and rebuilt
  std::ofstream(file) << "{}";
  auto d = pmon("presentation --family pg --n 3 --rank 1 --cache-dir \"" + dir.string() + "\"");
  CHECK(d.code == 0);
  CHECK(d.out == a.out);
  CHECK(slurp(file) == first);
  fs::remove_all(dir);
}
