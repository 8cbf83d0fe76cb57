#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sfs/report_io.hpp"

using namespace sfs;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "sfs-norm");
  std::ostringstream out, err;
  int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SFS_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("n-genus") {
  CHECK(run({"n-genus", "46", "7"}).out == "5\n");
  CHECK(run({"n-genus", "8", "1"}).out == "4\n");
  auto bad = run({"n-genus", "6", "3"});
  CHECK(bad.code == cli::invalid_presentation);
  CHECK(bad.err.find("not coprime") != std::string::npos);
  CHECK(bad.out.empty());

  auto ex = run({"n-genus", "46", "7", "--explain"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("[6, 1, 1, 3]") != std::string::npos);
  CHECK(ex.out.find("[6, 0, 1, 3]") != std::string::npos);

  ex = run({"--explain", "n-genus", "-46", "-53"});
  CHECK(ex.out.find("sign flip") != std::string::npos);
  CHECK(ex.out.find("q mod 2k") != std::string::npos);
  CHECK(ex.out.find("\n5\n") != std::string::npos);
  ex = run({"--explain", "n-genus", "46", "39"});
  CHECK(ex.out.find("2k - q") != std::string::npos);
}

TEST_CASE("norm") {
  auto r = run({"norm", "S2((2,-1),(3,1),(8,1))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("V13") != std::string::npos);
  CHECK(r.out.find("horizontal (2,-1),(3,1),(6,1)") != std::string::npos);

  r = run({"norm", "S2((2,-1),(2,1),(6,1))", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string line;
  int n = 0;
  while (std::getline(rows, line)) ++n;
  CHECK(n == 4);

  r = run({"norm", "S2((2,-1),(3,1),(-1,6))"});
  CHECK(r.code == cli::invalid_presentation);
  r = run({"norm", "S2((2,-1),(3,1),(6,1))"});
  CHECK(r.code == cli::invalid_presentation);
  CHECK(r.err.find("not small") != std::string::npos);
  r = run({"norm", "S2((2,-1),(3,1),(8,1)"});
  CHECK(r.code == cli::usage_error);
  CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("json output is the library report") {
  for (const char* p : {"S2((2,-1),(3,1),(8,1))", "M(+0,0; -1/2, 1/2, 1/6)", "[-1; (2,1),(3,1),(4,1)]"}) {
    auto r = run({"--format", "json", "norm", p});
    REQUIRE(r.code == 0);
    auto parsed = json::parse(r.out).get<NormReport>();
    CHECK(parsed == compute_norms(parse_presentation(p)));
  }
}

TEST_CASE("notation override") {
  CHECK(run({"norm", "--notation", "orlik", "S2((2,-1),(3,1),(8,1))"}).code == cli::usage_error);
  CHECK(run({"norm", "--notation", "hatcher", "M(+0,0; -1/2, 1/3, 1/8)"}).code == 0);
}

TEST_CASE("convert") {
  CHECK(run({"convert", "S2((2,-1),(3,1),(8,1))", "orlik"}).out == "[-1; (2,1),(3,1),(8,1)]\n");
  CHECK(run({"convert", "S2((2,-1),(3,1),(8,1))", "hatcher"}).out == "M(+0,0; -1/2, 1/3, 1/8)\n");
  CHECK(run({"convert", "[-1; (2,1),(3,1),(8,1)]", "martelli"}).out == "S2((2,-1),(3,1),(8,1))\n");
  auto once = run({"convert", "S2((2,5),(3,-2),(8,-7))", "orlik"}).out;
  once.pop_back();
  auto twice = run({"convert", run({"convert", once, "martelli"}).out, "orlik"}).out;
  CHECK(twice == once + "\n");
  CHECK(run({"convert", "S2((2,-1),(3,1),(8,1))", "seifert"}).code == cli::usage_error);
}

TEST_CASE("scan") {
  auto r = run({"scan", data("family_4_1.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("canonical_form,class,e1,e2,e3,min_genus,norm,witness_kind,gap,exhaustive\n", 0) == 0);
  CHECK(r.out.find(",2,true\n") != std::string::npos);

  r = run({"scan", data("empty_grid.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "canonical_form,class,e1,e2,e3,min_genus,norm,witness_kind,gap,exhaustive\n");

  r = run({"scan", data("family_4_3.txt")});
  CHECK(r.code == 0);
  CHECK(r.err.find("skipped") != std::string::npos);

  CHECK(run({"scan", data("does_not_exist.txt")}).code == cli::usage_error);
}

TEST_CASE("scan syntax errors report the line") {
  auto path = std::filesystem::temp_directory_path() / "sfs_cli_bad_spec.txt";
  std::ofstream(path) << "# header\nS2((2,-1),(3,1),({2n},1)) | n=1..\n";
  auto r = run({"scan", path.string()});
  CHECK(r.code == cli::usage_error);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("--out writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "sfs_cli_out.txt";
  auto r = run({"n-genus", "46", "7", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "5");
  std::filesystem::remove(path);
}

TEST_CASE("budgets from flags and environment") {
  const char* p = "S2((2,-1),(2,1),(6,1))";
  auto tiny = run({"--format", "csv", "--mu-window", "2", "norm", p});
  CHECK(tiny.out.find(",false\n") != std::string::npos);
  auto env = run({"--format", "csv", "norm", p}, "2");
  CHECK(env.out == tiny.out);
  auto flag_wins = run({"--format", "csv", "--mu-window", "500", "norm", p}, "2");
  CHECK(flag_wins.out.find(",false\n") == std::string::npos);
  CHECK(run({"norm", p}, "zero").code == cli::usage_error);
  CHECK(run({"--mu-window", "0", "norm", p}).code == cli::usage_error);
}

TEST_CASE("usage") {
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"frobnicate"}).code == cli::usage_error);
  CHECK(run({"n-genus", "46"}).code == cli::usage_error);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("n-genus") != std::string::npos);
}

}
