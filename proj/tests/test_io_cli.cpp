#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ig2/cli.hpp"
#include "ig2/table_io.hpp"
#include "json.hpp"

using namespace ig2;
namespace fs = std::filesystem;

namespace {

std::string run(const std::vector<std::string>& args, int expect_exit) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  CHECK_MESSAGE(code == expect_exit, err.str());
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ig2-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("table serialization round trip") {
  TableSet ts = build_table_set(3);
  ensure_full_products(ts);
  for (Family f : {Family::B, Family::C}) {
    std::stringstream buf;
    save_table(buf, table_of(ts, f), ts.match);
    MatchResult match;
    StructureTable back = load_table(buf, match);
    const StructureTable& orig = table_of(ts, f);
    CHECK(back.family == orig.family);
    CHECK(back.n == orig.n);
    CHECK(back.shapes == orig.shapes);
    CHECK(back.reps == orig.reps);
    REQUIRE(back.pieri1.size() == orig.pieri1.size());
    for (std::size_t i = 0; i < orig.pieri1.size(); ++i) {
      for (int which = 1; which <= 2; ++which) {
        const auto& a = which == 1 ? orig.pieri1[i] : orig.pieri2[i];
        const auto& b = which == 1 ? back.pieri1[i] : back.pieri2[i];
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
          CHECK(a[k].mu == b[k].mu);
          CHECK(a[k].coeff == b[k].coeff);
        }
      }
    }
    CHECK(back.products_complete);
    CHECK(back.products.size() == orig.products.size());
    CHECK(match.solutions_found == ts.match.solutions_found);
  }
}

TEST_CASE("cache: second load identical, stale files rebuilt") {
  TempDir dir;
  auto a = load_or_build_tables(3, dir.path.string(), true);
  CHECK(fs::exists(cache_file_path(dir.path.string(), Family::B, 3)));
  auto b = load_or_build_tables(3, dir.path.string(), true);
  CHECK(a.B.shapes == b.B.shapes);
  CHECK(a.B.reps == b.B.reps);
  CHECK(a.match.solutions_found == b.match.solutions_found);
  CHECK(b.B.products_complete);
  // corrupt a cache file: loader must fall back to a rebuild
  {
    std::ofstream os(cache_file_path(dir.path.string(), Family::B, 3));
    os << "garbage\n";
  }
  auto c = load_or_build_tables(3, dir.path.string(), false);
  CHECK(c.B.shapes == a.B.shapes);
}

TEST_CASE("cli shapes") {
  std::string text = run({"shapes", "--n", "3"}, 0);
  CHECK(text.find("3//3,2") != std::string::npos);
  std::string filtered = run({"shapes", "--n", "3", "--weight", "3"}, 0);
  CHECK(filtered.find("2//2") != std::string::npos);
  CHECK(filtered.find("3//1") != std::string::npos);
  CHECK(filtered.find("3//3,2") == std::string::npos);

  auto j = nlohmann::json::parse(run({"shapes", "--n", "3", "--format", "json"}, 0));
  CHECK(j["schemaVersion"] == 1);
  CHECK(j["count"] == 12);
  CHECK(j["shapes"].size() == 12);
}

TEST_CASE("cli weyl-table csv matches the source rows") {
  std::string csv = run({"weyl-table", "--n", "4", "--format", "csv"}, 0);
  CHECK(csv.find("\"(e1,-e2,e3,e4)\"") != std::string::npos);
  CHECK(csv.find("\"(e3,e4,e1,e2)\"") != std::string::npos);
  CHECK(csv.find("\"Pi\\{a2,a4}\"") != std::string::npos);
  // six data rows
  int rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 7);  // header + 6
}

TEST_CASE("cli report json schema and determinism") {
  std::string one = run({"report", "--n", "3", "--format", "json", "--seed", "7"}, 0);
  std::string two = run({"--format", "json", "report", "--n", "3", "--seed", "7"}, 0);
  CHECK(one == two);  // byte-identical, options before or after the subcommand
  auto j = nlohmann::json::parse(one);
  CHECK(j["schemaVersion"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["verdict"] == true);
  CHECK(j["items"].is_array());
  for (const auto& item : j["items"]) {
    CHECK(item.contains("name"));
    CHECK(item.contains("display"));
    CHECK(item.contains("status"));
    CHECK(item.contains("details"));
  }
  CHECK(j["assumptions"].size() == 4);
}

TEST_CASE("cli check subcommands and exit codes") {
  run({"check", "mult", "--n", "3"}, 0);
  run({"check", "motive", "--n", "5"}, 0);
  auto j = nlohmann::json::parse(run({"check", "generation", "--n", "3", "--format", "json"}, 0));
  CHECK(j["check"] == "generation");
  CHECK(j["verdict"] == true);

  std::ostringstream out, err;
  CHECK(run_cli({"check", "mult", "--n", "99"}, out, err) == 2);
  CHECK(run_cli({"report", "--n", "2"}, out, err) == 2);
  CHECK(run_cli({"frobnicate"}, out, err) == 2);
  CHECK(run_cli({"check", "bogus", "--n", "3"}, out, err) == 2);
  CHECK(run_cli({"report", "--n", "3", "--inject-fault"}, out, err) == 1);
}

TEST_CASE("cli cache flag round trips through the oracle") {
  TempDir dir;
  std::string a = run({"check", "mult", "--n", "3", "--cache", dir.path.string()}, 0);
  CHECK(fs::exists(cache_file_path(dir.path.string(), Family::C, 3)));
  std::string b = run({"check", "mult", "--n", "3", "--cache", dir.path.string()}, 0);
  CHECK(a == b);
}

#ifdef IG2_BINARY_PATH
TEST_CASE("installed binary exit codes") {
  std::string base = IG2_BINARY_PATH;
  CHECK(std::system((base + " report --n 3 > /dev/null 2>&1").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((base + " report --n 2 > /dev/null 2>&1").c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((base + " report --n 3 --inject-fault > /dev/null 2>&1").c_str())) == 1);
  CHECK(WEXITSTATUS(std::system((base + " --help > /dev/null 2>&1").c_str())) == 0);
}
#endif
