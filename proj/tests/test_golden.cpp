#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef PERMSIMPLE_BIN
#error "PERMSIMPLE_BIN must point at the command line binary"
#endif
#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at the saved outputs"
#endif

using nlohmann::json;

namespace {

std::string capture(const std::string& args) {
  std::string cmd = std::string(PERMSIMPLE_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  REQUIRE(pclose(pipe) == 0);
  return out;
}

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

/// Text outputs compare byte for byte.
void expect_text(const std::string& args, const std::string& name) {
  CHECK(capture(args) == slurp(name));
}

/// JSON outputs compare structurally so formatting stays free to change.
void expect_json(const std::string& args, const std::string& name) {
  CHECK(json::parse(capture(args)) == json::parse(slurp(name)));
}

}  // namespace

TEST_CASE("simplicity verdict") {
  expect_text("check 25314", "check_25314.txt");
}

TEST_CASE("minimal intervals") {
  expect_json("intervals --minimal --json 1234", "intervals_min_1234.json");
}

TEST_CASE("classification with repair") {
  expect_json("classify --repair --json 1324", "classify_repair_1324.json");
}

TEST_CASE("essentiality listing") {
  expect_text("inessential 24153", "inessential_24153.txt");
}

TEST_CASE("length five enumeration") {
  expect_json("enumerate --length 5 --json", "enumerate_5.json");
}

TEST_CASE("extension census text") {
  expect_text("extensions 2413", "extensions_2413.txt");
}

TEST_CASE("exhaustive distribution at length five") {
  expect_json("stats --length 5 --exhaustive --json",
              "stats_exhaustive_5.json");
}

TEST_CASE("trend csv") {
  expect_text("trend --max-length 7 --csv", "trend_7.csv");
}

TEST_CASE("svg plot") {
  expect_text("plot 52413 --highlight 2,5 --format svg", "plot_52413.svg");
}

TEST_CASE("theorem sweep text") {
  expect_text("verify-theorem --max-length 6 --workers 4", "theorem_6.txt");
}
