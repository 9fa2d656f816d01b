#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cache.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using parry::cli::Budgets;
using parry::cli::Cache;
using parry::cli::CacheRecord;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(PARRY_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("parry_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cache, FileStemIsInjectiveOnPolynomials) {
  EXPECT_NE(parry::cli::file_stem("x^2-x-1"), parry::cli::file_stem("x^2+x-1"));
  EXPECT_NE(parry::cli::file_stem("x^12"), parry::cli::file_stem("x^1e2"));
  for (char c : parry::cli::file_stem("x^3-5x^2/2 *y")) EXPECT_TRUE(std::isalnum(static_cast<unsigned char>(c)));
}

TEST(Cache, HitOnlyWithSufficientBudgets) {
  Cache cache(scratch("budgets"));
  cache.store({"x^2-x-1", "spectrum", {100, 100, 512, 0}, "t", "payload"});
  EXPECT_TRUE(cache.lookup("spectrum", "x^2-x-1", {100, 100, 512, 0}));
  EXPECT_TRUE(cache.lookup("spectrum", "x^2-x-1", {50, 10, 256, 0}));
  EXPECT_FALSE(cache.lookup("spectrum", "x^2-x-1", {101, 100, 512, 0}));
  EXPECT_FALSE(cache.lookup("spectrum", "x^2-x-1", {100, 100, 1024, 0}));
  EXPECT_FALSE(cache.lookup("status", "x^2-x-1", {1, 1, 1, 0}));
  EXPECT_EQ(cache.lookup("spectrum", "x^2-x-1", {1, 1, 1, 0})->value, "payload");
}

TEST(Cache, CorruptFilesAreIgnoredAndNoTempFilesRemain) {
  fs::path dir = scratch("corrupt");
  Cache cache(dir);
  cache.store({"x^3-x-1", "status", {1, 1, 1, 0}, "t", "v"});
  for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().extension(), ".json");
  std::ofstream(cache.path_for("status", "x^3-x-1")) << "{broken";
  EXPECT_FALSE(cache.lookup("status", "x^3-x-1", {1, 1, 1, 0}));
  EXPECT_FALSE(Cache("").enabled());
}

TEST(Cli, ClassifyExamplesAndExitCodes) {
  CliRun a = run("classify \"x^2-x-1\"");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("Pisot"), std::string::npos);
  EXPECT_NE(a.out.find("SimpleParry 1 1"), std::string::npos);

  CliRun b = run("classify \"x^12-x^10-x^9+x^4+x^3-x-1\" --format json");
  EXPECT_EQ(b.code, 0);
  json j = json::parse(b.out);
  EXPECT_EQ(j["class"], "PerronOther");
  EXPECT_EQ(j["status"]["akiyama_index"], 82);
  EXPECT_EQ(j["K"], 16);

  CliRun c = run("classify \"x^5-x^4-1\" --format json");
  EXPECT_EQ(c.code, 3);
  json f = json::parse(c.out);
  EXPECT_EQ(f["factors"], json::array({"x^2-x+1", "x^3-x-1"}));

  EXPECT_EQ(run("classify \"x^^2\"").code, 2);
  EXPECT_EQ(run("classify").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("--format xml classify x^2-x-1").code, 2);
  EXPECT_EQ(run("witness 0.5 0.1").code, 2);
}

TEST(Cli, SpectrumAndBudgetExhaustion) {
  CliRun a = run("spectrum \"x^3-5x^2-2x+5\" --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(json::parse(a.out)["spec"], json::array({1, 3, 5}));
  CliRun b = run("spectrum \"x^3-5x^2-2x+5\" --orbit-budget 2 --akiyama-budget 2");
  EXPECT_EQ(b.code, 4);
  EXPECT_NE(b.out.find("unknowns"), std::string::npos);
  EXPECT_EQ(json::parse(run("spectrum x^2-x-1 --format json").out)["ord"], "inf");
}

TEST(Cli, CacheTransparency) {
  fs::path dir = scratch("transparency");
  const std::string poly = "\"x^14-x^13-x^12-x^8+1\"";
  CliRun fresh = run("spectrum " + poly + " --format json --cache-dir " + dir.string());
  ASSERT_EQ(fresh.code, 0);
  EXPECT_FALSE(fs::is_empty(dir));
  CliRun cached = run("spectrum " + poly + " --format json", "PARRY_CACHE_DIR=" + dir.string());
  EXPECT_EQ(cached.out, fresh.out);
  fs::remove_all(dir);
  CliRun again = run("spectrum " + poly + " --format json --cache-dir " + dir.string());
  EXPECT_EQ(again.out, fresh.out);
  // larger budgets than stored force recomputation, same answer
  CliRun bigger = run("spectrum " + poly + " --format json --orbit-budget 60000 --cache-dir " + dir.string());
  EXPECT_EQ(bigger.out, fresh.out);
}

TEST(Cli, FamilyCensusWitnessDigits) {
  CliRun t = run("family theta --dmax 8 --format json");
  EXPECT_EQ(t.code, 0);
  json rows = json::parse(t.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[4]["report"]["K"], 15);   // d = 6

  fs::path out = scratch("census");
  CliRun c = run("census 2 6 --format json --out-dir " + out.string());
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(fs::exists(out / "census_d2_N6.csv"));
  EXPECT_TRUE(fs::exists(out / "census_d2_N6.json"));
  EXPECT_EQ(run("census 9 2").code, 2);

  CliRun w = run("witness 1.5 0.25 --format json");
  EXPECT_EQ(w.code, 0);
  json wj = json::parse(w.out);
  EXPECT_FALSE(wj["simple"].get<bool>());
  EXPECT_GT(std::stod(wj["beta_approx"].get<std::string>()), 1.25);
  EXPECT_LT(std::stod(wj["beta_approx"].get<std::string>()), 1.75);

  EXPECT_NE(run("admissible \"1 2\"").out.find("not admissible"), std::string::npos);
  CliRun fb = run("frombeta \"5 (1 0)^w\" --format json");
  EXPECT_EQ(json::parse(fb.out)["polynomial"], "x^3-5x^2-2x+5");
}
