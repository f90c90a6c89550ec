#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support/golden.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

// Runs the CLI, capturing stdout; stderr is discarded.
Run cli(const std::string& args) {
  std::string cmd = std::string("\"") + VK_CLI + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempCase {
 public:
  explicit TempCase(const std::string& text) {
    path_ = fs::temp_directory_path() / ("vk_cli_" + std::to_string(counter_++) + "_" +
                                         std::to_string(::getpid()) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempCase() { fs::remove(path_); }
  std::string arg() const { return "\"" + path_.string() + "\""; }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string case_path(const std::string& stem) { return std::string("\"") + VK_CASES_DIR + "/" + stem + ".json\""; }

TEST(Cli, RunsACase) {
  auto r = cli("run " + case_path("power_near_threshold_scaling"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("short_circuit"), std::string::npos);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const char* stem : {"testability_c17_faults", "effort_fork", "memory_read_disturb"}) {
    auto a = cli("run " + case_path(stem)), b = cli("run " + case_path(stem));
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << stem;
    auto t = cli("run --format table " + case_path(stem));
    EXPECT_EQ(t.out, cli("run --format table " + case_path(stem)).out) << stem;
  }
}

TEST(Cli, PrepareErrorsExitOne) {
  TempCase unknown(R"({"schema": 1, "analysis": "no_such_analysis", "params": {}})");
  EXPECT_EQ(cli("run " + unknown.arg()).code, 1);
  TempCase missing(R"({"schema": 1, "analysis": "voltage_scaling", "params": {"v_from": 1.0}})");
  EXPECT_EQ(cli("run " + missing.arg()).code, 1);
  EXPECT_EQ(cli("validate " + missing.arg()).code, 1);
  TempCase schema(R"({"schema": 2, "analysis": "voltage_scaling", "params": {}})");
  EXPECT_EQ(cli("run " + schema.arg()).code, 1);
  EXPECT_EQ(cli("run /nonexistent/case.json").code, 1);
  EXPECT_EQ(cli("frobnicate").code, 1);
}

TEST(Cli, AnalysisErrorsExitTwo) {
  TempCase below(R"({"schema": 1, "analysis": "voltage_scaling",
                     "params": {"v_from": 1.0, "v_to": 0.3, "v_t": 0.2}})");
  EXPECT_EQ(cli("validate " + below.arg()).code, 0);
  EXPECT_EQ(cli("run " + below.arg()).code, 2);
}

TEST(Cli, ListsAnalyses) {
  auto r = cli("list");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("voltage_scaling"), std::string::npos);
}

TEST(Cli, EveryCaseValidatesAndNeverFailsToPrepare) {
  auto cases = vk::testing::load_cases(VK_CASES_DIR);
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    EXPECT_EQ(cli("validate " + case_path(c.name)).code, 0) << c.name;
    EXPECT_NE(cli("run " + case_path(c.name)).code, 1) << c.name;
  }
}

}  // namespace
