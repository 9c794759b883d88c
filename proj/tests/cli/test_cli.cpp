#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TORICRES_TOOL) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string job(const std::string& name) { return std::string(TORICRES_JOB_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, VerifyPassesOnAWellFormedJob) {
  const auto r = run("verify " + job("triangle-r3.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"verdict\": \"pass\""), std::string::npos);
}

TEST(Cli, ScheduleJobResolves) { EXPECT_EQ(run("resolve " + job("chain-r4-schedule.json")).code, 0); }

TEST(Cli, CorruptedMatrixExitsTwo) {
  const auto r = run("verify " + job("corrupted-override.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("\"verdict\": \"fail\""), std::string::npos);
}

TEST(Cli, InputErrorsExitThree) {
  EXPECT_EQ(run("verify " + write_temp("broken.json", "{ not json")).code, 3);
  EXPECT_EQ(run("verify " + write_temp("unknown-key.json", R"({"complex": {"vertices": ["1"], "facets": [["1"]]}, "r": 2, "x": 1})")).code, 3);
  EXPECT_EQ(run("verify /nonexistent/job.json").code, 3);
  EXPECT_EQ(run("fuzz --count 0").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
  EXPECT_EQ(run("fixture a9").code, 3);
}

TEST(Cli, FixturesAndFuzz) {
  EXPECT_EQ(run("fixture a1").code, 0);
  EXPECT_EQ(run("fixture a2 --variant figure").code, 0);
  const auto f1 = run("fuzz --seed 3 --count 6");
  const auto f2 = run("fuzz --seed 3 --count 6 --threads 2");
  EXPECT_EQ(f1.code, 0);
  EXPECT_EQ(f1.out, f2.out);
}

TEST(Cli, MatrixExport) {
  const auto r = run("export-matrix --fixture a2 --variant figure --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("vertex,", 0), 0u);
  EXPECT_EQ(run("export-matrix --job " + job("triangle-r3.json") + " --format md").code, 0);
}
