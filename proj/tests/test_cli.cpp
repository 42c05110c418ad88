#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  Result r;
  const std::string cmd = std::string(FANOGW_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, VerifyAll) {
  Result r = run("verify all");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("derived 52, paper prints 2, matrix-consistent"), std::string::npos);
}

TEST(Cli, VerifyCorrupted) {
  Result r = run("verify V10 --corrupt V10.a01");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("mismatch: V10.a01"), std::string::npos);
}

TEST(Cli, MatrixJson) {
  Result r = run("matrix --variety V14 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matrix"][1], (nlohmann::json{"1", "5", "140", "924"}));
}

TEST(Cli, InvertFromPeriods) {
  Result r = run("invert --periods 39,220,6291/4,8766,524413/12 --deg 10 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matrix"][0], (nlohmann::json{"0", "156", "3600", "33120"}));
}

TEST(Cli, D3WithLambda) {
  Result r = run("d3 --variety V10 --lambda 0 --order 4 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d3"]["solution"], (nlohmann::json{"1", "0", "78", "1320"}));
  EXPECT_EQ(j["d3"]["indicial"], "m^3");
}

TEST(Cli, ReportIsByteIdentical) {
  Result a = run("report --variety V14 --format json");
  Result b = run("report --variety V14 --format json");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConfigFile) {
  const std::string path = testing::TempDir() + "fanogw_quartic.json";
  std::ofstream(path) << R"({"name": "quartic", "ambient": {"type": "projective", "n": 5}, "degrees": [4]})";
  Result r = run("lefschetz --variety " + path + " --order 3 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["shift"], "24");
}

TEST(Cli, ExitCodes) {
  const std::string path = testing::TempDir() + "fanogw_notfano.json";
  std::ofstream(path) << R"({"ambient": {"type": "grassmannian", "r": 2, "n": 5}, "degrees": [3, 3]})";
  Result notfano = run("report --variety " + path);
  EXPECT_EQ(notfano.code, 2);
  EXPECT_NE(notfano.out.find("NotFano"), std::string::npos);

  Result degenerate = run("invert --periods 0,0,0,0,0 --deg 10");
  EXPECT_EQ(degenerate.code, 3);
  EXPECT_NE(degenerate.out.find("[solver] DegenerateLocus"), std::string::npos);

  EXPECT_EQ(run("matrix --variety /nonexistent.json").code, 2);
  EXPECT_EQ(run("matrix --format yaml").code, 2);
  EXPECT_EQ(run("invert --periods 1,2,3").code, 2);
}
