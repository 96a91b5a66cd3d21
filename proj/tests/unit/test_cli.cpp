#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" SCF_CLI_PATH "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST(Cli, Bracket) {
  CliRun r = run("bracket --alg n2 J:1 Gp:-1/2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "Gp:1/2");
}

TEST(Cli, Rank) {
  CliRun r = run("rank --alg n3 --delta -3/4 --lambda 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), R"({"rank":12,"case":"4D+L+2=0"})");
}

TEST(Cli, RankJsonHasSchema) {
  CliRun r = run("rank --alg n2 --delta 1/2 --lambda 1 --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["rank"]["rank"], 2);
}

TEST(Cli, SingularVectorCheck) {
  EXPECT_EQ(run("singular --alg n3 --delta 1/2 --lambda 2 --vector a2").code, 0);
  EXPECT_EQ(run("singular --alg n3 --delta 1/3 --lambda 2 --vector a2").code, 1);
  EXPECT_EQ(run("singular --alg n2 --delta sym --lambda 1 --vector Gp_v").code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("rank --delta 1 --lambda 1").code, 2);
  EXPECT_EQ(run("rank --alg nope --delta 1 --lambda 1").code, 2);
  EXPECT_EQ(run("rank --alg n3 --delta x --lambda 1").code, 2);
  EXPECT_EQ(run("bracket --alg n2 J:1 Gp:1").code, 2);
  EXPECT_EQ(run("rank --alg n3 --delta 1 --lambda 1 --format xml").code, 2);
  EXPECT_EQ(run("verify-paper --suite nope").code, 2);
}

TEST(Cli, CutoffFromEnvironment) {
  CliRun r = run("rank --alg n2 --delta 1/2 --lambda 1 --json", "SCF_CUTOFF2=10");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["cutoff2"], 10);
  EXPECT_EQ(run("rank --alg n2 --delta 1/2 --lambda 1", "SCF_CUTOFF2=banana").code, 2);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run("verify-paper --suite n2").code, 0);
  EXPECT_EQ(run("verify-paper --suite lambda").code, 0);
  CliRun n3 = run("verify-paper --suite n3");
  EXPECT_EQ(n3.code, 1);
  EXPECT_NE(n3.out.find("holds as"), std::string::npos);
  EXPECT_EQ(run("verify-paper --suite n3 --allow-known-misprints").code, 0);
}

TEST(Cli, TablesMatchGoldenFiles) {
  CliRun r = run(std::string("tables --check \"") + SCF_TABLES_DIR + "\"");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, TablesWriteFiles) {
  auto dir = std::filesystem::temp_directory_path() / "scf_cli_tables";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(run("tables --jobs 2 --out \"" + dir.string() + "\"").code, 0);
  for (const char* f : {"classification.json", "classification.md", "lambda_n3.json", "lambda_n4.json"})
    EXPECT_EQ(slurp(dir / f), slurp(std::filesystem::path(SCF_TABLES_DIR) / f)) << f;
  std::filesystem::remove_all(dir);
}
