#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace deckwork::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "deckwork");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  RunConfig config;
  if (auto code = parse_args(static_cast<int>(argv.size()), argv.data(), config, out, err))
    return {*code, out.str(), err.str()};
  int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Census) {
  auto r = invoke({"census", "--kind", "graph", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"psi\":11,\"d\":11,\"alpha\":0}\n");
  r = invoke({"census", "--kind", "digraph", "--n", "3"});
  EXPECT_EQ(r.out, "{\"psi\":16,\"d\":10,\"alpha\":6}\n");
}

TEST(Cli, VerifyEq1Exhaustive) {
  auto r = invoke({"verify", "eq1", "--n", "4", "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"cases\":1615"), std::string::npos);
}

TEST(Cli, ZeroCaseRunsFail) {
  auto r = invoke({"verify", "recurrence", "--n", "4", "--trials", "0"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"census", "--n", "7"}).code, kExitBudget);
  EXPECT_EQ(invoke({"census", "--n", "11"}).code, kExitUsage);
  EXPECT_EQ(invoke({"census", "--kind", "hypergraph"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"count", "s", "--g", "Bw", "--pattern", "!!"}).code, kExitMalformed);
  EXPECT_EQ(invoke({"rank", "--family", "/nonexistent/file"}).code, kExitIo);
  auto r = invoke({"enum", "--format", "csv"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--format"), std::string::npos);
  EXPECT_EQ(invoke({"count", "c", "--g", "Bw"}).code, kExitUsage);
}

TEST(Cli, Counts) {
  EXPECT_EQ(invoke({"count", "s", "--pattern", "A_", "--g", "Bw", "--format", "text"}).out, "3\n");
  EXPECT_EQ(invoke({"count", "c", "--seq", "A_,A_", "--g", "BW", "--format", "text"}).out, "2\n");
  EXPECT_EQ(invoke({"count", "cstar", "--seq", "A_,A_", "--g", "BW", "--format", "text"}).out, "2\n");
  EXPECT_EQ(invoke({"count", "kocay-sum", "--seq", "A_,A_", "--g", "Bw", "--format", "text"}).out, "6\n");
}

TEST(Cli, MatrixFromFile) {
  const std::string path = ::testing::TempDir() + "deckwork_family.txt";
  {
    std::ofstream f(path);
    f << "# two edges\nA_,A_\nA?,A_,A_\n";
  }
  auto r = invoke({"matrix", "--n", "3", "--family", path, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sequence,B?,BG,BW,Bw\nA_ A_,0,0,2,0\nA? A_ A_,0,2,6,0\n");
  r = invoke({"rank", "--n", "3", "--family", path});
  EXPECT_NE(r.out.find("\"rank\":2"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, CertifyWritesCsv) {
  const std::string m = ::testing::TempDir() + "deckwork_m.csv";
  const std::string k = ::testing::TempDir() + "deckwork_k.csv";
  auto r = invoke({"certify", "--n", "4", "--predicate", "connected", "--csv-m", m, "--csv-k", k});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"certificate\":true"), std::string::npos);
  std::ifstream fm(m), fk(k);
  EXPECT_TRUE(fm.good());
  EXPECT_TRUE(fk.good());
  std::remove(m.c_str());
  std::remove(k.c_str());
  EXPECT_EQ(invoke({"certify", "--kind", "digraph", "--n", "3"}).code, kExitVerificationFailed);
}

TEST(Cli, LegitDeck) {
  auto r = invoke({"legit-deck", "--cards", "Bw,Bw,Bw,B?"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"legitimate\":false"), std::string::npos);
  r = invoke({"legit-deck", "--cards", "A_,A_,A_"});
  EXPECT_NE(r.out.find("\"witness\":\"Bw\""), std::string::npos);
}

TEST(Cli, ReportsIndependentOfJobs) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"certify", "--n", "5", "--shuffle"},
        std::vector<std::string>{"verify", "theorem1", "--kind", "digraph", "--n", "3", "--trials", "20"},
        std::vector<std::string>{"verify", "recurrence", "--n", "4", "--trials", "20"}}) {
    auto one = args, four = args;
    one.insert(one.end(), {"--jobs", "1"});
    four.insert(four.end(), {"--jobs", "4"});
    EXPECT_EQ(invoke(one).out, invoke(four).out);
  }
}
