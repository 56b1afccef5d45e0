#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "cgrad/serialize.hpp"

using namespace cgrad;

namespace {

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  std::string cmd = std::string(CGRAD_BIN) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '\n') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, FundamentalGroupOfThreePoints) {
  Invocation r = run("pi1 k3");
  EXPECT_EQ(r.status, 0);
  auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls[0], "C2 x C3");
  EXPECT_EQ(ls[1], "certification: exact");
}

TEST(Cli, K4TableAsCsv) {
  Invocation r = run("report k4-table --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"group,trivial_dimension,other_dimensions", "1,4,0",
                                                     "C2 * C2,2,1;1", "C3,2,1;1", "C2,3,1", "C4,1,1;1;1",
                                                     "C2 x C2,1,1;1;1"}));
}

TEST(Cli, BadGradingExitsWithWitness) {
  std::string path = temp_path("bad.json");
  std::ofstream(path) << R"({"schema": 1, "kind": "grading", "name": "bad", "field": "Q",
    "group": {"kind": "cyclic", "order": 2},
    "algebra": {"construction": "matrix", "n": 2},
    "degrees": ["t", "1", "1", "1"]})";
  Invocation r = run("verify grading --file " + path + " --format json");
  EXPECT_EQ(r.status, 2);
  Json j = Json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["violation"]["offending"], "E11");
  EXPECT_EQ(j["violation"]["outer"], "E11");
  EXPECT_EQ(j["violation"]["inner"], "E11");
  EXPECT_EQ(run("verify grading --file " + path).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("pi1").status, 1);
  EXPECT_EQ(run("pi1 k9").status, 1);
  EXPECT_EQ(run("pi1 k3 --bogus").status, 1);
  EXPECT_EQ(run("pi1 k3 --format xml").status, 1);
  EXPECT_EQ(run("catalog build nothing").status, 1);
  EXPECT_EQ(run("verify grading --file /nonexistent.json").status, 1);
  EXPECT_EQ(run("report no-universal Tn:3").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, JsonRoundTrips) {
  for (const std::string name : {"M2/fine", "M3/free", "k4/C2*C2", "trunc3/C3"}) {
    Invocation r = run("catalog build " + name + " --format json");
    ASSERT_EQ(r.status, 0) << name;
    Json j = Json::parse(r.out);
    EXPECT_EQ(grading_to_json(grading_from_json(j)), j) << name;
  }
  for (const std::string tag : {"k3", "M2", "trunc:2"}) {
    Json j = Json::parse(run("pi1 " + tag + " --format json").out);
    EXPECT_EQ(pi1_to_json(pi1_from_json(j)), j) << tag;
  }
  Json t = Json::parse(run("report k4-table --format json").out);
  EXPECT_EQ(table_to_json(table_from_json(t)), t);
  Json c = Json::parse(run("smash M2/free --radius 3 --format json").out);
  EXPECT_EQ(covering_to_json(covering_from_json(c)), c);
  Json n = Json::parse(run("report no-universal M2 --format json").out);
  EXPECT_EQ(no_universal_to_json(no_universal_from_json(n)), n);
}

TEST(Cli, BuiltGradingVerifies) {
  std::string path = temp_path("fine.json");
  ASSERT_EQ(run("catalog build M3/fine --format json --out " + path).status, 0);
  Invocation r = run("verify grading --file " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out)[0], "valid grading by C3 x C3; connected: yes");
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string cmd :
       {"catalog verify --all --seed 7 --format json", "pi1 k4 --format json", "smash trunc3/Z --format json",
        "report no-universal trunc:3 --format json", "catalog list --format json"}) {
    Invocation a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.status, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}
