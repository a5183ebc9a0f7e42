#include "cli.hpp"

#include "sposet/complex.hpp"
#include "sposet/shelling.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace sposet {
namespace {

using nlohmann::json;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "sposet");
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sposet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

TEST(Cli, DecideInfeasible) {
  const CliResult r = run({"decide", "--dim", "3", "--h", "1,0,3,1,0"});
  EXPECT_EQ(r.code, 2);
  const json j = r.doc();
  EXPECT_EQ(j["verdict"], "infeasible");
  bool named = false;
  for (const auto& c : j["conditions"]) named = named || (c["name"] == "dim3-clause3" && c["status"] == "fail");
  EXPECT_TRUE(named);
}

TEST(Cli, OpenVector) {
  EXPECT_EQ(run({"check", "--h", "1,1,1,5,1,1,1,2,1,0"}).code, 0);
  const CliResult r = run({"decide", "--dim", "8", "--h", "1,1,1,5,1,1,1,2,1,0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc()["verdict"], "unknown");
}

TEST(Cli, CheckFailure) {
  const CliResult r = run({"check", "--h", "1,0,2,2,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.doc()["verdict"], "fail");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"check"}).code, 1);
  EXPECT_EQ(run({"check", "--h", "1,x"}).code, 1);
  EXPECT_EQ(run({"decide", "--dim", "3", "--h", "1,0,0"}).code, 1);
  EXPECT_EQ(run({"verify", "--complex", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--dim", "9", "--max-facets", "2"}).code, 1);
  EXPECT_EQ(run({"check", "--help"}).code, 0);
}

TEST(Cli, Enumerate) {
  const CliResult r = run({"enumerate", "--dim", "3", "--max-facets", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["count"], 4);
}

TEST_F(CliFiles, ConstructThenVerify) {
  const CliResult c = run({"construct", "--h", "1,2,0,0,1,0", "--out", path("c.json"), "--shelling", path("s.json")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.doc()["method"], "thm6.2-case1");
  const CliResult v = run({"verify", "--complex", path("c.json"), "--shelling", path("s.json")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.doc()["verdict"], "ball");
  EXPECT_EQ(v.doc()["shelling"]["h_vector"], json::parse("[1,2,0,0,1,0]"));

  const CliResult b = run({"boundary", "--complex", path("c.json"), "--out", path("b.json")});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.doc()["boundary_h_vector"], json::parse("[1,2,2,2,1]"));
  EXPECT_EQ(b.doc()["matches"], true);
  const CliResult vb = run({"verify", "--complex", path("b.json")});
  EXPECT_EQ(vb.code, 0);
  EXPECT_EQ(vb.doc()["verdict"], "valid");

  const CliResult h = run({"hilbert", "--complex", path("c.json"), "--seed", "4"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.doc()["seeds"], json::parse("[4,5,6]"));
  EXPECT_EQ(h.doc()["matches"], true);
}

TEST_F(CliFiles, VerifyRejectsBadShelling) {
  ASSERT_EQ(run({"construct", "--h", "1,1,1,0", "--out", path("c.json"), "--shelling", path("s.json")}).code, 0);
  const auto order = load_shelling(path("s.json"));
  save_shelling({order[0], order[2], order[1]}, path("bad.json"));
  const CliResult v = run({"verify", "--complex", path("c.json"), "--shelling", path("bad.json")});
  EXPECT_EQ(v.code, 2);
  EXPECT_EQ(v.doc()["verdict"], "not-shellable");
  EXPECT_EQ(v.doc()["shelling"]["step"], 1);
}

TEST_F(CliFiles, VerifyReportsInvalidComplex) {
  const std::string text =
      R"({"dim":1,"faces":[{"boundary":{},"id":0,"rank":0,"vertices":[]},{"boundary":{"0":0},"id":1,"rank":1,"vertices":[0]},)"
      R"({"boundary":{"0":1,"1":1},"id":2,"rank":2,"vertices":[0,1]}]})";
  {
    std::FILE* f = std::fopen(path("bad.json").c_str(), "w");
    ASSERT_NE(f, nullptr);
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
  const CliResult v = run({"verify", "--complex", path("bad.json")});
  EXPECT_EQ(v.code, 2);
  EXPECT_EQ(v.doc()["verdict"], "invalid");
  EXPECT_FALSE(v.doc()["violations"].empty());
}

TEST(Cli, Fuzz) {
  const CliResult r = run({"fuzz", "--dim", "3", "--facets", "10", "--seed", "3", "--count", "4"});
  EXPECT_EQ(r.code, 0);
  const json j = r.doc();
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["results"].size(), 4U);
  EXPECT_EQ(j["results"][0]["seed"], 3);
}

TEST(Cli, ConstructInfeasible) {
  const CliResult r = run({"construct", "--h", "1,0,3,1,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.doc()["status"], "infeasible");
}

}  // namespace
}  // namespace sposet
