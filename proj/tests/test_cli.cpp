#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = signull::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempGraph {
 public:
  explicit TempGraph(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("signull_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path_) << text;
  }
  ~TempGraph() { std::filesystem::remove(path_); }
  [[nodiscard]] std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

const char* kUnbalancedC6 = "6 6\n0 1 +\n1 2 +\n2 3 +\n3 4 +\n4 5 +\n0 5 -\n";

}  // namespace

TEST(CliTest, Nullity) {
  TempGraph g(kUnbalancedC6);
  auto r = run({"nullity", g.path()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=6 rank=4 nullity=2\n");
}

TEST(CliTest, Balance) {
  TempGraph bal("4 4\n0 1 -\n1 2 -\n2 3 +\n0 3 +\n");
  auto r = run({"balance", bal.path()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "balanced theta=+-++\n");

  TempGraph unbal(kUnbalancedC6);
  auto u = run({"balance", unbal.path()});
  EXPECT_EQ(u.code, 0);
  EXPECT_EQ(u.out.rfind("unbalanced cycle=", 0), 0u);
}

TEST(CliTest, Classify) {
  TempGraph g("4 5\n0 1 -\n0 2 +\n1 2 +\n0 3 +\n1 3 +\n");
  auto r = run({"classify", g.path()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = signull::Json::parse(r.out);
  EXPECT_EQ(doc["kind"], "classification");
  EXPECT_EQ(doc["body"]["nullity"], 1);
  EXPECT_EQ(doc["body"]["rank3"]["matches"], true);
  EXPECT_EQ(doc["body"]["rank2"]["matches"], false);
  EXPECT_EQ(doc["body"]["bicyclic_base"]["name"], "theta(2,2,1)");
  EXPECT_EQ(doc["body"]["unbalanced_bicyclic"]["is_extremal"], true);
}

TEST(CliTest, Reduce) {
  TempGraph g("4 3\n0 1 +\n1 2 +\n2 3 -\n");
  auto r = run({"reduce", g.path()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = signull::Json::parse(r.out);
  EXPECT_EQ(doc["body"]["reduced"], "0 0\n");
  EXPECT_EQ(doc["body"]["trace"].size(), 2u);
  EXPECT_EQ(doc["body"]["trace"][0]["op"], "delete-pendant-pair");

  TempGraph c6(kUnbalancedC6);
  auto c = run({"reduce", c6.path(), "--contract"});
  ASSERT_EQ(c.code, 0);
  auto cdoc = signull::Json::parse(c.out);
  EXPECT_EQ(cdoc["body"]["input_nullity"], cdoc["body"]["reduced_nullity"]);
}

TEST(CliTest, VerifyIsByteIdentical) {
  auto a = run({"verify", "--theorem", "theorem3.1", "--max-n", "6"});
  auto b = run({"verify", "--theorem", "unbalanced-bicyclic", "--max-n", "6", "--threads", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  auto da = signull::Json::parse(a.out);
  EXPECT_EQ(da["body"]["ok"], true);
  EXPECT_FALSE(da["body"].contains("elapsed_seconds"));
  EXPECT_EQ(a.out, b.out);
  auto t = run({"verify", "--theorem", "rank2", "--max-n", "4", "--timing"});
  EXPECT_TRUE(signull::Json::parse(t.out)["body"].contains("elapsed_seconds"));
}

TEST(CliTest, Catalog) {
  auto r = run({"catalog", "--n", "4", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = signull::Json::parse(r.out);
  EXPECT_EQ(doc["kind"], "nullity-catalog");
  EXPECT_EQ(doc["body"]["entry_count"], 1);
  auto bal = run({"catalog", "--n", "4", "--k", "3", "--balanced-only"});
  EXPECT_EQ(signull::Json::parse(bal.out)["body"]["entries"][0]["switching_classes_achieving"], 1);
}

TEST(CliTest, Convert) {
  TempGraph g("# c\n3 1\n1 2 -\n");
  auto e = run({"convert", g.path(), "--to", "edges"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "3 1\n1 2 -\n");
  auto d = run({"convert", g.path()});
  EXPECT_EQ(d.out.rfind("graph G {", 0), 0u);
  EXPECT_NE(d.out.find("style=dashed"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "nope", "--max-n", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "rank2", "--max-n", "11"}).code, 2);
  EXPECT_EQ(run({"catalog", "--n", "6", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"convert", "x", "--to", "png"}).code, 2);

  auto missing = run({"nullity", "/nonexistent/graph.txt"});
  EXPECT_EQ(missing.code, 3);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  TempGraph bad("3 1\n0 1 x\n");
  auto parse = run({"nullity", bad.path()});
  EXPECT_EQ(parse.code, 3);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);

  EXPECT_EQ(run({"--help"}).code, 0);
}
