#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mckay/cli/cli.hpp"

using json = nlohmann::json;
using mckay::cli::run;
namespace ec = mckay::cli::exit_code;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = call(args);
  auto j = json::parse(r.out);
  j.erase("wall_time_ms");
  return j;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, GroupFixtures) {
  auto r = call({"group", "--fixture", "binary-tetrahedral"});
  EXPECT_EQ(r.code, ec::ok);
  EXPECT_NE(r.out.find("classes=7"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("invariant=3"), std::string::npos);

  auto c = call_json({"group", "--fixture", "cyclic", "--n", "4", "--action", "swap"});
  EXPECT_EQ(c["results"]["invariant"], 2);
  EXPECT_EQ(c["status"], "pass");

  auto t = call_json({"group", "--gens", "[[z1^0]]"});
  EXPECT_EQ(t["results"]["order"], 1);
  EXPECT_EQ(t["results"]["classes"], 1);
}

TEST(Cli, FlipParityIsAnOpenQuestion) {
  auto j = call_json({"group", "--fixture", "cyclic", "--n", "4", "--action", "flip"});
  EXPECT_EQ(j["checks"]["flip-parity"]["status"], "open-question");
  EXPECT_EQ(j["results"]["invariant"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"group", "--gens", "[[z4^1,0],[0"}).code, ec::parse_error);
  EXPECT_EQ(call({"group", "--fixture", "binary-tetrahedral", "--cap", "3"}).code, ec::cap_exceeded);
  EXPECT_EQ(call({"toric", "--n", "4", "--gens", "", "--perm", "(1 2)"}).code, ec::unsupported);
  EXPECT_EQ(call({"frobnicate"}).code, ec::parse_error);
  EXPECT_EQ(call({"verify", "--only", "nonsense"}).code, ec::parse_error);
  EXPECT_EQ(call({"orbifold", "--sheet", "/nonexistent.sheet"}).code, ec::parse_error);
  auto r = call({"toric", "--n", "3", "--gens", "1,2,3@6", "--perm", "(1 2)"});
  EXPECT_NE(r.code, ec::ok);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ToricFixtures) {
  auto j = call_json({"toric", "--fixture", "z5sq-cycle"});
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["results"]["L"], 1);
  EXPECT_EQ(j["results"]["simplices"], 25);

  auto s = call_json({"toric", "--n", "2", "--gens", "1,1@2", "--perm", "(1 2)"});
  EXPECT_EQ(s["results"]["L"], 2);
  EXPECT_EQ(s["results"]["fixed"], 2);

  auto e = call_json({"toric", "--n", "2", "--gens", "", "--perm", "(1 2)"});
  EXPECT_EQ(e["results"]["L"], 1);
}

TEST(Cli, TriangulationRoundTrip) {
  const auto path = temp_path("z5.tri.json");
  EXPECT_EQ(call({"toric", "--fixture", "z5sq-cycle", "--out", path}).code, ec::ok);
  auto r = call_json({"toric", "--triangulation", path, "--perm", "(1 2 3)"});
  EXPECT_EQ(r["status"], "pass");
  EXPECT_EQ(r["results"]["L"], 1);

  std::ofstream(temp_path("bad.tri.json")) << R"({"n": 3, "generators": "", "vertices": [["1","0","x"]], "simplices": []})";
  auto bad = call({"toric", "--triangulation", temp_path("bad.tri.json"), "--perm", "(1 2 3)"});
  EXPECT_EQ(bad.code, ec::parse_error);
  EXPECT_NE(bad.err.find("$.vertices[0][2]"), std::string::npos) << bad.err;
}

TEST(Cli, OrbifoldFixtures) {
  auto q = call_json({"orbifold", "--fixture", "quintic-swap"});
  EXPECT_EQ(q["status"], "pass");
  EXPECT_EQ(q["results"]["L"], 56);
  EXPECT_EQ(q["results"]["e"], 200);
  EXPECT_EQ(q["results"]["decomposition"]["identity"]["total"], 8);

  auto lt = call_json({"orbifold", "--fixture", "lt-complete-intersection"});
  EXPECT_EQ(lt["results"]["L"], 16);

  auto p = call_json({"orbifold", "--fixture", "point"});
  EXPECT_EQ(p["results"]["L"], 1);
}

TEST(Cli, SheetRoundTrip) {
  const auto path = temp_path("swap.sheet");
  EXPECT_EQ(call({"orbifold", "--fixture", "quintic-swap-two-pairs", "--out", path}).code, ec::ok);
  auto j = call_json({"orbifold", "--sheet", path});
  EXPECT_EQ(j["results"]["L"], 8);

  std::ofstream(temp_path("broken.sheet")) << "{\n \"name\": \"x\",\n \"group_order\": [\n}";
  auto r = call({"orbifold", "--sheet", temp_path("broken.sheet")});
  EXPECT_EQ(r.code, ec::parse_error);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST(Cli, Deterministic) {
  for (auto args : std::vector<std::vector<std::string>>{{"toric", "--fixture", "z5sq-cycle"},
                                                         {"orbifold", "--fixture", "lt-complete-intersection"},
                                                         {"verify", "--seed", "3", "--only", "smith,toric3", "--random", "5"}})
    EXPECT_EQ(call_json(args), call_json(args));
}

TEST(Cli, VerifySubsets) {
  auto j = call_json({"verify", "--seed", "11", "--only", "cyclotomic,ade,flip-parity,blockdet", "--max-n", "12"});
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["checks"]["flip-parity-statement"]["status"], "open-question");
  EXPECT_FALSE(j["checks"].contains("orbifold"));
  EXPECT_TRUE(j["checks"].contains("ade"));
}
