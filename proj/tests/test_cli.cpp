#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tropelim/cli.hpp"

using namespace tropelim;
using testing_support::iv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  io::Json doc() const { return io::Json::parse(out); }
};

Run run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TROPELIM_DATA_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tropelim_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, TropicalizeTwoTetrahedra) {
  auto r = run_cli({"tropicalize-ci", "--input", fixture("two_tetrahedra.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = r.doc();
  EXPECT_EQ(doc["version"], "1");
  EXPECT_EQ(doc["command"], "tropicalize-ci");
  auto t = io::cycle_from_json(doc["cycle"]);
  EXPECT_EQ(t.cells().size(), 6u);
  for (const auto& cell : t.cells()) EXPECT_EQ(cell.mult, 6);
  EXPECT_TRUE(cycles_equal(t, tropical_ci({3, {LatticePolytope::scaled_simplex(3, 3), LatticePolytope::scaled_simplex(3, -2)}})));
}

TEST(Cli, PushforwardThenNewtonGivesHexagon) {
  auto ci = run_cli({"tropicalize-ci", "--input", fixture("two_tetrahedra.json")});
  io::Json pf_in;
  pf_in["version"] = "1";
  pf_in["cycle"] = ci.doc()["cycle"];
  pf_in["matrix"] = io::to_json(IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}));
  auto pf = run_cli({"pushforward"}, pf_in.dump());
  ASSERT_EQ(pf.code, 0) << pf.err;
  io::Json nw_in;
  nw_in["version"] = "1";
  nw_in["cycle"] = pf.doc()["cycle"];
  auto nw = run_cli({"newton"}, nw_in.dump());
  ASSERT_EQ(nw.code, 0) << nw.err;
  EXPECT_EQ(io::polytope_from_json(nw.doc()["polytope"]),
            LatticePolytope::hull({{0, 36}, {6, 24}, {18, 12}, {36, 0}, {30, 12}, {18, 24}}));
}

TEST(Cli, MixedFiberHexagon) {
  auto r = run_cli({"mixed-fiber", "--input", fixture("two_tetrahedra_mixed_fiber.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["polytope"]["vertices"].dump(), "[[0,36],[6,24],[18,12],[18,24],[30,12],[36,0]]");
}

TEST(Cli, CheckBalanceReportsFace) {
  auto r = run_cli({"check-balance", "--input", fixture("single_ray.json")});
  EXPECT_EQ(r.code, 3);
  auto doc = r.doc();
  EXPECT_EQ(doc["error"]["kind"], "NotBalanced");
  EXPECT_EQ(doc["error"]["face"].dump(), "[]");
  EXPECT_EQ(doc["error"]["residual"].dump(), "[1,0]");
  EXPECT_NE(r.err.find("NotBalanced"), std::string::npos);

  io::Json ok;
  ok["version"] = "1";
  ok["cycle"] = io::to_json(testing_support::rays_cycle(2, {{iv({1, 0}), 2}, {iv({0, 1}), 3}, {iv({-2, -3}), 1}}));
  auto good = run_cli({"check-balance"}, ok.dump());
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(good.doc()["balanced"], true);
}

TEST(Cli, ImplicitizePathsAgreeOnFixtures) {
  for (const char* name : {"resultant_triangle.json", "two_segments.json", "plane_curve_r2.json"}) {
    auto a = run_cli({"implicitize", "--input", fixture(name)});
    auto b = run_cli({"implicitize", "--via-graph", "--input", fixture(name)});
    ASSERT_EQ(a.code, 0) << name << a.err;
    ASSERT_EQ(b.code, 0) << name << b.err;
    EXPECT_TRUE(cycles_equal(io::cycle_from_json(a.doc()["cycle"]), io::cycle_from_json(b.doc()["cycle"]))) << name;
  }
}

TEST(Cli, DeltaPrecedence) {
  auto in = read_file(fixture("two_segments.json"));
  auto plain = run_cli({"implicitize"}, in);
  ASSERT_EQ(plain.code, 0);
  auto halved = run_cli({"implicitize", "--delta", "2"}, in);
  ASSERT_EQ(halved.code, 0) << halved.err;
  auto doc_in = io::Json::parse(in);
  doc_in["delta"] = 3;
  auto from_doc = run_cli({"implicitize"}, doc_in.dump());
  EXPECT_EQ(from_doc.code, 3);
  EXPECT_EQ(from_doc.doc()["error"]["kind"], "NonIntegralMultiplicity");
  auto flag_wins = run_cli({"implicitize", "--delta", "2"}, doc_in.dump());
  EXPECT_EQ(flag_wins.code, 0);
  EXPECT_EQ(flag_wins.out, halved.out);
}

TEST(Cli, SeedPrecedenceAndDeterminism) {
  auto in = read_file(fixture("two_tetrahedra_mixed_fiber.json"));
  auto a = run_cli({"mixed-fiber"}, in);
  auto b = run_cli({"mixed-fiber"}, in);
  EXPECT_EQ(a.out, b.out);
  ::setenv("TROPELIM_SEED", "17", 1);
  auto env = run_cli({"mixed-fiber"}, in);
  ::setenv("TROPELIM_SEED", "not a number", 1);
  auto bad_env = run_cli({"mixed-fiber"}, in);
  auto flag = run_cli({"mixed-fiber", "--seed", "5"}, in);
  ::unsetenv("TROPELIM_SEED");
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(env.out, a.out);
  EXPECT_EQ(bad_env.code, 2);
  EXPECT_EQ(flag.code, 0);
  EXPECT_EQ(flag.out, a.out);
}

TEST(Cli, OutputFileIsByteIdenticalAcrossRuns) {
  auto p1 = temp_path("a.json"), p2 = temp_path("b.json");
  ASSERT_EQ(run_cli({"tropicalize-ci", "--input", fixture("two_tetrahedra.json"), "--output", p1.string()}).code, 0);
  ASSERT_EQ(run_cli({"tropicalize-ci", "--input", fixture("two_tetrahedra.json"), "--output", p2.string()}).code, 0);
  EXPECT_EQ(read_file(p1.string()), read_file(p2.string()));
  EXPECT_FALSE(read_file(p1.string()).empty());
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Cli, SvgOnlyForPlanarResults) {
  auto svg = temp_path("fig.svg");
  auto r = run_cli({"implicitize", "--input", fixture("resultant_triangle.json"), "--svg", svg.string()});
  ASSERT_EQ(r.code, 0);
  auto text = read_file(svg.string());
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  EXPECT_NE(text.find("(1,0):2"), std::string::npos);
  std::filesystem::remove(svg);

  auto poly = run_cli({"mixed-fiber", "--input", fixture("two_tetrahedra_mixed_fiber.json"), "--svg", svg.string()});
  ASSERT_EQ(poly.code, 0);
  EXPECT_NE(read_file(svg.string()).find("<polygon"), std::string::npos);
  std::filesystem::remove(svg);

  auto bad = run_cli({"tropicalize-ci", "--input", fixture("two_tetrahedra.json"), "--svg", svg.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(std::filesystem::exists(svg));
}

TEST(Cli, SchemaErrors) {
  EXPECT_EQ(run_cli({"newton"}, "{not json").code, 2);
  EXPECT_EQ(run_cli({"newton"}, R"({"cycle": {}})").code, 2);
  EXPECT_EQ(run_cli({"newton"}, R"({"version": "2"})").code, 2);
  auto missing = run_cli({"newton"}, R"({"version": "1"})");
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.doc()["error"]["kind"], "SchemaError");
  EXPECT_EQ(run_cli({"tropicalize-hypersurface"}, R"({"version": "1", "polytope": {"dim": 2, "vertices": [[0]]}})").code,
            2);
  EXPECT_EQ(run_cli({"fiber"}, R"({"version": "1", "polytope": {"dim": 1, "vertices": [["1/2"]]}})").code, 2);
  EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, MathErrorsExitThree) {
  auto r = run_cli({"tropicalize-hypersurface"}, R"({"version": "1", "polytope": {"dim": 2, "vertices": [[1, 2]]}})");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc()["error"]["kind"], "ZeroDimensional");
  auto fiber = run_cli({"fiber"}, R"({"version": "1", "c": 2,
      "polytope": {"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]},
      "matrix": {"rows": 1, "cols": 2, "entries": [[1, 0]]}})");
  ASSERT_EQ(fiber.code, 0) << fiber.err;
  EXPECT_EQ(fiber.doc()["polytope"]["vertices"].dump(), R"([[0],["1/2"]])");
}

TEST(Io, RoundTripsAndBigIntegers) {
  auto t = testing_support::rays_cycle(2, {{iv({1, 0}), 2}, {iv({0, 1}), 3}, {iv({-2, -3}), 1}});
  EXPECT_EQ(io::cycle_from_json(io::to_json(t)).cells(), t.cells());
  auto line = TropicalCycle(2, 1, {{Cone::from_generators({}, {iv({1, 1})}, 2), 4}});
  EXPECT_EQ(io::to_json(line)["cones"][0]["rays"].dump(), "[[1,1],[-1,-1]]");
  EXPECT_EQ(io::cycle_from_json(io::to_json(line)).cells(), line.cells());
  Integer big = Integer(1) << 80;
  EXPECT_TRUE(io::to_json(big).is_string());
  EXPECT_EQ(io::integer_from_json(io::to_json(big), "x"), big);
  EXPECT_EQ(io::to_json(Integer(-5)).dump(), "-5");
  EXPECT_EQ(io::to_json(Rational(-3) / 4).dump(), R"("-3/4")");
  EXPECT_EQ(io::rational_from_json(io::Json("6/-4"), "x"), Rational(-3) / 2);
  auto m = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_THROW(io::rational_from_json(io::Json("1/0"), "x"), io::SchemaError);
}
