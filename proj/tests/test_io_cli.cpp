#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "toriccap/cli.hpp"
#include "toriccap/error.hpp"
#include "toriccap/io.hpp"

namespace toriccap {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kExample4 = R"({"kind":"example_r","r":"4"})";

TEST(Io, ParsesEveryKind) {
  EXPECT_EQ(lower_domain(parse_domain(kExample4)),
            RationalPolytope::from_vertices({{0, 0}, {1, 0}, {make_rational(3, 4), 1}, {0, 1}}));
  EXPECT_EQ(lower_domain(parse_domain(R"({"kind":"polytope","vertices":[["0","0"],["1","0"],["0","1"]]})")),
            RationalPolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(lower_domain(parse_domain(R"({"kind":"polydisk","a":"1","b":"2"})")),
            RationalPolytope::from_vertices({{0, 0}, {1, 0}, {1, 2}, {0, 2}}));
  EXPECT_EQ(lower_domain(parse_domain(R"({"kind":"ellipsoid","a":"1/2","b":3})")),
            RationalPolytope::from_vertices({{0, 0}, {make_rational(1, 2), 0}, {0, 3}}));
  EXPECT_EQ(lower_domain(parse_domain(R"({"kind":"ball","capacity":"2"})")),
            RationalPolytope::from_vertices({{0, 0}, {2, 0}, {0, 2}}));
}

TEST(Io, ErrorsNameTheProblem) {
  auto message = [](const char* text) {
    try {
      parse_domain(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("{\n\"kind\": }").find("line 2"), std::string::npos);
  EXPECT_NE(message(R"({"kind":"polytope","vertices":[["0","0"],["1","q"]]})").find("vertices[1][1]"),
            std::string::npos);
  EXPECT_NE(message(R"({"kind":"ellipsoid","a":"1"})").find("'b'"), std::string::npos);
  EXPECT_NE(message(R"({"kind":"ball","capacity":"-1/2"})").find("positive"), std::string::npos);
}

TEST(Io, DomainRoundTrip) {
  for (const char* text : {kExample4, R"({"kind":"ball","capacity":"5/3"})",
                           R"({"kind":"polydisk","a":"1","b":"7/2"})",
                           R"({"kind":"ellipsoid","a":"2","b":"1"})",
                           R"({"kind":"polytope","vertices":[["0","0"],["1/2","0"],["0","1"]]})"}) {
    DomainSpec spec = parse_domain(text);
    EXPECT_EQ(parse_domain(to_json(spec).dump()), spec) << text;
  }
}

TEST(Io, ReportRoundTrip) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    for (const auto& row : capacity_reports(testing::random_domain(rng), 6)) {
      CapacityReport back = report_from_json(nlohmann::json::parse(to_json(row).dump()));
      EXPECT_EQ(back.k, row.k);
      EXPECT_EQ(back.lk, row.lk);
      EXPECT_EQ(back.uk, row.uk);
      EXPECT_EQ(back.gh, row.gh);
      EXPECT_EQ(back.exact, row.exact);
      EXPECT_EQ(back.lk_witness, row.lk_witness);
      EXPECT_EQ(back.uk_witness, row.uk_witness);
    }
  }
}

TEST(Io, ConstraintParsing) {
  TangencyConstraint p = parse_constraint(R"({"points":[[0],[1,2]],"dim":4})");
  EXPECT_EQ(p.point_count(), 2u);
  EXPECT_EQ(parse_constraint(to_json(p).dump()), p);
  EXPECT_THROW(parse_constraint(R"({"points":[[2,1]],"dim":4})"), Error);
}

TEST(Cli, CapsReproducesReferenceColumns) {
  CliRun r = cli({"caps", kExample4, "--kmax", "5", "--quantities", "lk,gh", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,lk,gh\n1,1,1\n2,7/4,7/4\n3,2,5/2\n4,11/4,13/4\n5,3,4\n");
}

TEST(Cli, CapsBallAndSquare) {
  CliRun ball = cli({"caps", R"({"kind":"ball","capacity":"1"})", "--kmax", "6", "--quantities", "lk",
                  "--format", "csv"});
  EXPECT_EQ(ball.out, "k,lk\n1,1\n2,1\n3,2\n4,2\n5,2\n6,3\n");
  CliRun sq = cli({"caps", R"({"kind":"polydisk","a":"1","b":"1"})", "--kmax", "4", "--quantities",
                "lk,uk", "--format", "csv", "--oracle-check"});
  EXPECT_EQ(sq.code, 0);
  EXPECT_EQ(sq.out, "k,lk,uk\n1,1,1\n2,2,2\n3,2,2\n4,3,3\n");
}

TEST(Cli, PlotColumns) {
  CliRun sq = cli({"plot", R"({"kind":"polydisk","a":"1","b":"1"})", "--kmax", "4"});
  EXPECT_EQ(sq.out, "k,lk,uk,gh,slope_k\n1,1,1,1,1/2\n2,2,2,2,1\n3,2,2,3,3/2\n4,3,3,4,2\n");
  CliRun ball = cli({"plot", R"({"kind":"ball","capacity":"1"})", "--kmax", "3"});
  EXPECT_NE(ball.out.find("1,1,1,1,1/3"), std::string::npos);
  EXPECT_NE(ball.out.find("3,2,"), std::string::npos);
  EXPECT_NE(ball.out.find(",1\n"), std::string::npos);
}

TEST(Cli, FanMarksInsertedRays) {
  CliRun r = cli({"fan", kExample4, "--resolve", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "ray,support,weight\n(1,0)*,1,2\n(4,1),4,6\n(3,1)*,13/4,5\n(2,1)*,5/2,4\n(1,1)*,7/4,3\n"
            "(0,1),1,2\n(-1,0),0,2\n(0,-1),0,2\n");
  CliRun tri = cli({"fan", R"({"kind":"ball","capacity":"1"})", "--resolve", "--format", "csv"});
  EXPECT_EQ(tri.out.find('*'), std::string::npos);
}

TEST(Cli, Interval) {
  CliRun exact = cli({"interval", kExample4, R"({"points":[[0]],"dim":4})"});
  EXPECT_NE(exact.out.find("[1, 1] exact"), std::string::npos);
  CliRun rect = cli({"interval", R"({"kind":"polydisk","a":"1","b":"2"})", R"({"points":[[1]],"dim":4})"});
  EXPECT_NE(rect.out.find("[2, 3] inexact"), std::string::npos);
  CliRun non_lax = cli({"interval", kExample4, R"({"points":[[0,0]],"dim":4})"});
  EXPECT_EQ(non_lax.code, 0);
  EXPECT_NE(non_lax.out.find("lower bound = 7/4"), std::string::npos);
  EXPECT_NE(non_lax.err.find("warning"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"caps", R"({"kind":"blob"})"}).code, kExitParse);
  EXPECT_EQ(cli({"caps", R"({"kind":"ball","capacity":"0"})"}).code, kExitParse);
  EXPECT_EQ(cli({"caps", "/nonexistent/domain.json"}).code, kExitParse);
  EXPECT_EQ(cli({"caps", kExample4, "--quantities", "lk,zeta"}).code, kExitParse);
  EXPECT_EQ(cli({"bogus"}).code, kExitParse);
  const char* slanted = R"({"kind":"polytope","vertices":[["0","0"],["1","0"],["2","1"],["0","1"]]})";
  CliRun unsupported = cli({"caps", slanted});
  EXPECT_EQ(unsupported.code, kExitUnsupported);
  EXPECT_NE(unsupported.err.find("--oracle-only"), std::string::npos);
  CliRun oracle = cli({"caps", slanted, "--oracle-only", "--kmax", "3", "--format", "csv"});
  EXPECT_EQ(oracle.code, kExitOk);
  EXPECT_EQ(cli({"caps", slanted, "--oracle-only", "--quantities", "slope"}).code, kExitUnsupported);
}

TEST(Cli, GoldenMismatchExitsThree) {
  auto dir = std::filesystem::temp_directory_path() / "toriccap_golden_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.json")
      << R"({"name":"bad","cases":[{"domain":{"kind":"ball","capacity":"1"},"k_max":2,"expect":{"lk":["1","2"]}}]})";
  CliRun r = cli({"verify", "--golden", (dir / "bad.json").string()});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_NE(r.out.find("FAIL bad/0: lk at k = 2"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, GoldenFixturesPass) {
  CliRun r = cli({"verify", "--golden", TORICCAP_FIXTURE_DIR});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Cli, ConfigFileWithFlagOverride) {
  auto path = std::filesystem::temp_directory_path() / "toriccap_config_test.json";
  std::ofstream(path) << R"({"k_max": 2, "quantities": ["lk"], "format": "json"})";
  CliRun from_file = cli({"caps", kExample4, "--config", path.string()});
  auto j = nlohmann::json::parse(from_file.out);
  EXPECT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][1]["lk"], "7/4");
  CliRun overridden = cli({"caps", kExample4, "--config", path.string(), "--format", "csv", "--kmax", "3"});
  EXPECT_EQ(overridden.out, "k,lk\n1,1\n2,7/4\n3,2\n");
  std::filesystem::remove(path);
}

TEST(Cli, OutWritesFile) {
  auto path = std::filesystem::temp_directory_path() / "toriccap_out_test.csv";
  CliRun r = cli({"caps", kExample4, "--kmax", "1", "--format", "csv", "--quantities", "lk", "--out", path.string()});
  EXPECT_EQ(r.out, "");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "k,lk\n1,1\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace toriccap
