#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "csest/config.hpp"
#include "csest/errors.hpp"
#include "csest/io.hpp"
#include "csest/runner.hpp"

using namespace csest;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("csest_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) { return io::read_text(p); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    out.push_back(text.substr(start, nl - start));
    start = nl == std::string::npos ? text.size() : nl + 1;
  }
  return out;
}

}  // namespace

TEST(ReadPoints, Examples) {
  EXPECT_EQ(io::parse_points("0,0\n1,0\n0,1").size(), 3u);
  const auto pts = io::parse_points("x,y\n0.5, 0.25\n\n-1e-3,2\n");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (geom2d::Point2{0.5, 0.25}));
  EXPECT_EQ(pts[1], (geom2d::Point2{-1e-3, 2}));
}

TEST(ReadPoints, ErrorsNameTheLine) {
  try {
    io::parse_points("0,0\n1,0\n7\n0,1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_points("0,0\n1,abc\n"), ParseError);
  EXPECT_THROW(io::parse_points("0,0,0\n"), ParseError);
  EXPECT_THROW(io::parse_points("0,nan\n"), ParseError);
  EXPECT_THROW(io::parse_points("0,0\nx,y\n"), ParseError);
}

TEST(ReadPoints, FileRoundTripIsExact) {
  TempDir dir;
  const auto pts = sample_planar(SupportSpec::disk({0.1, 0.2}, 0.7), 200, {71, 0});
  io::write_text(dir.path() / "p.csv", io::points_csv(pts));
  EXPECT_EQ(io::read_points(dir.path() / "p.csv"), pts);
  EXPECT_THROW(io::read_points(dir.path() / "missing.csv"), Error);
}

TEST(SupportJson, RoundTrip) {
  const std::vector<SupportSpec> specs{
      SupportSpec::polygon(geom2d::regular_polygon(7, 0.3, {0.5, 0.5}, 0.1)),
      SupportSpec::disk({0.25, -3}, 1.5), SupportSpec::ball(4, 2.0), SupportSpec::cube(3, 0.5)};
  for (const auto& s : specs) {
    const auto text = io::to_json(s).dump();
    const auto back = io::support_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(io::to_json(back), io::to_json(s));
  }
  EXPECT_THROW(io::support_from_json(nlohmann::json{{"kind", "torus"}}), ValidationError);
  EXPECT_THROW(io::support_from_json(nlohmann::json{{"kind", "disk"}, {"radius", -1}}), ValidationError);
}

TEST(ParseConfig, DefaultsForRiskCurve) {
  const auto cfg = parse_config(R"({"command": "risk-curve", "support": {"kind": "square"},
                                    "n_grid": [250, 500, 1000]})");
  EXPECT_EQ(cfg.command, Command::risk_curve);
  EXPECT_EQ(cfg.reps, 200);
  EXPECT_EQ(cfg.q, 1.0);
  EXPECT_FALSE(cfg.normalized);
  EXPECT_EQ(cfg.C, 40.0);
  EXPECT_EQ(cfg.estimator, "hull");
  EXPECT_EQ(cfg.output_path, "risk_curve.csv");
  EXPECT_EQ(cfg.seed, (Seed{0, 0}));
}

TEST(ParseConfig, LowerBoundNeedsEvenRAtLeastTen) {
  EXPECT_THROW(parse_config(R"({"command": "lower-bound", "r": 9, "h": 0.5})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "lower-bound", "r": 8, "h": 0.5})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "lower-bound", "r": 10, "h": 0})"), ValidationError);
  EXPECT_NO_THROW(parse_config(R"({"command": "lower-bound", "r": 10, "h": 0.5})"));
}

TEST(ParseConfig, ThresholdConstant) {
  const std::string text = R"({"command": "adaptive", "support": {"kind": "square"}, "n": 500, "C": 30})";
  try {
    parse_config(text);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("16d + 16/(d+1)"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(parse_config(text, {std::nullopt, true}));
}

TEST(ParseConfig, MalformedJson) {
  EXPECT_THROW(parse_config("{\"command\": "), ParseError);
  EXPECT_THROW(parse_config("[1, 2]"), ParseError);
}

TEST(ParseConfig, ListsEveryInvalidField) {
  try {
    parse_config(R"({"command": "risk-curve", "support": {"kind": "square"}, "n_grid": [500, 100],
                     "reps": 1, "q": 0.5, "colour": "red"})");
    FAIL();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    for (const char* field : {"n_grid", "reps", "q", "colour"}) {
      EXPECT_NE(msg.find(field), std::string::npos) << field << " missing from: " << msg;
    }
  }
}

TEST(ParseConfig, SeedFormsAndOverride) {
  auto cfg = parse_config(R"({"command": "efron", "support": {"kind": "square"}, "n": 50, "seed": 9})");
  EXPECT_EQ(cfg.seed, (Seed{9, 0}));
  cfg = parse_config(R"({"command": "efron", "support": {"kind": "square"}, "n": 50,
                         "seed": {"root": 18446744073709551615, "stream": 3}})");
  EXPECT_EQ(cfg.seed, (Seed{18446744073709551615ULL, 3}));
  cfg = parse_config(R"({"command": "efron", "support": {"kind": "square"}, "n": 50, "seed": 9})",
                     {std::uint64_t{77}, false});
  EXPECT_EQ(cfg.seed, (Seed{77, 0}));
  EXPECT_THROW(parse_config(R"({"command": "efron", "support": {"kind": "square"}, "n": 50, "seed": -1})"),
               ValidationError);
}

TEST(ParseConfig, CommandSpecificRequirements) {
  EXPECT_THROW(parse_config(R"({"command": "estimate"})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "efron", "n": 100})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "risk-curve", "support": {"kind": "ball", "dimension": 3, "radius": 1},
                                "n_grid": [100], "estimator": "kgon", "r": 4})"),
               ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "deviation-tail", "support": {"kind": "square"}, "n": 100, "reps": 10})"),
               ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "frobnicate"})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"command": "efron", "support": {"kind": "square"}, "n": 50, "output": "../x"})"),
               ValidationError);
}

TEST(Run, EfronCsvSchema) {
  TempDir dir;
  const auto cfg = parse_config(R"({"command": "efron", "support": {"kind": "square"}, "n": 50, "reps": 100})");
  const auto out = run(cfg, {dir.path(), 1, nullptr});
  ASSERT_EQ(out.status, kExitOk) << out.message;
  const auto rows = lines(slurp(out.artifact));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].rfind("n,reps,lhs,rhs,rel_err", 0), 0u);
  const auto meta = nlohmann::json::parse(slurp(out.metadata));
  EXPECT_EQ(meta["config"]["command"], "efron");
  EXPECT_EQ(meta["seed"]["root"], 0);
  EXPECT_FALSE(meta.contains("threads"));
}

TEST(Run, EstimateJson) {
  TempDir dir;
  io::write_text(dir.path() / "pts.csv", "x,y\n0,0\n1,0\n1,1\n0,1\n0.5,0.5\n");
  const auto cfg = parse_config(
      R"({"command": "estimate", "points": ")" + (dir.path() / "pts.csv").string() + R"(", "r": 3})");
  const auto out = run(cfg, {dir.path(), 1, nullptr});
  ASSERT_EQ(out.status, kExitOk) << out.message;
  const auto j = nlohmann::json::parse(slurp(out.artifact));
  EXPECT_EQ(j["r_requested"], 3);
  EXPECT_EQ(j["r_used"], 3);
  EXPECT_NEAR(j["area"].get<double>(), 2.0, 1e-6);
  EXPECT_EQ(j["status"], "dp_optimal");
  EXPECT_EQ(j["polygon"].size(), 3u);
}

TEST(Run, RiskCurveRowsSortedByN) {
  TempDir dir;
  const auto cfg = parse_config(R"({"command": "risk-curve", "support": {"kind": "disk", "radius": 1},
                                    "n_grid": [250, 500, 1000], "reps": 4, "estimator": "kgon", "r": 5})");
  const auto out = run(cfg, {dir.path(), 2, nullptr});
  ASSERT_EQ(out.status, kExitOk) << out.message;
  const auto rows = lines(slurp(out.artifact));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "n,estimator,q,normalized,mean_risk,std_err,reps,seed_root,seed_stream");
  EXPECT_EQ(rows[1].rfind("250,kgon(5),1,false,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("500,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("1000,", 0), 0u);
}

TEST(Run, ByteIdenticalAcrossThreadCounts) {
  TempDir dir;
  const std::vector<std::string> configs{
      R"({"command": "risk-curve", "support": {"kind": "square"}, "n_grid": [100, 200], "reps": 6,
          "estimator": "adaptive", "seed": {"root": 5, "stream": 1}, "output": "a.csv"})",
      R"({"command": "vertex-scaling", "support": {"kind": "ball", "dimension": 3, "radius": 1},
          "n_grid": [50, 100, 200], "reps": 5, "output": "b.csv"})",
      R"({"command": "adaptive", "support": {"kind": "disk", "radius": 1}, "n": 300, "output": "c.json"})"};
  for (const auto& text : configs) {
    const auto cfg = parse_config(text);
    const auto one = run(cfg, {dir.path() / "t1", 1, nullptr});
    const auto three = run(cfg, {dir.path() / "t3", 3, nullptr});
    ASSERT_EQ(one.status, kExitOk) << one.message;
    ASSERT_EQ(three.status, kExitOk) << three.message;
    EXPECT_EQ(slurp(one.artifact), slurp(three.artifact));
    EXPECT_EQ(slurp(one.metadata), slurp(three.metadata));
  }
}

TEST(Run, LowerBoundWritesFamilyAndReportsFailedChecks) {
  TempDir dir;
  const auto cfg = parse_config(R"({"command": "lower-bound", "r": 10, "h": 0.5, "n": 1000})");
  const auto out = run(cfg, {dir.path(), 1, nullptr});
  EXPECT_EQ(out.status, kExitRuntime);
  EXPECT_NE(out.message.find("pairwise distance"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(out.artifact));
  EXPECT_EQ(j["members"].size(), 32u);
  EXPECT_EQ(j["base"].size(), 5u);
  EXPECT_NEAR(j["delta"].get<double>(), 0.622475, 1e-6);
}

TEST(Run, RuntimeErrorsMapToExitThree) {
  TempDir dir;
  io::write_text(dir.path() / "pts.csv", "0,0\n1,1\n2,2\n");
  const auto cfg = parse_config(
      R"({"command": "estimate", "points": ")" + (dir.path() / "pts.csv").string() + R"("})");
  const auto out = run(cfg, {dir.path(), 1, nullptr});
  EXPECT_EQ(out.status, kExitRuntime);
  EXPECT_FALSE(out.message.empty());
}
