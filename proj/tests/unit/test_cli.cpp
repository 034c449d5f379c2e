#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "harness/cli.hpp"
#include "harness/executor.hpp"

namespace pompeiu::harness {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pompeiu");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(POMPEIU_DATA_DIR) + "/" + rel; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pompeiu_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  fs::path dir_;
};

TEST_F(Cli, FiniteCheckPompeiu) {
  const auto r = run({"finite", "check", "--group", data("groups/s3_s2.json"), "--set", "0,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["verdict"], "Pompeiu");
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["E"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["verdicts"]["oracle"], true);
  EXPECT_EQ(j["verdicts"]["spectral"], true);
  EXPECT_EQ(j["verdicts"]["convolution"], true);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_FALSE(j.contains("elapsed_ns"));
}

TEST_F(Cli, FiniteCheckNotPompeiuWritesFile) {
  const auto out = path("r.json");
  const auto r = run({"finite", "check", "--group", data("groups/z8.json"), "--set", "0,4", "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["verdict"], "NotPompeiu");
  EXPECT_EQ(j["verdicts"]["spectral"], false);
  EXPECT_EQ(j["witness"]["index"], 1);
  EXPECT_EQ(j["methods"]["spectral"]["spherical_witness"], 1);
}

TEST_F(Cli, NotGelfandPair) {
  const auto r = run({"finite", "check", "--group", data("groups/s3_trivial.json"), "--set", "0,1"});
  EXPECT_EQ(r.code, kExitNotGelfand);
  EXPECT_NE(r.err.find("(1 2)"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("commute"), std::string::npos);
}

TEST_F(Cli, SpecErrors) {
  EXPECT_EQ(run({"finite", "check", "--group", path("missing.json"), "--set", "0"}).code, kExitSpec);
  EXPECT_EQ(run({"finite", "check", "--group", write("bad.json", "{not json"), "--set", "0"}).code, kExitSpec);
  EXPECT_EQ(run({"finite", "check", "--group", write("fam.json", R"({"family":"quaternion","n":2})"), "--set", "0"}).code,
            kExitSpec);
  EXPECT_EQ(run({"finite", "check", "--group", data("groups/z8.json"), "--set", "0,9"}).code, kExitSpec);
  EXPECT_EQ(run({"finite", "check", "--group", data("groups/z8.json"), "--set", ""}).code, kExitSpec);
  EXPECT_EQ(run({"finite", "check", "--group", write("big.json", R"({"family":"symmetric","n":8})"), "--set", "0"}).code,
            kExitSpec);
  EXPECT_EQ(run({"finite", "check", "--set", "0"}).code, kExitSpec);
  EXPECT_EQ(run({"bogus"}).code, kExitSpec);
  EXPECT_EQ(run({}).code, kExitSpec);
  EXPECT_EQ(run({"euclid", "decide", "--set", data("sets/unit_disk.json")}).code, kExitSpec);
  EXPECT_EQ(run({"euclid", "decide", "--set", write("s.json", R"({"dim":2,"shape":"ball","radius":-1})"), "--seed", "1"}).code,
            kExitSpec);
  EXPECT_EQ(run({"euclid", "decide", "--set", data("sets/unit_disk.json"), "--seed", "1", "--lambda-range", "5:2"}).code,
            kExitSpec);
}

TEST_F(Cli, SweepOutputs) {
  const auto csv = path("sweep.csv"), summary = path("summary.json");
  const auto r = run({"finite", "sweep", "--group", data("groups/s3_s2.json"), "--out", csv, "--summary", summary});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(slurp(csv));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "mask,cosets,oracle,spectral,convolution,radial,spherical_witness,agree");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 7);
  const auto j = nlohmann::json::parse(slurp(summary));
  EXPECT_EQ(j["pompeiu"], 6);
  EXPECT_EQ(j["disagreements"], 0);

  const auto d6 = run({"finite", "sweep", "--group", data("groups/d6_reflection.json"), "--summary", path("d6.json"),
                       "--out", path("d6.csv")});
  ASSERT_EQ(d6.code, kExitOk);
  const auto dj = nlohmann::json::parse(slurp(path("d6.json")));
  EXPECT_EQ(dj["rows"], 63);
  EXPECT_EQ(dj["disagreements"], 0);
}

TEST_F(Cli, SweepSizeCap) {
  const auto g = write("z21.json", R"({"family":"cyclic","n":21,"subgroup_generators":[]})");
  EXPECT_EQ(run({"finite", "sweep", "--group", g, "--out", path("x.csv")}).code, kExitSpec);
}

TEST_F(Cli, SphericalTable) {
  const auto r = run({"finite", "spherical", "--group", data("groups/s3_s2.json")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("function,class,representative,re,im,exact\n", 0), 0u);
  EXPECT_NE(r.out.find("-1/2"), std::string::npos);
}

TEST_F(Cli, EuclidDisk) {
  const auto out = path("disk.json"), land = path("land.csv"), res = path("res.csv");
  const auto r = run({"euclid", "decide", "--set", data("sets/unit_disk.json"), "--lambda-range", "0:20", "--grid", "0.05",
                      "--rotations", "64", "--seed", "7", "--motions", "20", "--out", out, "--landscape", land,
                      "--residuals", res});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["verdict"], "NotPompeiu");
  ASSERT_GE(j["lambda_witnesses"].size(), 5u);
  EXPECT_NEAR(j["lambda_witnesses"][0].get<double>(), 3.8317059702075123, 1e-9);
  EXPECT_EQ(j["searched_range"], nlohmann::json::array({0.0, 20.0}));
  EXPECT_EQ(j["grid"], 0.05);
  EXPECT_TRUE(j.contains("tolerances"));
  EXPECT_FALSE(slurp(res).empty());
}

TEST_F(Cli, EuclidSquareLandscape) {
  const auto land = path("land.csv");
  const auto r = run({"euclid", "decide", "--set", data("sets/unit_square.json"), "--lambda-range", "0:20", "--seed", "7",
                      "--landscape", land, "--out", path("sq.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(slurp(path("sq.json")));
  EXPECT_EQ(j["verdict"], "NoFailureFoundInRange");
  EXPECT_GT(j["landscape_min"]["orbit_max"].get<double>(), 1e-6);
  std::istringstream lines(slurp(land));
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 400);
}

TEST_F(Cli, QuadratureFailureExitCode) {
  const auto r = run({"euclid", "decide", "--set", data("sets/unit_disk.json"), "--lambda-range", "0:5", "--seed", "1",
                      "--quad-tol", "1e-300", "--motions", "2"});
  EXPECT_EQ(r.code, kExitQuadrature) << r.err;
}

TEST_F(Cli, DeterministicAcrossWidths) {
  std::vector<std::string> outputs;
  for (const char* w : {"1", "4", "16"}) {
    const auto out = path(std::string("t") + w + ".json"), land = path(std::string("l") + w + ".csv");
    const auto csv = path(std::string("s") + w + ".csv");
    ASSERT_EQ(run({"--threads", w, "euclid", "decide", "--set", data("sets/unit_triangle.json"), "--lambda-range", "0:6",
                   "--seed", "5", "--out", out, "--landscape", land})
                  .code,
              kExitOk);
    ASSERT_EQ(run({"--threads", w, "finite", "sweep", "--group", data("groups/d6_reflection.json"), "--out", csv}).code,
              kExitOk);
    outputs.push_back(slurp(out) + slurp(land) + slurp(csv));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], outputs[2]);
}

TEST(Executor, ThreadCapAndExceptions) {
  ::setenv(kThreadsEnv, "2", 1);
  EXPECT_EQ(effective_threads(16), 2u);
  ::unsetenv(kThreadsEnv);
  EXPECT_EQ(effective_threads(3), 3u);
  EXPECT_GE(effective_threads(0), 1u);
  const auto exec = make_executor(4);
  std::vector<int> out(1000, 0);
  exec(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  try {
    exec(100, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error("boom " + std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "boom 17");
  }
}

}  // namespace
}  // namespace pompeiu::harness
