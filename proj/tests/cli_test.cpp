// Copyright 2026 The pathex Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "pathex/cli/cli.h"
#include "pathex/feature_table.h"
#include "test_support.h"

namespace pathex {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = cli::RunCli(args, out, err, env);
  return {code, out.str(), err.str()};
}

json LastJsonLine(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    if (!line.empty()) last = line;
  }
  return json::parse(last);
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::make_unique<testing::TempDir>();
    ASSERT_EQ(Cli({"generate", "--seed", "1", "--objects", "100", "--out-dir", Path("a")}).code, 0);
    ASSERT_EQ(Cli({"generate", "--seed", "2", "--objects", "100", "--size-range", "20,60",
                   "--out-dir", Path("b")})
                  .code,
              0);
  }
  static void TearDownTestSuite() { dir_.reset(); }
  static std::string Path(const std::string& name) { return (dir_->path() / name).string(); }
  static std::string Slide(const std::string& set) { return Path(set + "/slide.tif"); }
  static std::string Geo(const std::string& set) { return Path(set + "/annotations.geojson"); }

  static std::unique_ptr<testing::TempDir> dir_;
};

std::unique_ptr<testing::TempDir> CliTest::dir_;

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(Cli({}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"extract", "--slide", Slide("a")}).code, cli::kExitUsage);
}

TEST_F(CliTest, ExtractGeoJson) {
  const std::string out = Path("geo.csv");
  const CliResult r = Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const CsvDocument doc = ReadCsvFile(out);
  EXPECT_EQ(doc.header.size(), 251u);
  ASSERT_EQ(doc.rows.size(), 100u);
  for (const auto& row : doc.rows) EXPECT_EQ(row.size(), 251u);
  const json summary = LastJsonLine(r.err);
  EXPECT_EQ(summary["objects"], 100);
  EXPECT_TRUE(summary.contains("wall_ms"));
  EXPECT_FALSE(fs::exists(out + ".partial"));
}

TEST_F(CliTest, ExtractLabelMaskMatchesGeoJson) {
  const std::string a = Path("x-geo.csv"), b = Path("x-mask.csv");
  ASSERT_EQ(Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out", a}).code, 0);
  const CliResult r = Cli({"extract", "--slide", Slide("a"), "--label-mask", Path("a/labels.tif"),
                     "--classes", Path("a/classes.json"), "--out", b});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testing::ReadFile(a), testing::ReadFile(b));
}

TEST_F(CliTest, ExtractModesAgree) {
  const std::string a = Path("m-batched.csv"), b = Path("m-per.csv");
  ASSERT_EQ(Cli({"extract", "--slide", Slide("b"), "--geojson", Geo("b"), "--out", a,
                 "--memory-budget", "1MiB"})
                .code,
            0);
  ASSERT_EQ(Cli({"extract", "--slide", Slide("b"), "--geojson", Geo("b"), "--out", b, "--mode",
                 "per-object"})
                .code,
            0);
  EXPECT_EQ(testing::ReadFile(a), testing::ReadFile(b));
}

TEST_F(CliTest, ExtractBothSourcesIsUsageError) {
  const CliResult r = Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--label-mask",
                     Path("a/labels.tif"), "--out", Path("both.csv")});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_FALSE(fs::exists(Path("both.csv")));
}

TEST_F(CliTest, ExtractBudgetBelowFloor) {
  EXPECT_EQ(Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out", Path("b.csv"),
                 "--memory-budget", "512KiB"})
                .code,
            cli::kExitUsage);
}

TEST_F(CliTest, BudgetPrecedence) {
  const std::vector<std::string> base{"extract", "--slide", Slide("a"), "--geojson", Geo("a"),
                                      "--out", Path("p.csv")};
  CliResult r = Cli(base);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(LastJsonLine(r.err)["memory_budget"], 1ull << 30);
  r = Cli(base, "8MiB");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(LastJsonLine(r.err)["memory_budget"], 8ull << 20);
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--memory-budget", "2MiB"});
  r = Cli(with_flag, "8MiB");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(LastJsonLine(r.err)["memory_budget"], 2ull << 20);
  EXPECT_EQ(Cli(base, "512KiB").code, cli::kExitUsage);
  EXPECT_EQ(Cli(with_flag, "garbage").code, 0);
}

TEST_F(CliTest, ExtractMissingInputIsIoError) {
  const std::string out = Path("missing.csv");
  const CliResult r = Cli({"extract", "--slide", Path("nope.tif"), "--geojson", Geo("a"), "--out", out});
  EXPECT_EQ(r.code, cli::kExitIo);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(out + ".partial"));
}

TEST_F(CliTest, ExtractMalformedGeoJsonIsIoError) {
  testing::WriteFile(Path("bad.geojson"), "{");
  EXPECT_EQ(Cli({"extract", "--slide", Slide("a"), "--geojson", Path("bad.geojson"), "--out",
                 Path("bad.csv")})
                .code,
            cli::kExitIo);
}

TEST_F(CliTest, ExtractAnnotatedOut) {
  const std::string geo = Path("annotated.geojson");
  const CliResult r = Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out",
                     Path("ann.csv"), "--annotated-out", geo});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(testing::ReadFile(geo));
  ASSERT_EQ(doc["features"].size(), 100u);
  for (const auto& f : doc["features"]) EXPECT_EQ(f["properties"]["pathomics"].size(), 247u);
}

TEST_F(CliTest, ExtractEmptyAnnotations) {
  testing::WriteFile(Path("empty.geojson"), R"({"type":"FeatureCollection","features":[
    {"type":"Feature","id":"1","properties":{},"geometry":{"type":"Polygon","coordinates":[[[0,0],[2,2],[4,4],[0,0]]]}}]})");
  const CliResult r = Cli({"extract", "--slide", Slide("a"), "--geojson", Path("empty.geojson"), "--out",
                     Path("empty.csv"), "--annotated-out", Path("empty-out.geojson")});
  ASSERT_EQ(r.code, 0) << r.err;
  const CsvDocument doc = ReadCsvFile(Path("empty.csv"));
  EXPECT_EQ(doc.header.size(), 251u);
  EXPECT_TRUE(doc.rows.empty());
  EXPECT_NE(r.err.find("\"annotation_id\":\"1\""), std::string::npos);
  const json out = json::parse(testing::ReadFile(Path("empty-out.geojson")));
  EXPECT_TRUE(out["features"][0]["properties"]["pathomics"].is_null());
}

TEST_F(CliTest, BenchSynthetic) {
  const CliResult r = Cli({"bench", "--synthetic", "seed=3,objects=200,size=8-32,slide=1024x1024",
                     "--repeats", "1"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  const json j = json::parse(r.out);
  for (const char* k : {"batched_ms", "per_object_ms", "speedup"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_GT(j["speedup"].get<double>(), 1.0);
  EXPECT_EQ(j["objects"], 200);
}

TEST_F(CliTest, BenchFiles) {
  const CliResult r = Cli({"bench", "--slide", Slide("a"), "--geojson", Geo("a"), "--repeats", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, BenchZeroRepeats) {
  EXPECT_EQ(Cli({"bench", "--synthetic", "seed=1,objects=5", "--repeats", "0"}).code, cli::kExitUsage);
}

TEST_F(CliTest, BenchBadSpec) {
  EXPECT_EQ(Cli({"bench", "--synthetic", "seed=1,color=red"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"bench"}).code, cli::kExitUsage);
}

TEST_F(CliTest, BenchFaultInjection) {
  const CliResult r = Cli({"bench", "--synthetic", "seed=3,objects=20,size=8-16,slide=512x512",
                     "--repeats", "1", "--fault-inject"});
  EXPECT_EQ(r.code, cli::kExitBenchMismatch);
  const json j = json::parse(r.out);
  EXPECT_GT(j["report"]["mismatched_values"].get<int>(), 0);
}

TEST_F(CliTest, CompareSameCsv) {
  const std::string a = Path("c1.csv");
  ASSERT_EQ(Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out", a}).code, 0);
  const CliResult r = Cli({"compare", a, a});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["features"].size(), 4u);
  for (const auto& f : j["features"]) EXPECT_EQ(f["l1_distance"], 0.0);
}

TEST_F(CliTest, CompareDifferentSlides) {
  const std::string a = Path("d1.csv"), b = Path("d2.csv");
  ASSERT_EQ(Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out", a}).code, 0);
  ASSERT_EQ(Cli({"extract", "--slide", Slide("b"), "--geojson", Geo("b"), "--out", b}).code, 0);
  const CliResult r = Cli({"compare", a, b});
  EXPECT_EQ(r.code, cli::kExitCompareTolerance);
  double total = 0;
  const json j = json::parse(r.out);
  for (const auto& f : j["features"]) total += f["l1_distance"].get<double>();
  EXPECT_GT(total, 0);
  EXPECT_EQ(Cli({"compare", a, b, "--tolerance", "2"}).code, 0);
}

TEST_F(CliTest, CompareMissingColumn) {
  const std::string a = Path("e1.csv");
  ASSERT_EQ(Cli({"extract", "--slide", Slide("a"), "--geojson", Geo("a"), "--out", a}).code, 0);
  EXPECT_EQ(Cli({"compare", a, a, "--features", "SizeShape_Area,NotAColumn"}).code, cli::kExitIo);
  EXPECT_EQ(Cli({"compare", a, Path("nope.csv")}).code, cli::kExitIo);
}

TEST_F(CliTest, InspectWindows) {
  CliResult r = Cli({"inspect", "--slide", Slide("a"), "--geojson", Geo("a"), "--window", "0,0,2048,2048"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["ids"].size(), 100u);
  EXPECT_EQ(j["index"]["entry_count"], 100);
  r = Cli({"inspect", "--slide", Slide("a"), "--geojson", Geo("a"), "--window", "5000,5000,10,10"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["ids"].empty());
  r = Cli({"inspect", "--slide", Slide("a"), "--label-mask", Path("a/labels.tif"), "--window",
           "0,0,2048,2048"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["ids"].size(), 100u);
}

TEST_F(CliTest, GenerateDeterministic) {
  ASSERT_EQ(Cli({"generate", "--seed", "1", "--objects", "100", "--out-dir", Path("a2")}).code, 0);
  for (const char* f : {"slide.tif", "annotations.geojson", "labels.tif", "classes.json"}) {
    EXPECT_EQ(testing::ReadFile(Path(std::string("a/") + f)), testing::ReadFile(Path(std::string("a2/") + f))) << f;
  }
}

TEST_F(CliTest, GenerateZeroObjects) {
  ASSERT_EQ(Cli({"generate", "--objects", "0", "--slide-size", "64,64", "--out-dir", Path("z")}).code, 0);
  const json doc = json::parse(testing::ReadFile(Path("z/annotations.geojson")));
  EXPECT_TRUE(doc["features"].empty());
  EXPECT_TRUE(fs::exists(Path("z/slide.tif")));
  const CliResult r = Cli({"extract", "--slide", Path("z/slide.tif"), "--geojson", Path("z/annotations.geojson"),
                     "--out", Path("z.csv")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, GenerateOverfull) {
  EXPECT_EQ(Cli({"generate", "--objects", "1000", "--slide-size", "128,128", "--out-dir", Path("full")}).code,
            cli::kExitGenerationInfeasible);
}

TEST_F(CliTest, GenerateBadShapes) {
  EXPECT_EQ(Cli({"generate", "--shapes", "hexagon", "--out-dir", Path("h")}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace pathex
