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

#include "pathex/cli/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathex/error.h"
#include "pathex/extract.h"
#include "pathex/feature_table.h"
#include "pathex/geojson.h"
#include "pathex/label_mask.h"
#include "pathex/manifest.h"
#include "pathex/memory_budget.h"
#include "pathex/oracle/oracle_extract.h"
#include "pathex/oracle/report.h"
#include "pathex/oracle/synthetic.h"
#include "pathex/rasterize.h"
#include "pathex/slide_source.h"
#include "pathex/spatial_index.h"
#include "pathex/thread_pool.h"
#include "pathex/write_back.h"

namespace pathex::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct InputFlags {
  std::string slide;
  std::string geojson;
  std::string label_mask;
  std::string classes;
};

void AddInputFlags(CLI::App* cmd, InputFlags& in, bool slide_required) {
  auto* slide = cmd->add_option("--slide", in.slide, "Slide image (TIFF or PNG)");
  if (slide_required) slide->required();
  auto* geo = cmd->add_option("--geojson", in.geojson, "GeoJSON annotations");
  auto* mask = cmd->add_option("--label-mask", in.label_mask, "Integer label mask image");
  geo->excludes(mask);
  cmd->add_option("--classes", in.classes, "Class map JSON for --label-mask")->needs(mask);
}

struct LoadedInput {
  std::unique_ptr<SlideSource> slide;
  RegionSet regions;
  std::optional<AnnotationSet> annotations;
  std::vector<IngestWarning> warnings;
};

void RequireOneSource(const InputFlags& in) {
  if (in.geojson.empty() == in.label_mask.empty()) {
    throw UsageError("exactly one of --geojson or --label-mask is required");
  }
}

LoadedInput LoadInput(const InputFlags& in) {
  LoadedInput loaded;
  loaded.slide = OpenSlide(in.slide);
  const std::int64_t w = loaded.slide->width(), h = loaded.slide->height();
  if (!in.geojson.empty()) {
    loaded.annotations = ReadGeoJsonFile(in.geojson);
    IngestedAnnotations ingested = RegionsFromAnnotations(*loaded.annotations, w, h, in.geojson);
    loaded.regions = std::move(ingested.regions);
    loaded.warnings = std::move(ingested.warnings);
  } else {
    const LabelRaster raster = ReadLabelRaster(in.label_mask);
    if (raster.width != w || raster.height != h) {
      throw Error(ErrorKind::kShape, "label mask is " + std::to_string(raster.width) + "x" +
                                         std::to_string(raster.height) + ", slide is " +
                                         std::to_string(w) + "x" + std::to_string(h));
    }
    const ClassMap classes = in.classes.empty() ? ClassMap{} : ReadClassMapFile(in.classes);
    loaded.regions = LoadLabelMask(raster, classes, in.label_mask);
  }
  return loaded;
}

void WriteFileAtomically(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw Error(ErrorKind::kIo, "cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::kIo, "cannot write " + path.string() + ": " + ec.message());
  }
}

std::string CsvText(const FeatureTable& table) {
  std::ostringstream csv;
  WriteFeatureCsv(csv, table, FeatureManifest::Canonical());
  return csv.str();
}

Json NullPathomics(const AnnotationSet& annotations) {
  Json out = annotations.document;
  Json& features = out.is_array() ? out : out["features"];
  for (const Annotation& a : annotations.features) {
    Json& props = features[a.feature_index]["properties"];
    if (!props.is_object()) props = Json::object();
    if (a.part_index < 0) {
      props["pathomics"] = nullptr;
    } else {
      Json& parts = props["pathomics"];
      if (!parts.is_array()) parts = Json::array();
      while (parts.size() <= static_cast<std::size_t>(a.part_index)) parts.push_back(nullptr);
    }
  }
  return out;
}

MemoryBudget BudgetFrom(const std::string& flag, const std::optional<std::string>& env) {
  try {
    return ResolveBudget(flag.empty() ? std::nullopt : std::optional<std::string_view>(flag),
                         env ? std::optional<std::string_view>(*env) : std::nullopt);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- extract

struct ExtractFlags {
  InputFlags input;
  std::string out;
  std::string mode = "batched";
  std::string budget;
  int workers = DefaultWorkerCount();
  std::string annotated_out;
};

int RunExtract(const ExtractFlags& f, const std::optional<std::string>& env,
               std::ostream& err) {
  RequireOneSource(f.input);
  if (!f.annotated_out.empty() && f.input.geojson.empty()) {
    throw UsageError("--annotated-out requires --geojson");
  }
  ExtractOptions options;
  options.budget = BudgetFrom(f.budget, env);
  options.mode = f.mode == "batched" ? ExtractMode::kBatched : ExtractMode::kPerObject;
  options.workers = f.workers;

  const auto start = Clock::now();
  LoadedInput input = LoadInput(f.input);
  for (const IngestWarning& w : input.warnings) err << WarningJsonLine(w) << '\n';
  ExtractStats stats;
  const FeatureTable table = ExtractAll(input.regions, *input.slide, options, &stats);
  const std::string csv = CsvText(table);
  std::string annotated;
  if (!f.annotated_out.empty()) {
    Json doc = input.regions.empty()
                   ? NullPathomics(*input.annotations)
                   : WriteBack(SpatialIndex::Build(input.regions), table, *input.annotations,
                               FeatureManifest::Canonical());
    annotated = doc.dump() + "\n";
  }
  WriteFileAtomically(f.out, csv);
  if (!f.annotated_out.empty()) {
    try {
      WriteFileAtomically(f.annotated_out, annotated);
    } catch (...) {
      fs::remove(f.out);
      throw;
    }
  }
  for (const ObjectDiagnostic& d : table.diagnostics) err << DiagnosticJsonLine(d) << '\n';
  const Json summary = {{"event", "summary"},
                        {"mode", f.mode},
                        {"objects", stats.objects},
                        {"slabs", stats.slabs},
                        {"overflow", stats.overflow},
                        {"skipped", input.warnings.size()},
                        {"workers", options.workers},
                        {"memory_budget", options.budget.bytes()},
                        {"wall_ms", MsSince(start)}};
  err << summary.dump() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ bench

struct BenchFlags {
  InputFlags input;
  std::string synthetic;
  int repeats = 3;
  std::string budget;
  int workers = DefaultWorkerCount();
  bool fault_inject = false;
};

oracle::SyntheticSpec ParseSyntheticSpec(const std::string& text) {
  oracle::SyntheticSpec spec;
  std::stringstream ss(text);
  std::string item;
  auto parse_pair = [](const std::string& v, char sep, std::int64_t& a, std::int64_t& b) {
    const auto pos = v.find(sep);
    if (pos == std::string::npos) throw UsageError("expected A" + std::string(1, sep) + "B in '" + v + "'");
    a = std::stoll(v.substr(0, pos));
    b = std::stoll(v.substr(pos + 1));
  };
  try {
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("bad synthetic spec item '" + item + "'");
      const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
      if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "objects") {
        spec.object_count = std::stoull(value);
      } else if (key == "size") {
        parse_pair(value, '-', spec.min_size, spec.max_size);
      } else if (key == "slide") {
        parse_pair(value, 'x', spec.slide_width, spec.slide_height);
      } else if (key == "shapes") {
        std::string list = value;
        std::replace(list.begin(), list.end(), '+', ',');
        spec.shapes = oracle::ParseShapeList(list);
      } else if (key == "intensities") {
        std::string list = value;
        std::replace(list.begin(), list.end(), '+', ',');
        spec.intensities = oracle::ParseIntensityList(list);
      } else if (key == "gap") {
        spec.gap = std::stoll(value);
      } else {
        throw UsageError("unknown synthetic spec key '" + key + "'");
      }
    }
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("bad synthetic spec: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return spec;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

int RunBench(const BenchFlags& f, const std::optional<std::string>& env, std::ostream& out) {
  const bool synthetic = !f.synthetic.empty();
  if (synthetic) {
    if (!f.input.slide.empty() || !f.input.geojson.empty() || !f.input.label_mask.empty()) {
      throw UsageError("--synthetic cannot be combined with file inputs");
    }
  } else {
    if (f.input.slide.empty()) throw UsageError("--slide or --synthetic is required");
    RequireOneSource(f.input);
  }
  ExtractOptions options;
  options.budget = BudgetFrom(f.budget, env);
  options.workers = f.workers;

  // Synthetic data is generated once, outside the timed region.
  std::unique_ptr<SlideSource> synthetic_slide;
  std::string synthetic_geojson;
  if (synthetic) {
    oracle::SyntheticSlide s = oracle::GenerateSyntheticSlide(ParseSyntheticSpec(f.synthetic));
    synthetic_geojson = s.geojson.dump();
    synthetic_slide = std::make_unique<RasterSlide>(std::move(s.slide));
  }
  struct Ingested {
    std::unique_ptr<SlideSource> owned;
    const SlideSource* slide = nullptr;
    RegionSet regions;
  };
  auto ingest = [&]() {
    Ingested in;
    if (synthetic) {
      in.slide = synthetic_slide.get();
      const AnnotationSet set = ParseGeoJson(synthetic_geojson);
      in.regions = RegionsFromAnnotations(set, in.slide->width(), in.slide->height()).regions;
    } else {
      LoadedInput loaded = LoadInput(f.input);
      in.owned = std::move(loaded.slide);
      in.slide = in.owned.get();
      in.regions = std::move(loaded.regions);
    }
    return in;
  };

  std::vector<double> batched_ms, oracle_ms;
  FeatureTable batched, reference;
  ExtractStats stats;
  std::size_t csv_bytes = 0;
  for (int r = 0; r < f.repeats; ++r) {
    const auto start = Clock::now();
    const Ingested in = ingest();
    batched = ExtractAll(in.regions, *in.slide, options, &stats);
    csv_bytes = CsvText(batched).size();
    batched_ms.push_back(MsSince(start));
  }
  for (int r = 0; r < f.repeats; ++r) {
    const auto start = Clock::now();
    const Ingested in = ingest();
    reference = oracle::OracleExtract(in.regions, *in.slide);
    csv_bytes = std::max(csv_bytes, CsvText(reference).size());
    oracle_ms.push_back(MsSince(start));
  }
  if (f.fault_inject && !batched.rows.empty()) {
    batched.rows.front().values[kIntensityOffset + 1] += 0.5;
  }
  const oracle::OracleReport report =
      oracle::CompareTables(reference, batched, FeatureManifest::Canonical());
  if (!report.ok()) {
    Json doc = {{"error", "batched and per-object outputs differ"},
                {"report", oracle::ReportJson(report)}};
    out << doc.dump(2) << '\n';
    return kExitBenchMismatch;
  }
  double max_rel = 0, max_abs = 0;
  for (const auto& e : report.features) {
    max_rel = std::max(max_rel, e.max_rel_error);
    max_abs = std::max(max_abs, e.max_abs_error);
  }
  const double b = Median(batched_ms), p = Median(oracle_ms);
  const Json doc = {{"batched_ms", b},
                    {"per_object_ms", p},
                    {"speedup", b > 0 ? p / b : 0.0},
                    {"repeats", f.repeats},
                    {"objects", stats.objects},
                    {"slabs", stats.slabs},
                    {"overflow", stats.overflow},
                    {"workers", options.workers},
                    {"memory_budget", options.budget.bytes()},
                    {"batched_runs_ms", batched_ms},
                    {"per_object_runs_ms", oracle_ms},
                    {"max_abs_error", max_abs},
                    {"max_rel_error", max_rel},
                    {"equivalent", true}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- compare

struct CompareFlags {
  std::vector<std::string> csvs;
  std::vector<std::string> features{"SizeShape_MaxFeretDiameter", "SizeShape_Eccentricity",
                                    "SizeShape_Hu1", "Intensity_MeanIntensity"};
  int bins = 32;
  double tolerance = 0;
};

std::vector<double> FiniteColumn(const CsvDocument& doc, const std::string& name,
                                 const std::string& file) {
  const auto it = std::find(doc.header.begin(), doc.header.end(), name);
  if (it == doc.header.end()) {
    throw Error(ErrorKind::kParse, "column " + name + " missing from " + file);
  }
  const auto col = static_cast<std::size_t>(it - doc.header.begin());
  std::vector<double> values;
  for (const auto& row : doc.rows) {
    if (col >= row.size()) throw Error(ErrorKind::kParse, "short row in " + file);
    const double v = ParseNumber(row[col]);
    if (std::isfinite(v)) values.push_back(v);
  }
  return values;
}

std::vector<double> Histogram(const std::vector<double>& v, double lo, double hi, int bins) {
  std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
  if (v.empty()) return h;
  for (double x : v) {
    int b = 0;
    if (hi > lo) b = std::min(bins - 1, static_cast<int>(std::floor((x - lo) / (hi - lo) * bins)));
    h[static_cast<std::size_t>(b)] += 1;
  }
  for (double& c : h) c /= static_cast<double>(v.size());
  return h;
}

int RunCompare(const CompareFlags& f, std::ostream& out) {
  const CsvDocument a = ReadCsvFile(f.csvs[0]);
  const CsvDocument b = ReadCsvFile(f.csvs[1]);
  Json features = Json::array();
  bool ok = true;
  for (const std::string& name : f.features) {
    const std::vector<double> va = FiniteColumn(a, name, f.csvs[0]);
    const std::vector<double> vb = FiniteColumn(b, name, f.csvs[1]);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto* v : {&va, &vb}) {
      for (double x : *v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    }
    if (lo > hi) lo = hi = 0;
    const std::vector<double> ha = Histogram(va, lo, hi, f.bins);
    const std::vector<double> hb = Histogram(vb, lo, hi, f.bins);
    double distance = 0;
    for (int i = 0; i < f.bins; ++i) distance += std::abs(ha[i] - hb[i]);
    ok = ok && distance <= f.tolerance;
    features.push_back({{"feature", name},
                        {"range", {lo, hi}},
                        {"count_a", va.size()},
                        {"count_b", vb.size()},
                        {"histogram_a", ha},
                        {"histogram_b", hb},
                        {"l1_distance", distance}});
  }
  const Json doc = {{"bins", f.bins},
                    {"tolerance", f.tolerance},
                    {"ok", ok},
                    {"features", std::move(features)}};
  out << doc.dump(2) << '\n';
  return ok ? kExitOk : kExitCompareTolerance;
}

// ---------------------------------------------------------------- inspect

struct InspectFlags {
  InputFlags input;
  std::vector<std::int64_t> window;
};

int RunInspect(const InspectFlags& f, std::ostream& out) {
  RequireOneSource(f.input);
  if (f.window[2] < 1 || f.window[3] < 1) throw UsageError("--window needs w,h >= 1");
  const BoundingBox window{f.window[0], f.window[1], f.window[0] + f.window[2],
                           f.window[1] + f.window[3]};
  const LoadedInput input = LoadInput(f.input);
  Json ids = Json::array();
  Json stats = {{"height", 0}, {"node_count", 0}, {"leaf_count", 0}, {"entry_count", 0}};
  if (!input.regions.empty()) {
    const SpatialIndex index = SpatialIndex::Build(input.regions);
    ids = index.QueryWindow(window);
    const IndexStats s = index.Stats();
    stats = {{"height", s.height},
             {"node_count", s.node_count},
             {"leaf_count", s.leaf_count},
             {"entry_count", s.entry_count}};
  }
  const Json doc = {{"window", {window.min_x, window.min_y, window.max_x, window.max_y}},
                    {"objects", input.regions.size()},
                    {"ids", std::move(ids)},
                    {"index", std::move(stats)}};
  out << doc.dump() << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- generate

struct GenerateFlags {
  std::uint64_t seed = 1;
  std::size_t objects = 100;
  std::vector<std::int64_t> size_range{8, 32};
  std::vector<std::int64_t> slide_size{2048, 2048};
  std::string out_dir;
  std::string shapes;
  std::string intensities;
  std::int64_t gap = 2;
};

int RunGenerate(const GenerateFlags& f, std::ostream& err) {
  oracle::SyntheticSpec spec;
  spec.seed = f.seed;
  spec.object_count = f.objects;
  spec.min_size = f.size_range[0];
  spec.max_size = f.size_range[1];
  spec.slide_width = f.slide_size[0];
  spec.slide_height = f.slide_size[1];
  spec.gap = f.gap;
  try {
    if (!f.shapes.empty()) spec.shapes = oracle::ParseShapeList(f.shapes);
    if (!f.intensities.empty()) spec.intensities = oracle::ParseIntensityList(f.intensities);
    if (spec.min_size < 1 || spec.max_size < spec.min_size || spec.slide_width < 1 ||
        spec.slide_height < 1 || spec.gap < 0) {
      throw UsageError("invalid size range, slide size or gap");
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const oracle::SyntheticSlide slide = oracle::GenerateSyntheticSlide(spec);
  oracle::WriteSyntheticSlide(slide, f.out_dir);
  err << Json{{"event", "generated"},
              {"objects", slide.regions.size()},
              {"out_dir", f.out_dir}}
             .dump()
      << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           const std::optional<std::string>& env_budget) {
  CLI::App app{"pathex: region-direct pathomics feature extraction", "pathex"};
  app.require_subcommand(1);

  ExtractFlags extract;
  auto* cmd_extract = app.add_subcommand("extract", "Extract the 247-feature table");
  AddInputFlags(cmd_extract, extract.input, true);
  cmd_extract->add_option("--out", extract.out, "Feature CSV path")->required();
  cmd_extract->add_option("--mode", extract.mode, "batched | per-object")
      ->check(CLI::IsMember({"batched", "per-object"}));
  cmd_extract->add_option("--memory-budget", extract.budget,
                          "Slab budget, e.g. 64MiB (env PATHEX_MEMORY_BUDGET)");
  cmd_extract->add_option("--workers", extract.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd_extract->add_option("--annotated-out", extract.annotated_out,
                          "GeoJSON with properties.pathomics");

  BenchFlags bench;
  auto* cmd_bench = app.add_subcommand("bench", "Time batched extraction against the oracle");
  AddInputFlags(cmd_bench, bench.input, false);
  cmd_bench->add_option("--synthetic", bench.synthetic,
                        "seed=1,objects=5000,size=8-32,slide=4096x4096[,shapes=a+b]");
  cmd_bench->add_option("--repeats", bench.repeats, "Timed runs per mode")
      ->check(CLI::PositiveNumber);
  cmd_bench->add_option("--memory-budget", bench.budget, "Slab budget");
  cmd_bench->add_option("--workers", bench.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd_bench->add_flag("--fault-inject", bench.fault_inject,
                      "Perturb one batched value (tests the mismatch path)");

  CompareFlags compare;
  auto* cmd_compare = app.add_subcommand("compare", "Histogram distance between two CSVs");
  cmd_compare->add_option("csvs", compare.csvs, "Two feature CSVs")->required()->expected(2);
  cmd_compare->add_option("--features", compare.features, "Feature columns")->delimiter(',');
  cmd_compare->add_option("--bins", compare.bins, "Histogram bins")->check(CLI::PositiveNumber);
  cmd_compare->add_option("--tolerance", compare.tolerance, "Largest accepted L1 distance")
      ->check(CLI::NonNegativeNumber);

  InspectFlags inspect;
  auto* cmd_inspect = app.add_subcommand("inspect", "Query the R-tree with a window");
  AddInputFlags(cmd_inspect, inspect.input, true);
  cmd_inspect->add_option("--window", inspect.window, "x,y,w,h")
      ->required()
      ->expected(4)
      ->delimiter(',');

  GenerateFlags generate;
  auto* cmd_generate = app.add_subcommand("generate", "Write a synthetic slide");
  cmd_generate->add_option("--seed", generate.seed, "RNG seed");
  cmd_generate->add_option("--objects", generate.objects, "Object count");
  cmd_generate->add_option("--size-range", generate.size_range, "a,b")
      ->expected(2)
      ->delimiter(',');
  cmd_generate->add_option("--slide-size", generate.slide_size, "W,H")
      ->expected(2)
      ->delimiter(',');
  cmd_generate->add_option("--out-dir", generate.out_dir, "Output directory")->required();
  cmd_generate->add_option("--shapes", generate.shapes, "ellipse,rectangle,blob,ring,line,pixel");
  cmd_generate->add_option("--intensities", generate.intensities,
                           "constant,ramp,gaussian,noise");
  cmd_generate->add_option("--gap", generate.gap, "Minimum spacing between boxes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cmd_extract->parsed()) return RunExtract(extract, env_budget, err);
    if (cmd_bench->parsed()) return RunBench(bench, env_budget, out);
    if (cmd_compare->parsed()) return RunCompare(compare, out);
    if (cmd_inspect->parsed()) return RunInspect(inspect, out);
    if (cmd_generate->parsed()) return RunGenerate(generate, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kPacking ? kExitGenerationInfeasible : kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* env = std::getenv(kBudgetEnvVar);
  return RunCli(args, std::cout, std::cerr,
                env ? std::optional<std::string>(env) : std::nullopt);
}

}  // namespace pathex::cli
