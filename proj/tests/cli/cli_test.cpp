#include "dustbench/cli/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "dustbench/dataset.hpp"
#include "dustbench/image_io.hpp"
#include "dustbench/scenes.hpp"
#include "json.hpp"
#include "support/test_util.hpp"

namespace dustbench::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::TempDir;

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

void write_scene(const fs::path& dir, const std::string& stem, std::uint64_t seed,
                 int w = 48, int h = 40) {
  const Scene s = make_outdoor_scene(w, h, seed);
  save_image(s.clear, dir / (stem + ".png"));
  save_depth(s.depth, dir / (stem + "_depth.png"));
}

std::string build_config(const fs::path& dir, int images, int per_subset,
                         bool with_missing = false) {
  json corpus = json::array();
  for (int i = 0; i < images; ++i) {
    const std::string stem = "c" + std::to_string(i);
    write_scene(dir, stem, static_cast<std::uint64_t>(i));
    corpus.push_back({{"clear", stem + ".png"}, {"depth", stem + "_depth.png"}});
  }
  if (with_missing) corpus.push_back({{"clear", "gone.png"}, {"depth", "gone_depth.png"}});
  json subsets = json::array();
  for (const char* cls : {"light", "medium", "dense", "hybrid"}) {
    subsets.push_back({{"name", std::string("E-") + cls}, {"class", cls}, {"count", per_subset}});
  }
  const json cfg = {{"version", 1},
                    {"master_seed", 99},
                    {"corpus", corpus},
                    {"output_dir", "out"},
                    {"synthesis", {{"subsets", subsets}}}};
  const fs::path p = dir / "config.json";
  testing::write_bytes(p, cfg.dump(2));
  return p.string();
}

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      files[fs::relative(e.path(), root).string()] = testing::read_bytes(e.path());
    }
  }
  return files;
}

void expect_run_dir(const fs::path& dir) {
  EXPECT_TRUE(fs::exists(dir / kResolvedConfigFile)) << dir;
  EXPECT_TRUE(fs::exists(dir / kSummaryFile)) << dir;
}

TEST(Cli, SynthesizeWritesImageAndJsonLine) {
  TempDir dir;
  write_scene(dir.path(), "s", 1);
  const fs::path out = dir / "dusty.png";
  const CliRun r = run({"synthesize", "--clear", (dir / "s.png").string(), "--depth",
                     (dir / "s_depth.png").string(), "--a-s", "#C89463", "--beta", "0.4",
                     "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(fs::exists(out));
  const json line = json::parse(last_line(r.out));
  EXPECT_EQ(line["beta"].get<double>(), 0.4);
  EXPECT_EQ(line["a_s"], "#C89463");
  EXPECT_TRUE(line.contains("clip_fraction"));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST(Cli, SynthesizeRejectsZeroBeta) {
  TempDir dir;
  write_scene(dir.path(), "s", 1);
  const CliRun r = run({"synthesize", "--clear", (dir / "s.png").string(), "--depth",
                     (dir / "s_depth.png").string(), "--a-s", "#C89463", "--beta", "0",
                     "--out", (dir / "o.png").string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("0 < beta"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir / "o.png"));
}

TEST(Cli, SynthesizeShapeMismatchNamesBothShapes) {
  TempDir dir;
  write_scene(dir.path(), "a", 1, 48, 40);
  write_scene(dir.path(), "b", 2, 30, 40);
  const CliRun r = run({"synthesize", "--clear", (dir / "a.png").string(), "--depth",
                     (dir / "b_depth.png").string(), "--a-s", "#C89463", "--beta", "0.4",
                     "--out", (dir / "o.png").string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("48x40"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("30x40"), std::string::npos) << r.err;
}

TEST(Cli, SynthesizeMissingInput) {
  TempDir dir;
  const CliRun r = run({"synthesize", "--clear", (dir / "x.png").string(), "--depth",
                     (dir / "y.png").string(), "--a-s", "#C89463", "--beta", "0.4",
                     "--out", (dir / "o.png").string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("x.png"), std::string::npos) << r.err;
}

TEST(Cli, BuildFourByFourIsDeterministic) {
  TempDir dir;
  const std::string cfg = build_config(dir.path(), 4, 4);
  const CliRun a = run({"build", "--config", cfg});
  ASSERT_EQ(a.status, 0) << a.err;
  const fs::path out = dir / "out";
  expect_run_dir(out);
  const DatasetManifest m = DatasetManifest::load(out / std::string(kManifestFileName));
  EXPECT_EQ(m.entry_count(), 16u);
  EXPECT_TRUE(m.validate().empty());
  const json summary = json::parse(last_line(a.out));
  EXPECT_EQ(summary["entries"], 16);
  ASSERT_EQ(summary["subsets"].size(), 4u);
  EXPECT_EQ(summary["subsets"][2]["count"], 4);
  const auto first = snapshot(out);
  fs::remove_all(out);
  ASSERT_EQ(run({"build", "--config", cfg}).status, 0);
  EXPECT_EQ(snapshot(out), first);
}

TEST(Cli, BuildSkipsMissingImage) {
  TempDir dir;
  const std::string cfg = build_config(dir.path(), 1, 2, true);
  const CliRun r = run({"build", "--config", cfg, "--out", (dir / "o2").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const json summary = json::parse(last_line(r.out));
  EXPECT_EQ(summary["skipped"], 4);  // entry 1 of each subset uses the missing pair
  EXPECT_NE(r.err.find("skipped"), std::string::npos);
  expect_run_dir(dir / "o2");
}

TEST(Cli, BuildSkipCountOfOne) {
  TempDir dir;
  const std::string cfg = build_config(dir.path(), 1, 2, true);
  json j = json::parse(testing::read_bytes(cfg));
  j["synthesis"]["subsets"] = json::array({{{"name", "only"}, {"class", "dense"}, {"count", 2}}});
  testing::write_bytes(cfg, j.dump());
  const CliRun r = run({"build", "--config", cfg});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(last_line(r.out))["skipped"], 1);
}

TEST(Cli, BuildUsesConfigFromEnvironmentAndSeedOverride) {
  TempDir dir;
  const std::string cfg = build_config(dir.path(), 2, 1);
  ::setenv(kConfigEnvVar, cfg.c_str(), 1);
  const CliRun r = run({"--seed", "5", "build", "--out", (dir / "env").string()});
  ::unsetenv(kConfigEnvVar);
  ASSERT_EQ(r.status, 0) << r.err;
  const json resolved =
      json::parse(testing::read_bytes(dir / "env" / kResolvedConfigFile));
  EXPECT_EQ(resolved["master_seed"], 5);
  EXPECT_EQ(resolved["command"], "build");
}

TEST(Cli, BuildFromManifestRegeneratesIdenticalFiles) {
  TempDir dir;
  const std::string cfg = build_config(dir.path(), 2, 2);
  ASSERT_EQ(run({"build", "--config", cfg}).status, 0);
  const fs::path regen = dir / "regen";
  const CliRun r = run({"build", "--from-manifest", (dir / "out" / "manifest.json").string(),
                     "--out", regen.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  auto a = snapshot(dir / "out");
  auto b = snapshot(regen);
  for (auto* m : {&a, &b}) {
    m->erase(kResolvedConfigFile);
    m->erase(kSummaryFile);
  }
  EXPECT_EQ(a, b);
}

TEST(Cli, BuildWithoutConfigFails) {
  const CliRun r = run({"build"});
  EXPECT_NE(r.status, 0);
}

TEST(Cli, BadConfigIsFatal) {
  TempDir dir;
  testing::write_bytes(dir / "bad.json", "{\"master_seed\": ");
  EXPECT_NE(run({"build", "--config", (dir / "bad.json").string()}).status, 0);
}

TEST(Cli, AnalyzeDenseImageAndGray) {
  TempDir dir;
  write_scene(dir.path(), "s", 8, 96, 72);
  const fs::path dusty = dir / "dusty.png";
  ASSERT_EQ(run({"synthesize", "--clear", (dir / "s.png").string(), "--depth",
                 (dir / "s_depth.png").string(), "--a-s", "#B37A43", "--beta", "0.55",
                 "--out", dusty.string()})
                .status,
            0);
  const CliRun a = run({"analyze", dusty.string(), "--out", (dir / "an").string()});
  ASSERT_EQ(a.status, 0) << a.err;
  expect_run_dir(dir / "an");
  const json row = json::parse(a.out.substr(0, a.out.find('\n')));
  EXPECT_TRUE(row["verdict"].get<bool>());
  EXPECT_EQ(row["k"], 15);
  EXPECT_TRUE(row.contains("collinearity_residual"));
  EXPECT_TRUE(fs::exists(dir / "an" / "dusty.histogram.csv"));
  EXPECT_TRUE(fs::exists(dir / "an" / "dusty.clusters.csv"));
  EXPECT_TRUE(fs::exists(dir / "an" / "dusty.priors.json"));

  // Gray image with enough distinct levels for k = 15.
  ImageRGB gray(16, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      const double v = (x + 16 * y) / 255.0;
      gray.set_pixel(x, y, {v, v, v});
    }
  }
  save_image(gray, dir / "gray.png");
  const CliRun g = run({"analyze", (dir / "gray.png").string(), "--out", (dir / "ag").string()});
  ASSERT_EQ(g.status, 0) << g.err;
  const json grow = json::parse(g.out.substr(0, g.out.find('\n')));
  EXPECT_FALSE(grow["verdict"].get<bool>());
  EXPECT_EQ(grow["shifting_score"].get<double>(), 0.0);
}

TEST(Cli, AnalyzeTwoColorImageWithTooManyClusters) {
  TempDir dir;
  ImageRGB img(4, 4);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 4; ++y) img.set_pixel(x, y, {1, 0, 0});
  }
  save_image(img, dir / "two.png");
  const CliRun r = run({"analyze", (dir / "two.png").string(), "--out", (dir / "a").string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("k = 15"), std::string::npos) << r.err;
}

TEST(Cli, AnalyzeManifest) {
  TempDir dir;
  const std::string cfg = build_config(dir.path(), 1, 1);
  ASSERT_EQ(run({"build", "--config", cfg}).status, 0);
  const CliRun r = run({"--quiet", "analyze", (dir / "out" / "manifest.json").string(), "--out",
                     (dir / "an").string(), "--k", "4"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(last_line(r.out))["count"], 4);
  const json summary = json::parse(testing::read_bytes(dir / "an" / kSummaryFile));
  EXPECT_EQ(summary["images"].size(), 4u);
}

TEST(Cli, EvaluateIdenticalPairs) {
  TempDir dir;
  json pairs = json::array();
  for (int i = 0; i < 3; ++i) {
    const std::string name = "p" + std::to_string(i) + ".png";
    save_image(make_outdoor_scene(40, 36, static_cast<std::uint64_t>(i)).clear, dir / name);
    pairs.push_back({{"test", name}, {"reference", name}});
  }
  testing::write_bytes(dir / "pairs.json", json{{"pairs", pairs}}.dump());
  const CliRun r = run({"evaluate", (dir / "pairs.json").string(), "--out", (dir / "ev").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  expect_run_dir(dir / "ev");
  const json summary = json::parse(last_line(r.out));
  EXPECT_EQ(summary["aggregate"]["MSE"], "0");
  EXPECT_EQ(summary["aggregate"]["PSNR"], "+inf");
  EXPECT_EQ(summary["aggregate"]["SSIM"], "1");
  EXPECT_EQ(summary["aggregate"]["CIEDE2000"], "0");
  const std::string csv = testing::read_bytes(dir / "ev" / "metrics.csv");
  EXPECT_EQ(last_line(csv).rfind("aggregate,", 0), 0u);
}

TEST(Cli, EvaluateNoReferenceAndMetricSelection) {
  TempDir dir;
  save_image(make_outdoor_scene(40, 36, 1).clear, dir / "a.png");
  testing::write_bytes(dir / "pairs.json", R"({"pairs": [{"test": "a.png"}]})");
  const CliRun r = run({"evaluate", (dir / "pairs.json").string(), "--out", (dir / "ev").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(testing::read_bytes(dir / "ev" / "metrics.json"));
  EXPECT_EQ(j["columns"], json::array({"AG", "EI", "IE"}));

  testing::write_bytes(dir / "p2.json", R"({"pairs": [{"test": "a.png", "reference": "a.png"}]})");
  const CliRun s = run({"evaluate", (dir / "p2.json").string(), "--metrics", "MSE,SSIM", "--out",
                     (dir / "ev2").string()});
  ASSERT_EQ(s.status, 0) << s.err;
  const json j2 = json::parse(testing::read_bytes(dir / "ev2" / "metrics.json"));
  EXPECT_EQ(j2["columns"], json::array({"MSE", "SSIM"}));
}

TEST(Cli, EvaluateBadManifestIsFatalButBadPairIsNot) {
  TempDir dir;
  testing::write_bytes(dir / "bad.json", "{");
  EXPECT_NE(run({"evaluate", (dir / "bad.json").string(), "--out", (dir / "e").string()}).status,
            0);
  save_image(make_outdoor_scene(40, 36, 1).clear, dir / "a.png");
  testing::write_bytes(dir / "p.json",
                       R"({"pairs": [{"test": "a.png", "reference": "a.png"},
                                     {"test": "nope.png", "reference": "a.png"}]})");
  const CliRun r = run({"evaluate", (dir / "p.json").string(), "--out", (dir / "e2").string()});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(last_line(r.out))["errors"], 1);
}

TEST(Cli, TimeWritesReport) {
  TempDir dir;
  const CliRun r = run({"time", "--sizes", "32,48", "--repetitions", "3", "--warmup", "1", "--out",
                     (dir / "t").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  expect_run_dir(dir / "t");
  const json j = json::parse(testing::read_bytes(dir / "t" / "timing.json"));
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_NE(run({"time", "--sizes", "32", "--repetitions", "2", "--out",
                 (dir / "t2").string()})
                .status,
            0);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run({}).status, 0);
  EXPECT_NE(run({"frobnicate"}).status, 0);
  EXPECT_EQ(run({"--help"}).status, 0);
}

}  // namespace
}  // namespace dustbench::cli
