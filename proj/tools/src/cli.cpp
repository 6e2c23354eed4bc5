#include "dustbench/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dustbench/cli/run_config.hpp"
#include "dustbench/color.hpp"
#include "dustbench/histogram.hpp"
#include "dustbench/image_io.hpp"
#include "dustbench/kmeans.hpp"
#include "dustbench/quantize.hpp"
#include "dustbench/scatter.hpp"
#include "dustbench/timing.hpp"
#include "json.hpp"

namespace dustbench::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string config;
  std::string out;
  bool quiet = false;
};

struct Context {
  GlobalOptions global;
  std::ostream& out;
  std::ostream& err;

  void log(const json& line) const {
    if (!global.quiet) out << line.dump() << '\n';
  }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(IoErrorKind::kUnwritable, path.string(), "cannot open for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw IoError(IoErrorKind::kUnwritable, path.string(), "write failed");
}

// Config from --config, else $DUSTBENCH_CONFIG, else defaults; then the
// global overrides.
RunConfig resolve_config(const GlobalOptions& g, bool* from_file = nullptr) {
  std::string path = g.config;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
  }
  RunConfig cfg = path.empty() ? RunConfig{} : RunConfig::load(path);
  if (from_file) *from_file = !path.empty();
  if (g.seed_given) cfg.master_seed = g.seed;
  if (!g.out.empty()) cfg.output_dir = g.out;
  return cfg;
}

fs::path prepare_run_dir(const RunConfig& cfg, const std::string& command,
                         const json& arguments) {
  const fs::path dir = cfg.output_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(IoErrorKind::kUnwritable, dir.string(), ec.message());
  json resolved = json::parse(cfg.to_json());
  resolved["command"] = command;
  resolved["arguments"] = arguments;
  write_text(dir / kResolvedConfigFile, resolved.dump(2));
  return dir;
}

json to_json_array(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

// ---- synthesize ----

struct SynthesizeArgs {
  std::string clear;
  std::string depth;
  std::string a_s;
  double beta = 0.0;
  bool raw_depth = false;
};

int cmd_synthesize(const Context& ctx, const SynthesizeArgs& a) {
  if (ctx.global.out.empty()) throw InvalidArgument("synthesize needs --out <image path>");
  const ScatterParams params(parse_hex(a.a_s), a.beta);
  const ImageRGB clear = load_image(a.clear);
  const DepthMap depth = load_depth(a.depth, !a.raw_depth);
  const SynthesisResult result = synthesize(clear, depth, params);
  const fs::path out_path = ctx.global.out;
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  save_image(result.image, out_path);
  ctx.out << json{{"output", out_path.string()},
                  {"width", clear.width()},
                  {"height", clear.height()},
                  {"a_s", params.a_s().hex()},
                  {"beta", params.beta()},
                  {"clip_fraction", result.clip_fraction},
                  {"pre_clamp_min", to_json_array(result.pre_clamp_min)},
                  {"pre_clamp_max", to_json_array(result.pre_clamp_max)}}
                 .dump()
          << '\n';
  return 0;
}

// ---- build ----

json subset_summary(const DatasetManifest& m) {
  json subsets = json::array();
  for (const ManifestSubset& s : m.subsets) {
    const auto skipped = std::count_if(s.entries.begin(), s.entries.end(), [](const auto& e) {
      return e.status == EntryStatus::kSkipped;
    });
    subsets.push_back({{"name", s.name},
                       {"class", to_string(s.cls.tag)},
                       {"beta_range", {s.cls.beta_range.lo, s.cls.beta_range.hi}},
                       {"count", s.entries.size()},
                       {"ok", s.entries.size() - static_cast<std::size_t>(skipped)},
                       {"skipped", skipped}});
  }
  return {{"entries", m.entry_count()},
          {"skipped", m.skipped_count()},
          {"subsets", subsets}};
}

int cmd_build(const Context& ctx, const std::string& from_manifest) {
  bool from_file = false;
  RunConfig cfg = resolve_config(ctx.global, &from_file);
  DatasetManifest manifest;
  fs::path dir;
  if (!from_manifest.empty()) {
    manifest = DatasetManifest::load(from_manifest);
    if (ctx.global.seed_given && ctx.global.seed != manifest.master_seed) {
      throw InvalidArgument("--seed conflicts with the manifest's master seed");
    }
    cfg.master_seed = manifest.master_seed;
    cfg.palette = palette_from_hex(manifest.palette);
    cfg.normalize_depth = manifest.normalize_depth;
    dir = prepare_run_dir(cfg, "build", {{"from_manifest", from_manifest}});
    regenerate_dataset(manifest, dir);
    manifest.save(dir / kManifestFileName);
  } else {
    if (!from_file) {
      throw InvalidArgument(std::string("build needs --config or $") + kConfigEnvVar);
    }
    dir = prepare_run_dir(cfg, "build", json::object());
    manifest = build_dataset(cfg.corpus, cfg.dataset_config(), dir);
    for (const ManifestSubset& s : manifest.subsets) {
      for (const ManifestEntry& e : s.entries) {
        if (e.status == EntryStatus::kSkipped) {
          ctx.err << json{{"event", "skipped"}, {"subset", s.name},
                          {"index", e.index}, {"clear", e.clear}, {"error", e.error}}
                         .dump()
                  << '\n';
        }
      }
    }
  }
  json summary = subset_summary(manifest);
  summary["command"] = "build";
  summary["manifest"] = std::string(kManifestFileName);
  write_text(dir / kSummaryFile, summary.dump(2));
  ctx.out << summary.dump() << '\n';
  return 0;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string input;
  std::optional<int> k;
  std::optional<int> levels;
  std::optional<double> sigma_max;
  std::optional<double> delta_min;
};

bool looks_like_manifest(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return ext == ".json";
}

json analyze_one(const RunConfig& cfg, const ImageRGB& image, const fs::path& dir,
                 const std::string& name) {
  const HistogramSet hist = channel_histograms(image);
  {
    std::ofstream f(dir / (name + ".histogram.csv"));
    write_histogram_csv(hist, f);
  }
  const PriorReport prior = prior_characteristics(image, cfg.thresholds);
  write_text(dir / (name + ".priors.json"), prior.to_json());

  const ImageRGB source = cfg.quantize_levels > 0 ? color_quantize(image, cfg.quantize_levels)
                                                  : image;
  KMeansOptions opts;
  opts.k = cfg.k;
  opts.seed = cfg.master_seed;
  const ClusterResult clusters =
      kmeans_lab(sample_pixels(rgb_to_lab(source), cfg.sample_cap, cfg.master_seed), opts);
  {
    std::ofstream f(dir / (name + ".clusters.csv"));
    write_cluster_csv(clusters, f);
  }
  json row = json::parse(prior.to_json());
  row["image"] = name;
  row["k"] = clusters.k;
  row["kmeans_iterations"] = clusters.iterations;
  row["kmeans_converged"] = clusters.converged;
  row["collinearity_residual"] = clusters.collinearity_residual;
  return row;
}

int cmd_analyze(const Context& ctx, const AnalyzeArgs& a) {
  RunConfig cfg = resolve_config(ctx.global);
  if (a.k) cfg.k = *a.k;
  if (a.levels) cfg.quantize_levels = *a.levels;
  if (a.sigma_max) cfg.thresholds.sigma_max = *a.sigma_max;
  if (a.delta_min) cfg.thresholds.delta_min = *a.delta_min;

  // (label, path) of every image to analyze.
  std::vector<std::pair<std::string, fs::path>> images;
  const fs::path input = a.input;
  if (looks_like_manifest(input)) {
    const DatasetManifest m = DatasetManifest::load(input);
    for (const ManifestSubset& s : m.subsets) {
      for (const ManifestEntry& e : s.entries) {
        if (e.status != EntryStatus::kOk) continue;
        const fs::path rel(e.output);
        images.emplace_back(sanitize_name(s.name) + "_" + rel.stem().string(),
                            input.parent_path() / rel);
      }
    }
  } else {
    images.emplace_back(input.stem().string(), input);
  }

  const fs::path dir = prepare_run_dir(cfg, "analyze", {{"input", a.input}});
  json rows = json::array();
  for (const auto& [name, path] : images) {
    json row = analyze_one(cfg, load_image(path), dir, name);
    row["path"] = path.string();
    ctx.log(row);
    rows.push_back(row);
  }
  const json summary = {{"command", "analyze"}, {"count", rows.size()}, {"images", rows}};
  write_text(dir / kSummaryFile, summary.dump(2));
  ctx.out << json{{"command", "analyze"}, {"count", rows.size()},
                  {"output_dir", dir.string()}}
                 .dump()
          << '\n';
  return 0;
}

// ---- evaluate ----

int cmd_evaluate(const Context& ctx, const std::string& pairs_path,
                 const std::vector<std::string>& metric_names) {
  RunConfig cfg = resolve_config(ctx.global);
  if (!metric_names.empty()) {
    cfg.metrics.enabled.fill(false);
    for (const std::string& n : metric_names) {
      cfg.metrics.enabled[static_cast<std::size_t>(parse_metric(n))] = true;
    }
  }
  const std::vector<PairSpec> pairs = load_pairs(pairs_path);
  const fs::path dir = prepare_run_dir(cfg, "evaluate", {{"pairs", pairs_path}});
  const MetricReport report = evaluate_pairs(pairs, cfg.metrics);
  {
    std::ofstream f(dir / "metrics.csv");
    report.write_csv(f);
  }
  write_text(dir / "metrics.json", report.to_json());
  for (const MetricRow& row : report.rows) {
    if (!row.ok()) {
      ctx.err << json{{"event", "pair_failed"}, {"test", row.test}, {"error", row.error}}.dump()
              << '\n';
    }
  }
  json aggregate = json::object();
  for (Metric m : report.columns()) {
    const auto& v = report.aggregate[static_cast<std::size_t>(m)];
    if (v) aggregate[std::string(metric_name(m))] = format_metric_value(m, *v);
  }
  const json summary = {{"command", "evaluate"},
                        {"pairs", report.rows.size()},
                        {"errors", report.error_count()},
                        {"aggregate", aggregate},
                        {"outputs", {"metrics.csv", "metrics.json"}}};
  write_text(dir / kSummaryFile, summary.dump(2));
  ctx.out << summary.dump() << '\n';
  return 0;
}

// ---- time ----

int cmd_time(const Context& ctx, const std::vector<int>& sizes, int repetitions,
             int warmup) {
  RunConfig cfg = resolve_config(ctx.global);
  TimingOptions opts;
  opts.sizes = sizes;
  opts.repetitions = repetitions;
  opts.warmup = warmup;
  opts.seed = cfg.master_seed;
  opts.metrics = cfg.metrics;
  const fs::path dir = prepare_run_dir(
      cfg, "time", {{"sizes", sizes}, {"repetitions", repetitions}, {"warmup", warmup}});
  const TimingReport report = run_timing(opts);
  {
    std::ofstream f(dir / "timing.csv");
    report.write_csv(f);
  }
  write_text(dir / "timing.json", report.to_json());
  for (const TimingRow& r : report.rows) {
    ctx.log({{"operation", r.operation}, {"size", r.size}, {"mean_seconds", r.mean}});
  }
  const json summary = {{"command", "time"},
                        {"rows", report.rows.size()},
                        {"outputs", {"timing.csv", "timing.json"}}};
  write_text(dir / kSummaryFile, summary.dump(2));
  ctx.out << summary.dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sand-dust image synthesis and quality benchmark toolkit", "dustbench"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Master seed (overrides the config)");
  app.add_option("--config", g.config,
                 std::string("Run config JSON (default: $") + kConfigEnvVar + ")");
  app.add_option("--out", g.out, "Output image (synthesize) or run directory");
  app.add_flag("--quiet", g.quiet, "Suppress per-item log lines");

  SynthesizeArgs syn;
  CLI::App* synth = app.add_subcommand("synthesize", "Degrade one clear image");
  synth->add_option("--clear", syn.clear, "Clear image (PNG/PPM)")->required();
  synth->add_option("--depth", syn.depth, "Depth map (PNG/PFM)")->required();
  synth->add_option("--a-s", syn.a_s, "Color deviation as #RRGGBB")->required();
  synth->add_option("--beta", syn.beta, "Attenuation coefficient")->required();
  synth->add_flag("--raw-depth", syn.raw_depth, "Use depth values as stored");

  std::string from_manifest;
  CLI::App* build = app.add_subcommand("build", "Generate a dataset from a config");
  build->add_option("--from-manifest", from_manifest,
                    "Regenerate the images recorded in an existing manifest");

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand("analyze", "Color statistics of an image or dataset");
  analyze->add_option("input", an.input, "Image, or a dataset manifest.json")->required();
  analyze->add_option("--k", an.k, "Cluster count");
  analyze->add_option("--levels", an.levels, "Quantize to this many levels first");
  analyze->add_option("--sigma-max", an.sigma_max, "Concentration threshold");
  analyze->add_option("--delta-min", an.delta_min, "Shifting threshold");

  std::string pairs_path;
  std::vector<std::string> metric_names;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score (test, reference) pairs");
  evaluate->add_option("pairs", pairs_path, "Pairs JSON")->required();
  evaluate->add_option("--metrics", metric_names, "Subset of metrics to compute")
      ->delimiter(',');

  std::vector<int> sizes = {256, 512, 1024};
  int repetitions = 3;
  int warmup = 1;
  CLI::App* time = app.add_subcommand("time", "Runtime of synthesis and evaluation");
  time->add_option("--sizes", sizes, "Square image sizes")->delimiter(',');
  time->add_option("--repetitions", repetitions, "Timed runs per cell (>= 3)");
  time->add_option("--warmup", warmup, "Untimed runs before timing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  g.seed_given = app.count("--seed") > 0;

  const Context ctx{g, out, err};
  try {
    if (*synth) return cmd_synthesize(ctx, syn);
    if (*build) return cmd_build(ctx, from_manifest);
    if (*analyze) return cmd_analyze(ctx, an);
    if (*evaluate) return cmd_evaluate(ctx, pairs_path, metric_names);
    if (*time) return cmd_time(ctx, sizes, repetitions, warmup);
  } catch (const std::exception& e) {
    err << "dustbench: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace dustbench::cli
