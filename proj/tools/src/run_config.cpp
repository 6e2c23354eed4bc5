#include "dustbench/cli/run_config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dustbench::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

std::vector<SubsetSpec> default_subsets(int count) {
  std::vector<SubsetSpec> subsets;
  for (Intensity tag : {Intensity::kLight, Intensity::kMedium, Intensity::kDense,
                        Intensity::kHybrid}) {
    subsets.push_back({to_string(tag), IntensityClass::standard(tag), count});
  }
  return subsets;
}

DatasetConfig RunConfig::dataset_config() const {
  DatasetConfig cfg;
  cfg.master_seed = master_seed;
  cfg.palette = palette;
  cfg.normalize_depth = normalize_depth;
  cfg.subsets = subsets.empty() ? default_subsets(static_cast<int>(corpus.size()))
                                : subsets;
  for (SubsetSpec& s : cfg.subsets) {
    const auto it = beta_overrides.find(s.name);
    if (it != beta_overrides.end()) {
      s.cls = IntensityClass::with_range(s.cls.tag, it->second);
    }
  }
  return cfg;
}

std::string RunConfig::to_json() const {
  json j;
  j["version"] = 1;
  j["master_seed"] = master_seed;
  if (palette_path) j["palette_path"] = palette_path->string();
  j["palette"] = palette_to_hex(palette);
  json corpus_json = json::array();
  for (const CorpusPair& p : corpus) {
    corpus_json.push_back({{"clear", p.clear.string()}, {"depth", p.depth.string()}});
  }
  j["corpus"] = corpus_json;
  j["normalize_depth"] = normalize_depth;
  j["output_dir"] = output_dir.string();

  json subsets_json = json::array();
  for (const SubsetSpec& s : dataset_config().subsets) {
    subsets_json.push_back({{"name", s.name},
                            {"class", to_string(s.cls.tag)},
                            {"count", s.count},
                            {"beta_range", {s.cls.beta_range.lo, s.cls.beta_range.hi}}});
  }
  json overrides = json::object();
  for (const auto& [name, range] : beta_overrides) overrides[name] = {range.lo, range.hi};
  j["synthesis"] = {{"subsets", subsets_json}, {"beta_overrides", overrides}};

  j["analysis"] = {{"sigma_max", thresholds.sigma_max},
                   {"delta_min", thresholds.delta_min},
                   {"k", k},
                   {"quantize_levels", quantize_levels},
                   {"sample_cap", sample_cap}};
  json toggles = json::object();
  for (Metric m : kAllMetrics) {
    toggles[std::string(metric_name(m))] = metrics.is_enabled(m);
  }
  j["metrics"] = toggles;
  return j.dump(2);
}

RunConfig RunConfig::from_json(std::string_view text, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");

  RunConfig cfg;
  try {
    read_opt(j, "master_seed", cfg.master_seed);
    if (j.contains("palette_path")) {
      cfg.palette_path = resolve(base_dir, j.at("palette_path").get<std::string>());
      cfg.palette = load_palette(*cfg.palette_path);
    } else if (j.contains("palette")) {
      cfg.palette = palette_from_hex(j.at("palette").get<std::vector<std::string>>());
    }
    if (j.contains("corpus")) {
      for (const json& p : j.at("corpus")) {
        cfg.corpus.push_back({resolve(base_dir, p.at("clear").get<std::string>()),
                              resolve(base_dir, p.at("depth").get<std::string>())});
      }
    }
    read_opt(j, "normalize_depth", cfg.normalize_depth);
    if (j.contains("output_dir")) {
      cfg.output_dir = resolve(base_dir, j.at("output_dir").get<std::string>());
    }

    if (j.contains("synthesis")) {
      const json& syn = j.at("synthesis");
      if (syn.contains("subsets")) {
        for (const json& s : syn.at("subsets")) {
          const Intensity tag = parse_intensity(s.at("class").get<std::string>());
          IntensityClass cls = IntensityClass::standard(tag);
          if (s.contains("beta_range")) {
            const auto r = s.at("beta_range").get<std::vector<double>>();
            if (r.size() != 2) throw InvalidArgument("beta_range needs [lo, hi]");
            cls = IntensityClass::with_range(tag, {r[0], r[1]});
          }
          const int count = s.at("count").get<int>();
          if (count < 0) throw InvalidArgument("subset count must be >= 0");
          cfg.subsets.push_back({s.at("name").get<std::string>(), cls, count});
        }
      }
      if (syn.contains("beta_overrides")) {
        for (const auto& [name, r] : syn.at("beta_overrides").items()) {
          const auto v = r.get<std::vector<double>>();
          if (v.size() != 2) throw InvalidArgument("beta override needs [lo, hi]");
          cfg.beta_overrides[name] = {v[0], v[1]};
        }
      }
    }

    if (j.contains("analysis")) {
      const json& a = j.at("analysis");
      read_opt(a, "sigma_max", cfg.thresholds.sigma_max);
      read_opt(a, "delta_min", cfg.thresholds.delta_min);
      read_opt(a, "k", cfg.k);
      read_opt(a, "quantize_levels", cfg.quantize_levels);
      read_opt(a, "sample_cap", cfg.sample_cap);
    }

    if (j.contains("metrics")) {
      for (const auto& [name, on] : j.at("metrics").items()) {
        cfg.metrics.enabled[static_cast<std::size_t>(parse_metric(name))] = on.get<bool>();
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config field has the wrong type: ") + e.what());
  }
  if (cfg.k < 1) throw InvalidArgument("analysis.k must be >= 1");
  if (cfg.quantize_levels != 0 && (cfg.quantize_levels < 2 || cfg.quantize_levels > 256)) {
    throw InvalidArgument("analysis.quantize_levels must be 0 or in [2, 256]");
  }
  if (cfg.sample_cap == 0) throw InvalidArgument("analysis.sample_cap must be > 0");
  return cfg;
}

RunConfig RunConfig::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoErrorKind::kMissingFile, path.string(), "cannot open config");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), path.parent_path());
}

}  // namespace dustbench::cli
