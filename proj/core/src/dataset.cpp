#include "dustbench/dataset.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dustbench/image_io.hpp"
#include "dustbench/random.hpp"
#include "dustbench/scatter.hpp"
#include "json.hpp"

namespace dustbench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string entry_file_name(std::size_t index, const fs::path& clear) {
  char prefix[16];
  std::snprintf(prefix, sizeof(prefix), "%04zu_", index);
  return prefix + sanitize_name(clear.stem().string()) + ".png";
}

void synthesize_entry(const ManifestEntry& entry, bool normalize_depth,
                      const fs::path& root, ManifestEntry* record) {
  const ImageRGB clear = load_image(entry.clear);
  const DepthMap depth = load_depth(entry.depth, normalize_depth);
  const ScatterParams params(parse_hex(entry.a_s_hex), entry.beta);
  const SynthesisResult result = synthesize(clear, depth, params);
  const fs::path out = root / entry.output;
  fs::create_directories(out.parent_path());
  save_image(result.image, out);
  if (record != nullptr) record->clip_fraction = result.clip_fraction;
}

json entry_to_json(const ManifestEntry& e) {
  json j = {
      {"index", e.index},
      {"clear", e.clear},
      {"depth", e.depth},
      {"output", e.output},
      {"a_s", e.a_s_hex},
      {"beta", e.beta},
      {"seed", e.seed},
      {"status", e.status == EntryStatus::kOk ? "ok" : "skipped"},
      {"clip_fraction", e.clip_fraction},
  };
  if (!e.error.empty()) j["error"] = e.error;
  return j;
}

ManifestEntry entry_from_json(const json& j) {
  ManifestEntry e;
  e.index = j.at("index").get<std::size_t>();
  e.clear = j.at("clear").get<std::string>();
  e.depth = j.at("depth").get<std::string>();
  e.output = j.at("output").get<std::string>();
  e.a_s_hex = j.at("a_s").get<std::string>();
  e.beta = j.at("beta").get<double>();
  e.seed = j.at("seed").get<std::uint64_t>();
  const std::string status = j.at("status").get<std::string>();
  if (status != "ok" && status != "skipped") {
    throw InvalidArgument("unknown entry status '" + status + "'");
  }
  e.status = status == "ok" ? EntryStatus::kOk : EntryStatus::kSkipped;
  e.error = j.value("error", "");
  e.clip_fraction = j.value("clip_fraction", 0.0);
  return e;
}

}  // namespace

std::string sanitize_name(std::string_view name) {
  std::string out;
  for (unsigned char c : name) {
    const bool keep = std::isalnum(c) || c == '-' || c == '_' || c == '.';
    out.push_back(keep ? static_cast<char>(c) : '_');
  }
  return out.empty() ? "_" : out;
}

std::size_t DatasetManifest::entry_count() const {
  std::size_t n = 0;
  for (const auto& s : subsets) n += s.entries.size();
  return n;
}

std::size_t DatasetManifest::skipped_count() const {
  std::size_t n = 0;
  for (const auto& s : subsets) {
    for (const auto& e : s.entries) n += e.status == EntryStatus::kSkipped;
  }
  return n;
}

std::vector<std::string> DatasetManifest::validate() const {
  std::vector<std::string> problems;
  Palette parsed;
  try {
    parsed = palette_from_hex(palette);
  } catch (const Error& e) {
    problems.push_back(std::string("palette: ") + e.what());
    return problems;
  }
  for (const auto& subset : subsets) {
    for (const auto& e : subset.entries) {
      const std::string where = subset.name + "[" + std::to_string(e.index) + "]";
      if (!subset.cls.beta_range.contains(e.beta)) {
        problems.push_back(where + ": beta " + std::to_string(e.beta) +
                           " outside subset range");
      }
      try {
        if (!palette_contains(parsed, parse_hex(e.a_s_hex))) {
          problems.push_back(where + ": A_s " + e.a_s_hex + " not in palette");
        }
      } catch (const Error& err) {
        problems.push_back(where + ": " + err.what());
      }
      if (e.seed != derive_seed(master_seed, subset.name, e.index)) {
        problems.push_back(where + ": seed not derived from master seed");
        continue;
      }
      try {
        const ScatterParams redraw = sample_params(e.seed, subset.cls, parsed);
        if (redraw.beta() != e.beta || redraw.a_s().hex() != e.a_s_hex) {
          problems.push_back(where + ": recorded parameters do not match seed");
        }
      } catch (const Error& err) {
        problems.push_back(where + ": " + err.what());
      }
    }
  }
  return problems;
}

std::string DatasetManifest::to_json() const {
  json doc;
  doc["version"] = version;
  doc["master_seed"] = master_seed;
  doc["palette"] = palette;
  doc["normalize_depth"] = normalize_depth;
  doc["subsets"] = json::array();
  for (const auto& s : subsets) {
    json js = {
        {"name", s.name},
        {"class", to_string(s.cls.tag)},
        {"beta_range", {s.cls.beta_range.lo, s.cls.beta_range.hi}},
        {"entries", json::array()},
    };
    for (const auto& e : s.entries) js["entries"].push_back(entry_to_json(e));
    doc["subsets"].push_back(std::move(js));
  }
  return doc.dump(2) + "\n";
}

DatasetManifest DatasetManifest::from_json(std::string_view text) {
  DatasetManifest m;
  try {
    const json doc = json::parse(text);
    m.version = doc.at("version").get<int>();
    if (m.version != kVersion) {
      throw InvalidArgument("unsupported manifest version " +
                            std::to_string(m.version));
    }
    m.master_seed = doc.at("master_seed").get<std::uint64_t>();
    m.palette = doc.at("palette").get<std::vector<std::string>>();
    m.normalize_depth = doc.value("normalize_depth", true);
    for (const auto& js : doc.at("subsets")) {
      ManifestSubset s;
      s.name = js.at("name").get<std::string>();
      const auto range = js.at("beta_range").get<std::vector<double>>();
      if (range.size() != 2) throw InvalidArgument("beta_range needs 2 values");
      s.cls = IntensityClass::with_range(
          parse_intensity(js.at("class").get<std::string>()),
          {range[0], range[1]});
      for (const auto& je : js.at("entries")) {
        s.entries.push_back(entry_from_json(je));
      }
      m.subsets.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

void DatasetManifest::save(const fs::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(IoErrorKind::kUnwritable, path.string(), "");
  out << to_json();
  if (!out) throw IoError(IoErrorKind::kUnwritable, path.string(), "write failed");
}

DatasetManifest DatasetManifest::load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoErrorKind::kMissingFile, path.string(), "");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

DatasetManifest build_dataset(const std::vector<CorpusPair>& corpus,
                              const DatasetConfig& config,
                              const fs::path& root) {
  DatasetManifest manifest;
  manifest.master_seed = config.master_seed;
  manifest.palette = palette_to_hex(config.palette);
  manifest.normalize_depth = config.normalize_depth;
  fs::create_directories(root);

  for (const auto& spec : config.subsets) {
    if (spec.count < 0) {
      throw InvalidArgument("subset '" + spec.name + "' has negative count");
    }
    ManifestSubset subset{spec.name, spec.cls, {}};
    if (!corpus.empty()) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(spec.count); ++i) {
        const CorpusPair& pair = corpus[i % corpus.size()];
        ManifestEntry entry;
        entry.index = i;
        entry.clear = pair.clear.string();
        entry.depth = pair.depth.string();
        entry.seed = derive_seed(config.master_seed, spec.name, i);
        const ScatterParams params =
            sample_params(entry.seed, spec.cls, config.palette);
        entry.beta = params.beta();
        entry.a_s_hex = params.a_s().hex();
        entry.output =
            (fs::path(sanitize_name(spec.name)) / entry_file_name(i, pair.clear))
                .generic_string();
        try {
          synthesize_entry(entry, config.normalize_depth, root, &entry);
        } catch (const Error& e) {
          entry.status = EntryStatus::kSkipped;
          entry.output.clear();
          entry.error = e.what();
        }
        subset.entries.push_back(std::move(entry));
      }
    }
    manifest.subsets.push_back(std::move(subset));
  }
  manifest.save(root / kManifestFileName);
  return manifest;
}

void regenerate_dataset(const DatasetManifest& manifest, const fs::path& root) {
  fs::create_directories(root);
  for (const auto& subset : manifest.subsets) {
    for (const auto& entry : subset.entries) {
      if (entry.status != EntryStatus::kOk) continue;
      synthesize_entry(entry, manifest.normalize_depth, root, nullptr);
    }
  }
}

}  // namespace dustbench
