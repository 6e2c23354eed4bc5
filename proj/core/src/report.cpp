#include "dustbench/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "dustbench/delta_e.hpp"
#include "dustbench/image_io.hpp"
#include "dustbench/nr_metrics.hpp"
#include "json.hpp"

namespace dustbench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::array<std::string_view, kMetricCount> kNames = {
    "MSE", "PSNR", "SSIM", "FSIMc", "CIE94", "CIEDE2000", "AG", "EI", "IE"};

std::size_t slot(Metric m) { return static_cast<std::size_t>(m); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json value_to_json(Metric m, double v) {
  if (m == Metric::kPsnr && is_perfect_psnr(v)) return "+inf";
  return v;
}

}  // namespace

std::string_view metric_name(Metric m) { return kNames[slot(m)]; }

bool is_full_reference(Metric m) {
  return m != Metric::kAg && m != Metric::kEi && m != Metric::kIe;
}

Metric parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    std::string a(metric_name(m));
    std::string b(name);
    const auto lower = [](std::string& s) {
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return std::tolower(c); });
    };
    lower(a);
    lower(b);
    if (a == b) return m;
  }
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

std::string format_metric_value(Metric m, double value) {
  if (m == Metric::kPsnr && is_perfect_psnr(value)) return "+inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

MetricValues compute_metrics(const ImageRGB& test, const ImageRGB* ref,
                             const EvaluationOptions& options) {
  MetricValues v;
  const auto on = [&](Metric m) { return options.is_enabled(m); };
  if (ref != nullptr) {
    require_same_shape(test, *ref, "test and reference");
    if (on(Metric::kMse)) v[slot(Metric::kMse)] = mse(test, *ref);
    if (on(Metric::kPsnr)) v[slot(Metric::kPsnr)] = psnr(test, *ref);
    if (on(Metric::kSsim)) v[slot(Metric::kSsim)] = ssim(test, *ref, options.ssim);
    if (on(Metric::kFsimc)) {
      v[slot(Metric::kFsimc)] = fsim(test, *ref, options.fsim).fsimc;
    }
    if (on(Metric::kCie94)) {
      v[slot(Metric::kCie94)] = color_difference(test, *ref, DeltaEFormula::kCie94);
    }
    if (on(Metric::kCiede2000)) {
      v[slot(Metric::kCiede2000)] =
          color_difference(test, *ref, DeltaEFormula::kCiede2000);
    }
  }
  if (on(Metric::kAg) || on(Metric::kEi) || on(Metric::kIe)) {
    const NoReferenceScores nr = simple_nr_metrics(test);
    if (on(Metric::kAg)) v[slot(Metric::kAg)] = nr.average_gradient;
    if (on(Metric::kEi)) v[slot(Metric::kEi)] = nr.edge_intensity;
    if (on(Metric::kIe)) v[slot(Metric::kIe)] = nr.entropy;
  }
  return v;
}

std::size_t MetricReport::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const MetricRow& r) { return !r.ok(); }));
}

std::vector<Metric> MetricReport::columns() const {
  std::vector<Metric> cols;
  for (Metric m : kAllMetrics) {
    const bool present = std::any_of(rows.begin(), rows.end(), [&](const MetricRow& r) {
      return r.values[slot(m)].has_value();
    });
    if (present) cols.push_back(m);
  }
  return cols;
}

MetricReport make_report(std::vector<MetricRow> rows) {
  MetricReport report;
  report.rows = std::move(rows);
  for (Metric m : kAllMetrics) {
    double sum = 0.0;
    std::size_t n = 0;
    bool infinite = false;
    for (const auto& row : report.rows) {
      const auto& v = row.values[slot(m)];
      if (!v) continue;
      if (std::isinf(*v)) infinite = true;
      sum += *v;
      ++n;
    }
    report.aggregate_counts[slot(m)] = n;
    if (n == 0) continue;
    report.aggregate[slot(m)] =
        infinite ? std::numeric_limits<double>::infinity() : sum / static_cast<double>(n);
  }
  return report;
}

void MetricReport::write_csv(std::ostream& out) const {
  const auto cols = columns();
  out << "test,reference";
  for (Metric m : cols) out << ',' << metric_name(m);
  out << ",error\n";
  for (const auto& row : rows) {
    out << csv_escape(row.test) << ',' << csv_escape(row.reference);
    for (Metric m : cols) {
      out << ',';
      if (const auto& v = row.values[slot(m)]) out << format_metric_value(m, *v);
    }
    out << ',' << csv_escape(row.error) << '\n';
  }
  out << "aggregate,";
  for (Metric m : cols) {
    out << ',';
    if (const auto& v = aggregate[slot(m)]) out << format_metric_value(m, *v);
  }
  out << ",\n";
}

std::string MetricReport::to_json() const {
  const auto cols = columns();
  json doc;
  doc["columns"] = json::array();
  for (Metric m : cols) doc["columns"].push_back(std::string(metric_name(m)));
  doc["rows"] = json::array();
  for (const auto& row : rows) {
    json jr = {{"test", row.test}, {"reference", row.reference}};
    json metrics = json::object();
    for (Metric m : cols) {
      if (const auto& v = row.values[slot(m)]) {
        metrics[std::string(metric_name(m))] = value_to_json(m, *v);
      }
    }
    jr["metrics"] = std::move(metrics);
    if (!row.ok()) jr["error"] = row.error;
    doc["rows"].push_back(std::move(jr));
  }
  json agg = json::object();
  json counts = json::object();
  for (Metric m : cols) {
    if (const auto& v = aggregate[slot(m)]) {
      agg[std::string(metric_name(m))] = value_to_json(m, *v);
    }
    counts[std::string(metric_name(m))] = aggregate_counts[slot(m)];
  }
  doc["aggregate"] = {{"metrics", agg}, {"counts", counts}};
  doc["error_count"] = error_count();
  return doc.dump(2) + "\n";
}

MetricReport evaluate_pairs(const std::vector<PairSpec>& pairs,
                            const EvaluationOptions& options) {
  std::vector<MetricRow> rows;
  rows.reserve(pairs.size());
  for (const auto& pair : pairs) {
    MetricRow row;
    row.test = pair.test.string();
    row.reference = pair.reference ? pair.reference->string() : "";
    try {
      const ImageRGB test = load_image(pair.test);
      if (pair.reference) {
        const ImageRGB ref = load_image(*pair.reference);
        row.values = compute_metrics(test, &ref, options);
      } else {
        row.values = compute_metrics(test, nullptr, options);
      }
    } catch (const Error& e) {
      row.values = {};
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return make_report(std::move(rows));
}

std::vector<PairSpec> load_pairs(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoErrorKind::kMissingFile, path.string(), "");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(IoErrorKind::kCorruptData, path.string(), e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("pairs")) {
      throw IoError(IoErrorKind::kCorruptData, path.string(), "missing \"pairs\"");
    }
    list = &doc["pairs"];
  }
  if (!list->is_array()) {
    throw IoError(IoErrorKind::kCorruptData, path.string(), "\"pairs\" must be an array");
  }
  const fs::path base = path.parent_path();
  const auto resolve = [&](const std::string& p) {
    const fs::path candidate(p);
    return candidate.is_absolute() ? candidate : base / candidate;
  };
  std::vector<PairSpec> pairs;
  for (const auto& item : *list) {
    if (!item.is_object() || !item.contains("test") || !item["test"].is_string()) {
      throw IoError(IoErrorKind::kCorruptData, path.string(),
                    "each pair needs a \"test\" path");
    }
    PairSpec spec;
    spec.test = resolve(item["test"].get<std::string>());
    if (item.contains("reference") && item["reference"].is_string()) {
      spec.reference = resolve(item["reference"].get<std::string>());
    }
    pairs.push_back(std::move(spec));
  }
  return pairs;
}

}  // namespace dustbench
