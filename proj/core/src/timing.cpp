#include "dustbench/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

#include "dustbench/scatter.hpp"
#include "dustbench/scenes.hpp"
#include "json.hpp"

namespace dustbench {

namespace {

double average(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

TimingRow time_operation(const std::string& op, int size, const TimingOptions& o,
                         const std::function<void()>& body) {
  using Clock = std::chrono::steady_clock;
  TimingRow row{op, size, o.repetitions, o.warmup, {}, 0.0};
  for (int i = 0; i < o.warmup; ++i) body();
  row.samples.reserve(static_cast<std::size_t>(o.repetitions));
  for (int i = 0; i < o.repetitions; ++i) {
    const auto start = Clock::now();
    body();
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    // steady_clock ticks are nanoseconds; a zero reading is clamped to one tick.
    row.samples.push_back(std::max(elapsed.count(), 1e-9));
  }
  row.mean = average(row.samples);
  return row;
}

volatile double g_sink = 0.0;

}  // namespace

double TimingReport::max_mean_discrepancy() const {
  double worst = 0.0;
  for (const TimingRow& r : rows) {
    worst = std::max(worst, std::abs(r.mean - average(r.samples)));
  }
  return worst;
}

void TimingReport::write_csv(std::ostream& out) const {
  out << "operation,size,repetitions,warmup,mean_seconds,samples\n";
  char buf[64];
  for (const TimingRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.9g", r.mean);
    out << r.operation << ',' << r.size << 'x' << r.size << ',' << r.repetitions
        << ',' << r.warmup << ',' << buf << ',';
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.9g", r.samples[i]);
      out << (i ? ";" : "") << buf;
    }
    out << '\n';
  }
}

std::string TimingReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const TimingRow& r : rows) {
    rows_json.push_back({{"operation", r.operation},
                         {"size", r.size},
                         {"repetitions", r.repetitions},
                         {"warmup", r.warmup},
                         {"samples", r.samples},
                         {"mean", r.mean}});
  }
  return nlohmann::json{{"rows", rows_json}}.dump(2);
}

TimingReport run_timing(const TimingOptions& options) {
  if (options.repetitions < 3) {
    throw InvalidArgument("timing needs repetitions >= 3");
  }
  if (options.warmup < 0) throw InvalidArgument("warmup must be >= 0");
  if (options.sizes.empty()) throw InvalidArgument("no sizes given");
  for (int s : options.sizes) {
    if (s < 32) throw InvalidArgument("timing sizes must be >= 32");
  }

  const ScatterParams params(parse_hex("#C89463"), 0.5);
  TimingReport report;
  for (const std::string& op : timed_operations()) {
    for (int size : options.sizes) {
      const Scene scene = make_gradient_scene(size, size, options.seed);
      if (op == "synthesize") {
        report.rows.push_back(time_operation(op, size, options, [&] {
          g_sink = synthesize(scene.clear, scene.depth, params).clip_fraction;
        }));
      } else {
        const ImageRGB degraded = synthesize(scene.clear, scene.depth, params).image;
        report.rows.push_back(time_operation(op, size, options, [&] {
          const MetricValues v = compute_metrics(degraded, &scene.clear, options.metrics);
          g_sink = v[0].value_or(0.0);
        }));
      }
    }
  }
  return report;
}

}  // namespace dustbench
