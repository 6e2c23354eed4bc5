#include "dustbench/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <tuple>

#include "dustbench/random.hpp"

namespace dustbench {

namespace {

double squared_distance(const Lab& x, const Lab& y) {
  const double dl = x.l - y.l;
  const double da = x.a - y.a;
  const double db = x.b - y.b;
  return dl * dl + da * da + db * db;
}

std::size_t distinct_count(const std::vector<Lab>& samples) {
  std::vector<std::tuple<double, double, double>> keys;
  keys.reserve(samples.size());
  for (const auto& s : samples) keys.emplace_back(s.l, s.a, s.b);
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(
      std::unique(keys.begin(), keys.end()) - keys.begin());
}

// k-means++: first center uniform, the rest drawn with probability
// proportional to squared distance from the nearest chosen center.
std::vector<Lab> seed_centers(const std::vector<Lab>& samples, int k, Rng& rng) {
  std::vector<Lab> centers;
  centers.reserve(static_cast<std::size_t>(k));
  centers.push_back(samples[rng.index(samples.size())]);
  std::vector<double> nearest(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    nearest[i] = squared_distance(samples[i], centers[0]);
  }
  while (static_cast<int>(centers.size()) < k) {
    const double total = std::accumulate(nearest.begin(), nearest.end(), 0.0);
    std::size_t pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double running = 0.0;
      pick = samples.size() - 1;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        running += nearest[i];
        if (running > target && nearest[i] > 0.0) {
          pick = i;
          break;
        }
      }
      // Guard against rounding landing on an already-chosen sample.
      while (nearest[pick] == 0.0 && pick > 0) --pick;
    }
    centers.push_back(samples[pick]);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      nearest[i] = std::min(nearest[i], squared_distance(samples[i], centers.back()));
    }
  }
  return centers;
}

// Returns true if any assignment changed.
bool assign(const std::vector<Lab>& samples, const std::vector<Lab>& centers,
            std::vector<int>& assignments, std::vector<double>& distances) {
  bool changed = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    int best = 0;
    double best_d = squared_distance(samples[i], centers[0]);
    for (std::size_t c = 1; c < centers.size(); ++c) {
      const double d = squared_distance(samples[i], centers[c]);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    if (assignments[i] != best) {
      assignments[i] = best;
      changed = true;
    }
    distances[i] = best_d;
  }
  return changed;
}

// Moves a sample into each empty cluster. Returns true if anything moved.
bool repair_empty(const std::vector<Lab>& samples, std::vector<Lab>& centers,
                  std::vector<int>& assignments, std::vector<double>& distances) {
  bool moved = false;
  for (std::size_t guard = 0; guard < centers.size(); ++guard) {
    std::vector<std::size_t> counts(centers.size(), 0);
    for (int a : assignments) ++counts[static_cast<std::size_t>(a)];
    const auto empty = std::find(counts.begin(), counts.end(), 0u);
    if (empty == counts.end()) break;
    const auto c = static_cast<std::size_t>(empty - counts.begin());
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (counts[static_cast<std::size_t>(assignments[i])] > 1 &&
          distances[i] > far_d) {
        far_d = distances[i];
        far = i;
      }
    }
    centers[c] = samples[far];
    assignments[far] = static_cast<int>(c);
    distances[far] = 0.0;
    moved = true;
  }
  return moved;
}

void update(const std::vector<Lab>& samples, const std::vector<int>& assignments,
            std::vector<Lab>& centers, std::vector<std::size_t>& counts) {
  std::vector<Lab> sums(centers.size());
  counts.assign(centers.size(), 0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto c = static_cast<std::size_t>(assignments[i]);
    sums[c].l += samples[i].l;
    sums[c].a += samples[i].a;
    sums[c].b += samples[i].b;
    ++counts[c];
  }
  for (std::size_t c = 0; c < centers.size(); ++c) {
    if (counts[c] == 0) continue;
    const double n = static_cast<double>(counts[c]);
    centers[c] = {sums[c].l / n, sums[c].a / n, sums[c].b / n};
  }
}

double total_loss(const std::vector<Lab>& samples, const std::vector<Lab>& centers,
                  const std::vector<int>& assignments) {
  double loss = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    loss += squared_distance(samples[i],
                             centers[static_cast<std::size_t>(assignments[i])]);
  }
  return loss;
}

}  // namespace

ClusterResult kmeans_lab(const std::vector<Lab>& samples,
                         const KMeansOptions& options) {
  if (samples.empty()) throw InvalidArgument("k-means needs samples");
  if (options.k < 1) throw InvalidArgument("k must be at least 1");
  if (options.max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
  const std::size_t distinct = distinct_count(samples);
  if (static_cast<std::size_t>(options.k) > distinct) {
    throw InvalidArgument("k = " + std::to_string(options.k) + " exceeds the " +
                          std::to_string(distinct) + " distinct samples");
  }

  Rng rng(options.seed);
  ClusterResult r;
  r.k = options.k;
  r.centers = seed_centers(samples, options.k, rng);
  r.assignments.assign(samples.size(), -1);
  std::vector<double> distances(samples.size());

  for (int it = 0; it < options.max_iter; ++it) {
    const bool changed = assign(samples, r.centers, r.assignments, distances);
    const bool repaired = repair_empty(samples, r.centers, r.assignments, distances);
    if (!changed && !repaired && it > 0) {
      r.converged = true;
      break;
    }
    update(samples, r.assignments, r.centers, r.counts);
    const double loss = total_loss(samples, r.centers, r.assignments);
    ++r.iterations;
    const double previous = r.loss_history.empty() ? 0.0 : r.loss_history.back();
    r.loss_history.push_back(loss);
    if (it > 0 && std::abs(previous - loss) <= options.tol * previous) {
      // Loss has settled; one more assignment pass tells whether this is the
      // exact fixed point.
      r.converged = !assign(samples, r.centers, r.assignments, distances);
      if (!r.converged) {
        update(samples, r.assignments, r.centers, r.counts);
        r.loss_history.push_back(total_loss(samples, r.centers, r.assignments));
        ++r.iterations;
      }
      break;
    }
  }
  r.counts.assign(r.centers.size(), 0);
  for (int a : r.assignments) ++r.counts[static_cast<std::size_t>(a)];
  r.loss = total_loss(samples, r.centers, r.assignments);
  r.collinearity_residual = r.k >= 2 ? chroma_line_residual(r.centers) : 0.0;
  return r;
}

double chroma_line_residual(const std::vector<Lab>& points) {
  if (points.size() < 2) {
    throw InvalidArgument("collinearity needs at least two centers");
  }
  const double n = static_cast<double>(points.size());
  double ma = 0.0, mb = 0.0;
  for (const auto& p : points) {
    ma += p.a;
    mb += p.b;
  }
  ma /= n;
  mb /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (const auto& p : points) {
    saa += (p.a - ma) * (p.a - ma);
    sbb += (p.b - mb) * (p.b - mb);
    sab += (p.a - ma) * (p.b - mb);
  }
  saa /= n;
  sbb /= n;
  sab /= n;
  // Smallest eigenvalue of the 2x2 scatter matrix is the mean squared
  // perpendicular distance to the best-fit line through the centroid.
  const double half_trace = 0.5 * (saa + sbb);
  const double disc = std::sqrt(0.25 * (saa - sbb) * (saa - sbb) + sab * sab);
  return std::sqrt(std::max(0.0, half_trace - disc));
}

double cluster_linearity(const ClusterResult& result) {
  if (result.k < 2) throw InvalidArgument("collinearity needs k >= 2");
  return chroma_line_residual(result.centers);
}

std::vector<Lab> sample_pixels(const ImageLAB& image, std::size_t cap,
                               std::uint64_t seed) {
  const std::size_t n = image.pixel_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n > cap) {
    Rng rng(seed);
    // Partial Fisher-Yates: the first `cap` slots form the sample.
    for (std::size_t i = 0; i < cap; ++i) {
      std::swap(order[i], order[i + rng.index(n - i)]);
    }
    order.resize(cap);
  }
  std::vector<Lab> out;
  out.reserve(order.size());
  const auto data = image.data();
  for (std::size_t p : order) {
    out.push_back({data[3 * p], data[3 * p + 1], data[3 * p + 2]});
  }
  return out;
}

void write_cluster_csv(const ClusterResult& result, std::ostream& out) {
  out << "cluster_id,L,a,b,count\n";
  out << std::setprecision(10);
  for (std::size_t c = 0; c < result.centers.size(); ++c) {
    const Lab& m = result.centers[c];
    out << c << ',' << m.l << ',' << m.a << ',' << m.b << ','
        << (c < result.counts.size() ? result.counts[c] : 0) << '\n';
  }
}

}  // namespace dustbench
