#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "dustbench/color.hpp"
#include "dustbench/image.hpp"

namespace dustbench {

struct KMeansOptions {
  int k = 15;
  std::uint64_t seed = 0;
  int max_iter = 300;
  // Stop once |L_prev - L| <= tol * L_prev. Iteration also stops when the
  // assignment no longer changes, which is the exact fixed point.
  double tol = 1e-12;
};

struct ClusterResult {
  int k = 0;
  std::vector<Lab> centers;
  std::vector<int> assignments;
  std::vector<std::size_t> counts;
  double loss = 0.0;                 // sum of squared distances to centers
  std::vector<double> loss_history;  // loss after each update step
  int iterations = 0;
  bool converged = false;  // assignment reached a fixed point
  double collinearity_residual = 0.0;
};

// Lloyd's algorithm with k-means++ seeding. Ties in the nearest-center search
// go to the lowest center index; a center left without samples is moved to
// the sample farthest from its own center. Deterministic for a fixed seed.
//
// Throws InvalidArgument for empty input, k < 1, or k larger than the number
// of distinct samples.
ClusterResult kmeans_lab(const std::vector<Lab>& samples,
                         const KMeansOptions& options = {});

// RMS perpendicular distance of the centers from their total-least-squares
// line in the (a, b) chroma plane. Throws InvalidArgument if k < 2.
double cluster_linearity(const ClusterResult& result);
double chroma_line_residual(const std::vector<Lab>& points);

// Up to `cap` pixels of a LAB image drawn uniformly without replacement; all
// pixels, in order, when the image is no larger than the cap.
std::vector<Lab> sample_pixels(const ImageLAB& image, std::size_t cap,
                               std::uint64_t seed);

// CSV with header "cluster_id,L,a,b,count".
void write_cluster_csv(const ClusterResult& result, std::ostream& out);

}  // namespace dustbench
