#ifndef MSDECOMP_CLUSTER_HPP
#define MSDECOMP_CLUSTER_HPP

#include <cstdint>
#include <vector>

#include "msdecomp/matrix.hpp"

namespace msd {

struct MeanShiftParams {
  double bandwidth = 0.0;     // flat-kernel radius, > 0
  int max_iters = 300;
  double shift_tol = 1e-3;    // fraction of bandwidth, in (0,1)
};

struct MeanShiftResult {
  std::vector<std::vector<double>> modes;
  std::vector<std::size_t> assignment;  // point -> mode index
};

struct DbscanParams {
  double eps = 0.0;   // neighborhood radius, >= 0
  int min_pts = 1;    // minimum neighborhood population, >= 1
};

struct ClusterLabels {
  std::vector<int> labels;  // per point; -1 = noise
  int k = 0;                // number of non-noise clusters (labels 0..k-1)
};

// Mean over points of the Euclidean distance to the
// ceil(quantile*(n-1))-th nearest neighbor. Zero result (duplicate-heavy
// data) falls back to the smallest nonzero pairwise distance; throws when
// fewer than 2 points or all points identical.
double estimate_bandwidth(const Matrix& x, double quantile);

// Flat-kernel Mean Shift: every point seeds an iteration toward the mean of
// the in-bandwidth region; converged positions within bandwidth/2 merge into
// one mode (higher-support position wins).
MeanShiftResult mean_shift(const Matrix& x, const MeanShiftParams& params);

// DBSCAN over a precomputed symmetric distance matrix. Core point: at least
// min_pts points (itself included) within eps. Border points join the first
// cluster that reaches them in deterministic seed order; unreachable
// non-core points are labeled -1.
ClusterLabels dbscan_dist(const Matrix& distances, const DbscanParams& params);

struct EpsSuggestion {
  double value = 0.0;
  bool elbow_found = false;  // false: flat curve, value is the median
};

// k-distance elbow: sort every point's k-th-nearest-neighbor distance in
// descending order and return the value at the largest positive second
// difference. Ties break toward the larger distance.
EpsSuggestion suggest_eps(const Matrix& distances, int k);

// The sorted descending k-distance curve itself (for CSV inspection).
std::vector<double> k_distance_curve(const Matrix& distances, int k);

} // namespace msd

#endif
