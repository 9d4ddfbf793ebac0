#ifndef MSDECOMP_BMSC_HPP
#define MSDECOMP_BMSC_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "msdecomp/cluster.hpp"
#include "msdecomp/decomposition.hpp"
#include "msdecomp/encode.hpp"
#include "msdecomp/graph.hpp"
#include "msdecomp/imode.hpp"
#include "msdecomp/simfuncs.hpp"

namespace msd {

// Grid of cells holding class indices. Cell (col, row) lives at index
// row * width + col; the linear-5 neighborhood wraps around toroidally.
struct Grid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::vector<std::size_t>> cells;

  std::size_t cell_count() const { return cells.size(); }
  std::size_t total_classes() const;
  // self, north, south, west, east — duplicates removed (1xN grids).
  std::vector<std::size_t> linear5_neighbors(std::size_t cell) const;
};

// eps sentinel: resolve via the k-distance elbow on the first iteration's
// iMode distance matrix.
inline constexpr double kAutoEps = std::numeric_limits<double>::quiet_NaN();

struct BmscParams {
  std::size_t width = 3;
  std::size_t height = 3;
  double eps = kAutoEps;
  int min_pts = 1;
  double alpha = 0.5;
  double beta = 0.5;
  double quantile = 0.3;          // per-cell bandwidth estimation quantile
  double bandwidth_scale = 1.0;   // multiplier on the per-cell estimate
  double floor_weight = 0.01;     // added to confidences during resampling
  int stability_target = 3;       // consecutive equal cluster counts
  int max_iterations = 50;
  std::uint64_t seed = 0;

  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  std::size_t imode_count = 0;
  int cluster_count = 0;   // DBSCAN non-noise clusters
  int noise_imodes = 0;
  int stability_counter = 0;
};

struct BmscRunLog {
  std::vector<IterationRecord> iterations;
  bool converged = false;
  double eps_used = 0.0;
  bool eps_was_estimated = false;
  std::size_t sim_clamped = 0;  // structural similarities clamped to 1
};

struct BmscResult {
  Decomposition decomposition;
  BmscRunLog log;
};

// Seeded shuffle of the class ids dealt round-robin over width x height
// cells; cell sizes differ by at most one.
Grid init_grid(const std::vector<std::size_t>& class_ids, std::size_t width,
               std::size_t height, std::uint64_t seed);

// Mean Shift inside one cell: bandwidth estimated from the cell's feature
// rows (scaled by bandwidth_scale), one IMode per surviving mode. Degenerate
// cells (single class, identical rows) collapse to one IMode.
std::vector<IMode> cell_modes(const std::vector<std::size_t>& cell,
                              const FeatureMatrix& features,
                              const std::vector<TermBag>& normalized_bags,
                              double quantile, double bandwidth_scale = 1.0);

// Semantic confidence of a class in its iMode: cosine between the class's
// TF-IDF vector and the iMode's aggregated term-frequency vector, both
// weighted by the class-corpus IDF. Empty vectors give 0.
double confidence(const TermBag& class_bag, const IMode& imode,
                  const Vocabulary& class_vocab);

// One resampling round: every cell draws its own size from the pooled
// classes of itself and its linear-5 neighbors, without replacement,
// probability proportional to confidence + floor_weight. All cells update
// simultaneously from the old grid.
Grid resample(const Grid& grid, const std::vector<std::vector<double>>& confidences,
              double floor_weight, std::uint64_t seed);

// D(i,j) = 1 - MS(i,j) over the current iMode corpus.
Matrix imode_distance_matrix(const std::vector<IMode>& imodes,
                             const MonolithGraph& graph,
                             const SimilarityWeights& weights,
                             std::size_t* clamped = nullptr);

// Full adapted-BMSC pipeline: grid, per-cell Mean Shift, confidence-weighted
// neighborhood resampling, DBSCAN over iMode similarity, convergence on a
// stable cluster count, final per-class assignment to the best iMode.
BmscResult decompose(const MonolithGraph& graph, const FeatureMatrix& features,
                     const BmscParams& params,
                     const StopList& stop_list = default_stop_list());

} // namespace msd

#endif
