#include "msdecomp/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace msd {

Matrix pairwise_distances(const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = euclidean_distance(x.row(i), x.row(j));
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return d;
}

double estimate_bandwidth(const Matrix& x, double quantile) {
  if (quantile <= 0.0 || quantile > 1.0)
    throw std::invalid_argument("estimate_bandwidth: quantile must be in (0,1]");
  const std::size_t n = x.rows();
  if (n < 2)
    throw std::invalid_argument("estimate_bandwidth: need at least 2 points");

  const Matrix d = pairwise_distances(x);
  const std::size_t k = static_cast<std::size_t>(
      std::ceil(quantile * static_cast<double>(n - 1)));

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row;
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row.push_back(d(i, j));
    std::nth_element(row.begin(), row.begin() + (k - 1), row.end());
    sum += row[k - 1];
  }
  const double mean = sum / static_cast<double>(n);
  if (mean > 0.0) return mean;

  // duplicate-heavy data: fall back to the smallest nonzero pairwise distance
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) > 0.0) smallest = std::min(smallest, d(i, j));
  if (!std::isfinite(smallest))
    throw std::invalid_argument("estimate_bandwidth: all points identical");
  return smallest;
}

MeanShiftResult mean_shift(const Matrix& x, const MeanShiftParams& params) {
  const std::size_t n = x.rows();
  if (n == 0) throw std::invalid_argument("mean_shift: empty input");
  if (params.bandwidth <= 0.0)
    throw std::invalid_argument("mean_shift: bandwidth must be > 0");
  if (params.shift_tol <= 0.0 || params.shift_tol >= 1.0)
    throw std::invalid_argument("mean_shift: shift_tol must be in (0,1)");

  const std::size_t dim = x.cols();
  const double bandwidth = params.bandwidth;
  const double stop_shift = params.shift_tol * bandwidth;

  // every point seeds an iteration
  std::vector<std::vector<double>> converged(n);
  std::vector<std::size_t> support(n, 0);  // in-bandwidth population at rest
  for (std::size_t seed = 0; seed < n; ++seed) {
    std::vector<double> pos(x.row(seed).begin(), x.row(seed).end());
    std::vector<double> next(dim);
    for (int iter = 0; iter < params.max_iters; ++iter) {
      std::fill(next.begin(), next.end(), 0.0);
      std::size_t within = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (euclidean_distance({pos.data(), dim}, x.row(p)) <= bandwidth) {
          ++within;
          for (std::size_t c = 0; c < dim; ++c) next[c] += x(p, c);
        }
      }
      // the seed itself is always within bandwidth, so within >= 1
      for (std::size_t c = 0; c < dim; ++c) next[c] /= static_cast<double>(within);
      const double shift = euclidean_distance({pos.data(), dim}, {next.data(), dim});
      pos = next;
      support[seed] = within;
      if (shift < stop_shift) break;
    }
    converged[seed] = pos;
  }

  // merge converged positions within bandwidth/2; higher support wins the
  // mode position, ties go to the lower point index
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (support[a] != support[b]) return support[a] > support[b];
    return a < b;
  });

  MeanShiftResult result;
  result.assignment.assign(n, 0);
  const double merge_radius = bandwidth / 2.0;
  for (std::size_t idx : order) {
    const std::vector<double>& pos = converged[idx];
    std::size_t best_mode = result.modes.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < result.modes.size(); ++m) {
      const double dist = euclidean_distance(
          {pos.data(), dim}, {result.modes[m].data(), dim});
      if (dist <= merge_radius && dist < best_dist) {
        best_dist = dist;
        best_mode = m;
      }
    }
    if (best_mode == result.modes.size()) result.modes.push_back(pos);
    result.assignment[idx] = best_mode;
  }
  return result;
}

namespace {

void validate_distance_matrix(const Matrix& d) {
  if (d.rows() != d.cols())
    throw std::invalid_argument("distance matrix must be square");
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i) != 0.0)
      throw std::invalid_argument("distance matrix must have a zero diagonal");
    for (std::size_t j = i + 1; j < d.cols(); ++j) {
      if (d(i, j) < 0.0)
        throw std::invalid_argument("distance matrix entries must be >= 0");
      if (d(i, j) != d(j, i))
        throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
}

} // namespace

ClusterLabels dbscan_dist(const Matrix& distances, const DbscanParams& params) {
  validate_distance_matrix(distances);
  if (params.eps < 0.0) throw std::invalid_argument("dbscan: eps must be >= 0");
  if (params.min_pts < 1) throw std::invalid_argument("dbscan: min_pts must be >= 1");

  const std::size_t n = distances.rows();
  std::vector<std::vector<std::size_t>> neighbors(n);
  std::vector<bool> core(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (distances(i, j) <= params.eps) neighbors[i].push_back(j);  // includes i
    }
    core[i] = neighbors[i].size() >= static_cast<std::size_t>(params.min_pts);
  }

  ClusterLabels out;
  out.labels.assign(n, -1);
  std::vector<bool> claimed(n, false);
  int next_label = 0;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (claimed[seed] || !core[seed]) continue;
    const int label = next_label++;
    std::deque<std::size_t> queue{seed};
    claimed[seed] = true;
    out.labels[seed] = label;
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      if (!core[p]) continue;  // border points do not expand
      for (std::size_t q : neighbors[p]) {
        if (claimed[q]) continue;
        claimed[q] = true;
        out.labels[q] = label;
        queue.push_back(q);
      }
    }
  }
  out.k = next_label;
  return out;
}

std::vector<double> k_distance_curve(const Matrix& distances, int k) {
  validate_distance_matrix(distances);
  const std::size_t n = distances.rows();
  if (k < 1 || static_cast<std::size_t>(k) >= n)
    throw std::invalid_argument("k_distance_curve: need n > k >= 1");

  std::vector<double> curve;
  curve.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row;
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row.push_back(distances(i, j));
    std::nth_element(row.begin(), row.begin() + (k - 1), row.end());
    curve.push_back(row[k - 1]);
  }
  std::sort(curve.begin(), curve.end(), std::greater<>());
  return curve;
}

EpsSuggestion suggest_eps(const Matrix& distances, int k) {
  const std::vector<double> curve = k_distance_curve(distances, k);
  const std::size_t n = curve.size();

  EpsSuggestion best;
  double best_curvature = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double curvature = curve[i + 1] - 2.0 * curve[i] + curve[i - 1];
    // strictly-greater keeps the first (larger-eps) index on ties
    if (curvature > 0.0 && curvature > best_curvature) {
      best_curvature = curvature;
      best.value = curve[i];
      best.elbow_found = true;
    }
  }
  if (best.elbow_found) return best;

  // flat or degenerate curve: fall back to the median
  best.value = n % 2 == 1 ? curve[n / 2]
                          : 0.5 * (curve[n / 2 - 1] + curve[n / 2]);
  return best;
}

} // namespace msd
