#include "msdecomp/bmsc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "msdecomp/rng.hpp"

namespace msd {

std::size_t Grid::total_classes() const {
  std::size_t n = 0;
  for (const auto& cell : cells) n += cell.size();
  return n;
}

std::vector<std::size_t> Grid::linear5_neighbors(std::size_t cell) const {
  const std::size_t col = cell % width;
  const std::size_t row = cell / width;
  const auto at = [&](std::size_t c, std::size_t r) { return r * width + c; };
  std::vector<std::size_t> raw = {
      cell,
      at(col, (row + height - 1) % height),  // north
      at(col, (row + 1) % height),           // south
      at((col + width - 1) % width, row),    // west
      at((col + 1) % width, row),            // east
  };
  std::vector<std::size_t> out;
  for (std::size_t c : raw)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

void BmscParams::validate() const {
  if (width == 0 || height == 0)
    throw std::invalid_argument("grid must have at least one cell");
  SimilarityWeights{alpha, beta}.validate();
  if (min_pts < 1) throw std::invalid_argument("min_pts must be >= 1");
  if (!std::isnan(eps) && eps < 0.0)
    throw std::invalid_argument("eps must be >= 0");
  if (quantile <= 0.0 || quantile > 1.0)
    throw std::invalid_argument("quantile must be in (0,1]");
  if (bandwidth_scale <= 0.0)
    throw std::invalid_argument("bandwidth_scale must be > 0");
  if (floor_weight < 0.0)
    throw std::invalid_argument("floor_weight must be >= 0");
  if (stability_target < 1)
    throw std::invalid_argument("stability_target must be >= 1");
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
}

Grid init_grid(const std::vector<std::size_t>& class_ids, std::size_t width,
               std::size_t height, std::uint64_t seed) {
  if (width == 0 || height == 0)
    throw std::invalid_argument("init_grid: zero cells");
  Grid grid;
  grid.width = width;
  grid.height = height;
  grid.cells.assign(width * height, {});

  std::vector<std::size_t> shuffled = class_ids;
  Rng rng(derive_seed(seed, 0x67726964));  // independent stream for the deal
  rng.shuffle(shuffled);
  for (std::size_t pos = 0; pos < shuffled.size(); ++pos)
    grid.cells[pos % grid.cell_count()].push_back(shuffled[pos]);
  return grid;
}

std::vector<IMode> cell_modes(const std::vector<std::size_t>& cell,
                              const FeatureMatrix& features,
                              const std::vector<TermBag>& normalized_bags,
                              double quantile, double bandwidth_scale) {
  if (cell.empty()) throw std::invalid_argument("cell_modes: empty cell");

  auto make_imode = [&](const std::vector<std::size_t>& members) {
    IMode imode;
    imode.members = members;
    std::sort(imode.members.begin(), imode.members.end());
    imode.structural.assign(features.block_split, 0.0);
    for (std::size_t m : imode.members) {
      for (std::size_t c = 0; c < features.block_split; ++c)
        imode.structural[c] += features.rows(m, c);
      imode.term_freq.merge(normalized_bags[m]);
    }
    return imode;
  };

  std::vector<std::size_t> assignment;
  std::size_t mode_count = 0;
  if (cell.size() == 1) {
    assignment = {0};
    mode_count = 1;
  } else {
    Matrix rows(cell.size(), features.rows.cols());
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const auto src = features.rows.row(cell[i]);
      std::copy(src.begin(), src.end(), rows.row(i).begin());
    }
    try {
      MeanShiftParams ms;
      ms.bandwidth = estimate_bandwidth(rows, quantile) * bandwidth_scale;
      const MeanShiftResult result = mean_shift(rows, ms);
      assignment = result.assignment;
      mode_count = result.modes.size();
    } catch (const std::invalid_argument&) {
      // identical rows: the cell collapses to a single mode
      assignment.assign(cell.size(), 0);
      mode_count = 1;
    }
  }

  std::vector<std::vector<std::size_t>> groups(mode_count);
  for (std::size_t i = 0; i < cell.size(); ++i)
    groups[assignment[i]].push_back(cell[i]);

  std::vector<IMode> imodes;
  imodes.reserve(mode_count);
  for (const auto& group : groups) {
    if (!group.empty()) imodes.push_back(make_imode(group));
  }
  // stable order inside the cell: by smallest member index
  std::sort(imodes.begin(), imodes.end(), [](const IMode& a, const IMode& b) {
    return a.members.front() < b.members.front();
  });
  return imodes;
}

double confidence(const TermBag& class_bag, const IMode& imode,
                  const Vocabulary& class_vocab) {
  if (class_vocab.size() == 0 || class_bag.empty() || imode.term_freq.empty())
    return 0.0;
  const std::vector<double> class_vec = tfidf_vector(class_bag, class_vocab);
  const std::vector<double> imode_vec = tfidf_vector(imode.term_freq, class_vocab);
  return std::clamp(cosine_similarity(class_vec, imode_vec), 0.0, 1.0);
}

Grid resample(const Grid& grid, const std::vector<std::vector<double>>& confidences,
              double floor_weight, std::uint64_t seed) {
  if (confidences.size() != grid.cell_count())
    throw std::invalid_argument("resample: confidences shape mismatch");
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    if (confidences[c].size() != grid.cells[c].size())
      throw std::invalid_argument("resample: confidences shape mismatch");
  }

  Grid next = grid;
  for (std::size_t cell = 0; cell < grid.cell_count(); ++cell) {
    const std::size_t target = grid.cells[cell].size();
    if (target == 0) continue;

    // pool own + neighbor classes; a class seen in several cells keeps its
    // highest confidence
    std::map<std::size_t, double> pool;
    for (std::size_t nb : grid.linear5_neighbors(cell)) {
      for (std::size_t i = 0; i < grid.cells[nb].size(); ++i) {
        const std::size_t cls = grid.cells[nb][i];
        const double conf = confidences[nb][i];
        auto [it, inserted] = pool.emplace(cls, conf);
        if (!inserted) it->second = std::max(it->second, conf);
      }
    }

    std::vector<std::size_t> candidates;
    std::vector<double> weights;
    candidates.reserve(pool.size());
    for (const auto& [cls, conf] : pool) {
      candidates.push_back(cls);
      weights.push_back(conf + floor_weight);
    }

    Rng rng(derive_seed(seed, 0x726573, cell));
    std::vector<std::size_t> chosen;
    if (pool.size() <= target) {
      chosen.resize(candidates.size());
      for (std::size_t i = 0; i < candidates.size(); ++i) chosen[i] = i;
    } else {
      chosen = weighted_sample_without_replacement(weights, target, rng);
    }
    std::vector<std::size_t>& out = next.cells[cell];
    out.clear();
    for (std::size_t idx : chosen) out.push_back(candidates[idx]);
  }
  return next;
}

Matrix imode_distance_matrix(const std::vector<IMode>& imodes,
                             const MonolithGraph& graph,
                             const SimilarityWeights& weights,
                             std::size_t* clamped) {
  weights.validate();
  if (imodes.empty())
    throw std::invalid_argument("imode_distance_matrix: no iModes");

  const Vocabulary vocab = imode_corpus_vocabulary(imodes);
  std::vector<std::vector<double>> vectors(imodes.size());
  if (vocab.size() > 0) {
    for (std::size_t i = 0; i < imodes.size(); ++i)
      vectors[i] = tfidf_vector(imodes[i].term_freq, vocab);
  }

  Matrix d(imodes.size(), imodes.size());
  for (std::size_t i = 0; i < imodes.size(); ++i) {
    for (std::size_t j = i + 1; j < imodes.size(); ++j) {
      const double structural = sim_str(imodes[i], imodes[j], graph, clamped);
      const double semantic =
          vocab.size() > 0
              ? std::clamp(cosine_similarity(vectors[i], vectors[j]), 0.0, 1.0)
              : 0.0;
      const double ms = weights.alpha * structural + weights.beta * semantic;
      d(i, j) = 1.0 - ms;
      d(j, i) = d(i, j);
    }
  }
  return d;
}

namespace {

std::string microservice_name(std::size_t index) {
  std::ostringstream name;
  name << "ms_";
  if (index < 10) name << '0';
  name << index;
  return name.str();
}

} // namespace

BmscResult decompose(const MonolithGraph& graph, const FeatureMatrix& features,
                     const BmscParams& params, const StopList& stop_list) {
  params.validate();
  const std::size_t n = graph.size();
  if (features.rows.rows() != n)
    throw std::invalid_argument("decompose: feature rows do not match graph");

  const std::vector<TermBag> bags = normalized_class_bags(graph, stop_list);
  bool any_terms = false;
  for (const auto& bag : bags) any_terms = any_terms || !bag.empty();
  const Vocabulary class_vocab =
      any_terms ? build_vocabulary(bags) : Vocabulary{{}, {}, {}, n};

  std::vector<std::size_t> all_classes(n);
  for (std::size_t i = 0; i < n; ++i) all_classes[i] = i;
  Grid grid = init_grid(all_classes, params.width, params.height, params.seed);

  const SimilarityWeights weights{params.alpha, params.beta};
  BmscResult result;
  BmscRunLog& log = result.log;
  double eps = params.eps;

  std::vector<IMode> imodes;
  ClusterLabels labels;
  int last_count = -1;
  int consecutive = 0;

  for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
    // per-cell Mean Shift
    imodes.clear();
    std::vector<std::vector<std::size_t>> imode_of_cell_member(grid.cell_count());
    for (std::size_t cell = 0; cell < grid.cell_count(); ++cell) {
      if (grid.cells[cell].empty()) continue;
      const std::vector<IMode> cell_imodes = cell_modes(
          grid.cells[cell], features, bags, params.quantile, params.bandwidth_scale);
      // map each member of the cell to its iMode (global index)
      std::map<std::size_t, std::size_t> member_to_imode;
      for (std::size_t k = 0; k < cell_imodes.size(); ++k) {
        for (std::size_t m : cell_imodes[k].members)
          member_to_imode[m] = imodes.size() + k;
      }
      imode_of_cell_member[cell].reserve(grid.cells[cell].size());
      for (std::size_t m : grid.cells[cell])
        imode_of_cell_member[cell].push_back(member_to_imode.at(m));
      imodes.insert(imodes.end(), cell_imodes.begin(), cell_imodes.end());
    }

    // confidence of every class in every cell
    std::vector<std::vector<double>> confidences(grid.cell_count());
    for (std::size_t cell = 0; cell < grid.cell_count(); ++cell) {
      confidences[cell].reserve(grid.cells[cell].size());
      for (std::size_t i = 0; i < grid.cells[cell].size(); ++i) {
        const std::size_t cls = grid.cells[cell][i];
        const IMode& imode = imodes[imode_of_cell_member[cell][i]];
        confidences[cell].push_back(confidence(bags[cls], imode, class_vocab));
      }
    }

    grid = resample(grid, confidences, params.floor_weight,
                    derive_seed(params.seed, 0x626d7363, iteration));

    const Matrix distances =
        imode_distance_matrix(imodes, graph, weights, &log.sim_clamped);

    if (std::isnan(eps)) {
      if (distances.rows() > static_cast<std::size_t>(params.min_pts)) {
        eps = suggest_eps(distances, params.min_pts).value;
      } else {
        eps = 0.5;  // too few iModes for a k-distance curve
      }
      log.eps_was_estimated = true;
    }

    labels = dbscan_dist(distances, DbscanParams{eps, params.min_pts});

    consecutive = labels.k == last_count ? consecutive + 1 : 1;
    last_count = labels.k;

    int noise = 0;
    for (int l : labels.labels) noise += l == -1 ? 1 : 0;
    log.iterations.push_back(
        {iteration, imodes.size(), labels.k, noise, consecutive});

    if (consecutive >= params.stability_target) {
      log.converged = true;
      break;
    }
  }
  log.eps_used = eps;

  // noise iModes become singleton clusters so that no class can be dropped
  std::vector<int> imode_cluster = labels.labels;
  int cluster_count = labels.k;
  for (auto& label : imode_cluster) {
    if (label == -1) label = cluster_count++;
  }

  // final assignment: every class goes to the iMode it is most similar to
  const Vocabulary imode_vocab = imode_corpus_vocabulary(imodes);
  std::vector<std::vector<double>> imode_vectors(imodes.size());
  if (imode_vocab.size() > 0) {
    for (std::size_t k = 0; k < imodes.size(); ++k)
      imode_vectors[k] = tfidf_vector(imodes[k].term_freq, imode_vocab);
  }

  std::vector<std::set<std::string>> cluster_classes(cluster_count);
  for (std::size_t cls = 0; cls < n; ++cls) {
    IMode singleton;
    singleton.members = {cls};
    singleton.structural.assign(features.block_split, 0.0);
    for (std::size_t c = 0; c < features.block_split; ++c)
      singleton.structural[c] = features.rows(cls, c);
    singleton.term_freq = bags[cls];

    std::vector<double> class_vector;
    if (imode_vocab.size() > 0)
      class_vector = tfidf_vector(singleton.term_freq, imode_vocab);

    std::size_t best = 0;
    double best_ms = -1.0;
    for (std::size_t k = 0; k < imodes.size(); ++k) {
      const double structural = sim_str(singleton, imodes[k], graph, &log.sim_clamped);
      const double semantic =
          imode_vocab.size() > 0
              ? std::clamp(cosine_similarity(class_vector, imode_vectors[k]), 0.0, 1.0)
              : 0.0;
      const double ms = params.alpha * structural + params.beta * semantic;
      if (ms > best_ms) {  // ties keep the smaller iMode index
        best_ms = ms;
        best = k;
      }
    }
    cluster_classes[imode_cluster[best]].insert(graph.class_at(cls).id);
  }

  std::size_t name_index = 0;
  for (const auto& classes : cluster_classes) {
    if (classes.empty()) continue;
    result.decomposition.microservices.push_back(
        {microservice_name(name_index++), classes});
  }
  return result;
}

} // namespace msd
