#include "msdecomp/rng.hpp"

#include <algorithm>

namespace msd {

std::vector<std::size_t> weighted_sample_without_replacement(
    const std::vector<double>& weights, std::size_t count, Rng& rng) {
  if (count > weights.size())
    throw std::invalid_argument("weighted sample: count exceeds candidates");
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("weighted sample: negative weight");
  }

  std::vector<double> remaining = weights;
  std::vector<bool> taken(weights.size(), false);
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  for (std::size_t draw = 0; draw < count; ++draw) {
    double total = 0.0;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!taken[i]) total += remaining[i];
    if (total <= 0.0) {
      // all remaining weights zero: take the first untaken candidate
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (!taken[i]) {
          taken[i] = true;
          chosen.push_back(i);
          break;
        }
      }
      continue;
    }
    const double u = rng.unit() * total;
    double acc = 0.0;
    std::size_t pick = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (taken[i]) continue;
      acc += remaining[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    if (pick == remaining.size()) {
      // numerical edge: u landed on the accumulated total
      for (std::size_t i = remaining.size(); i-- > 0;) {
        if (!taken[i]) {
          pick = i;
          break;
        }
      }
    }
    taken[pick] = true;
    chosen.push_back(pick);
  }
  return chosen;
}

} // namespace msd
