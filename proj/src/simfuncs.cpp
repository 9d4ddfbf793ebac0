#include "msdecomp/simfuncs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msd {

void SimilarityWeights::validate() const {
  if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0 ||
      std::abs(alpha + beta - 1.0) > 1e-9)
    throw std::invalid_argument(
        "similarity weights must satisfy alpha, beta in [0,1] and alpha + beta = 1");
}

CallRollup rollup_calls(const IMode& imode_i, const IMode& imode_j,
                        const MonolithGraph& graph) {
  std::vector<char> in_i(graph.size(), 0);
  std::vector<char> in_j(graph.size(), 0);
  for (std::size_t m : imode_i.members) in_i[m] = 1;
  for (std::size_t m : imode_j.members) in_j[m] = 1;

  CallRollup rollup;
  for (const auto& e : graph.edges()) {
    const bool crosses = (in_i[e.caller] && in_j[e.callee]) ||
                         (in_j[e.caller] && in_i[e.callee]);
    if (crosses) rollup.call_ij += e.frequency;
    if (in_i[e.callee]) rollup.call_in_i += e.frequency;
    if (in_j[e.callee]) rollup.call_in_j += e.frequency;
  }
  return rollup;
}

double sim_str_from_rollup(const CallRollup& rollup, std::size_t* clamped) {
  const double call_ij = static_cast<double>(rollup.call_ij);
  const double in_i = static_cast<double>(rollup.call_in_i);
  const double in_j = static_cast<double>(rollup.call_in_j);

  double value = 0.0;
  if (in_i != 0.0 && in_j != 0.0) {
    value = 0.5 * (call_ij / in_j + call_ij / in_i);
  } else if (in_i == 0.0 && in_j != 0.0) {
    value = call_ij / in_j;
  } else if (in_i != 0.0 && in_j == 0.0) {
    value = call_ij / in_i;
  } else {
    value = 0.0;  // no incoming calls anywhere: no structural evidence
  }
  if (value > 1.0) {
    if (clamped) ++*clamped;
    value = 1.0;
  }
  return value;
}

double sim_str(const IMode& imode_i, const IMode& imode_j,
               const MonolithGraph& graph, std::size_t* clamped) {
  return sim_str_from_rollup(rollup_calls(imode_i, imode_j, graph), clamped);
}

Vocabulary imode_corpus_vocabulary(const std::vector<IMode>& imodes) {
  std::vector<TermBag> bags;
  bags.reserve(imodes.size());
  bool any = false;
  for (const auto& im : imodes) {
    bags.push_back(im.term_freq);
    any = any || !im.term_freq.empty();
  }
  if (!any) return Vocabulary{{}, {}, {}, imodes.size()};
  return build_vocabulary(bags);
}

double sim_sem(const IMode& imode_i, const IMode& imode_j,
               const Vocabulary& imode_corpus_vocab) {
  if (imode_corpus_vocab.size() == 0) return 0.0;
  const std::vector<double> a = tfidf_vector(imode_i.term_freq, imode_corpus_vocab);
  const std::vector<double> b = tfidf_vector(imode_j.term_freq, imode_corpus_vocab);
  return std::clamp(cosine_similarity(a, b), 0.0, 1.0);
}

double imode_similarity(const IMode& imode_i, const IMode& imode_j,
                        const SimilarityWeights& weights, const MonolithGraph& graph,
                        const Vocabulary& imode_corpus_vocab, std::size_t* clamped) {
  weights.validate();
  const double structural = sim_str(imode_i, imode_j, graph, clamped);
  const double semantic = sim_sem(imode_i, imode_j, imode_corpus_vocab);
  return weights.alpha * structural + weights.beta * semantic;
}

} // namespace msd
