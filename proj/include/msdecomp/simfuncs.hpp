#ifndef MSDECOMP_SIMFUNCS_HPP
#define MSDECOMP_SIMFUNCS_HPP

#include <cstdint>

#include "msdecomp/graph.hpp"
#include "msdecomp/imode.hpp"

namespace msd {

struct SimilarityWeights {
  double alpha = 0.5;  // structural weight
  double beta = 0.5;   // semantic weight

  void validate() const;
};

struct CallRollup {
  std::int64_t call_ij = 0;    // undirected call volume between the groups
  std::int64_t call_in_i = 0;  // calls into members of i, from anywhere
  std::int64_t call_in_j = 0;
};

// Rolls class-level call frequencies up to two groups of classes. Each graph
// edge counts at most once: it contributes to call_ij when one endpoint lies
// in i and the other in j (identical groups therefore count internal edges
// once).
CallRollup rollup_calls(const IMode& imode_i, const IMode& imode_j,
                        const MonolithGraph& graph);

// Piecewise structural similarity over the rollup, in [0,1]. Results beyond
// 1 (possible under the undirected rollup) are clamped and counted.
double sim_str(const IMode& imode_i, const IMode& imode_j,
               const MonolithGraph& graph, std::size_t* clamped = nullptr);
double sim_str_from_rollup(const CallRollup& rollup, std::size_t* clamped = nullptr);

// Cosine similarity of the two iModes' TF-IDF vectors under a vocabulary
// built over the current iMode corpus. Either vector zero -> 0.
double sim_sem(const IMode& imode_i, const IMode& imode_j,
               const Vocabulary& imode_corpus_vocab);

// Eq.-style weighted sum: alpha * sim_str + beta * sim_sem.
double imode_similarity(const IMode& imode_i, const IMode& imode_j,
                        const SimilarityWeights& weights, const MonolithGraph& graph,
                        const Vocabulary& imode_corpus_vocab,
                        std::size_t* clamped = nullptr);

// Vocabulary over the term bags of a set of iModes. Returns an empty
// vocabulary when every bag is empty (all semantic similarities are then 0).
Vocabulary imode_corpus_vocabulary(const std::vector<IMode>& imodes);

} // namespace msd

#endif
