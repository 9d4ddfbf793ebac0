#ifndef MSDECOMP_ENCODE_HPP
#define MSDECOMP_ENCODE_HPP

#include "msdecomp/graph.hpp"
#include "msdecomp/lexicon.hpp"
#include "msdecomp/matrix.hpp"

namespace msd {

// Per-class feature vectors for one of the six configurations: a structural
// block followed by a semantic block, both row-normalized to unit length.
struct FeatureMatrix {
  Matrix rows;
  int config = 0;                // 1..6
  std::size_t block_split = 0;   // first semantic column
  std::size_t zero_rows = 0;     // classes with neither structural nor semantic signal
};

enum class StructuralEncoding { InOut, Frequencies, CoDependent };
enum class SemanticEncoding { BagOfWords, TfIdf };

StructuralEncoding structural_option(int config);
SemanticEncoding semantic_option(int config);

// N x 2: row i = [sum of incoming frequency, sum of outgoing frequency].
Matrix structural_inout(const MonolithGraph& graph);

// N x N symmetric: entry (i,j) = call(i->j) + call(j->i), zero diagonal.
Matrix structural_freq(const MonolithGraph& graph);

// Sum of calls into `target` from classes that call both `target` and
// `other`. Exposed for tests; the matrix stores the symmetrized value.
std::int64_t codep_one_sided(const MonolithGraph& graph, std::size_t target,
                             std::size_t other);

// N x N symmetric: entry (i,j) = one_sided(i,j) + one_sided(j,i).
Matrix structural_codep(const MonolithGraph& graph);

// Row-normalizes each block to unit Euclidean length (zero rows stay zero)
// and concatenates structural block then semantic block.
FeatureMatrix combine(const Matrix& structural, const Matrix& semantic, int config);

// Full encoding pipeline for a configuration id: structural option from the
// graph, semantic option from the normalized term bags.
FeatureMatrix build_features(const MonolithGraph& graph, int config,
                             const StopList& stop_list = default_stop_list());

// Per-class normalized bags, in class index order.
std::vector<TermBag> normalized_class_bags(const MonolithGraph& graph,
                                           const StopList& stop_list);

// CSV dump with a header row of column labels, one row per class id.
void dump_features_csv(const FeatureMatrix& features, const MonolithGraph& graph,
                       const std::string& path);

} // namespace msd

#endif
