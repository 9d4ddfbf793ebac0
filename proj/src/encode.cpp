#include "msdecomp/encode.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace msd {

StructuralEncoding structural_option(int config) {
  switch (config) {
    case 1: case 2: return StructuralEncoding::InOut;
    case 3: case 4: return StructuralEncoding::Frequencies;
    case 5: case 6: return StructuralEncoding::CoDependent;
    default: throw std::invalid_argument("configuration id must be 1..6");
  }
}

SemanticEncoding semantic_option(int config) {
  if (config < 1 || config > 6)
    throw std::invalid_argument("configuration id must be 1..6");
  return config % 2 == 1 ? SemanticEncoding::BagOfWords : SemanticEncoding::TfIdf;
}

Matrix structural_inout(const MonolithGraph& graph) {
  const std::size_t n = graph.size();
  Matrix m(n, 2);
  for (const auto& e : graph.edges()) {
    m(e.callee, 0) += static_cast<double>(e.frequency);
    m(e.caller, 1) += static_cast<double>(e.frequency);
  }
  return m;
}

Matrix structural_freq(const MonolithGraph& graph) {
  const std::size_t n = graph.size();
  Matrix m(n, n);
  for (const auto& e : graph.edges()) {
    const double f = static_cast<double>(e.frequency);
    m(e.caller, e.callee) += f;
    m(e.callee, e.caller) += f;
  }
  return m;
}

std::int64_t codep_one_sided(const MonolithGraph& graph, std::size_t target,
                             std::size_t other) {
  if (target == other) return 0;
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < graph.size(); ++k) {
    if (k == target || k == other) continue;
    if (graph.call(k, target) > 0 && graph.call(k, other) > 0)
      sum += graph.call(k, target);
  }
  return sum;
}

Matrix structural_codep(const MonolithGraph& graph) {
  const std::size_t n = graph.size();
  // callers[i] = list of (caller, frequency) pairs into i
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> callers(n);
  for (const auto& e : graph.edges())
    callers[e.callee].push_back({e.caller, e.frequency});

  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t value = 0;
      for (const auto& [k, freq_into_i] : callers[i]) {
        if (k == j) continue;
        if (graph.call(k, j) > 0) value += freq_into_i;  // one_sided(i,j) share
      }
      for (const auto& [k, freq_into_j] : callers[j]) {
        if (k == i) continue;
        if (graph.call(k, i) > 0) value += freq_into_j;  // one_sided(j,i) share
      }
      m(i, j) = static_cast<double>(value);
      m(j, i) = static_cast<double>(value);
    }
  }
  return m;
}

namespace {

void normalize_rows(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const double norm = std::sqrt(squared_norm(m.row(r)));
    if (norm == 0.0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) /= norm;
  }
}

} // namespace

FeatureMatrix combine(const Matrix& structural, const Matrix& semantic, int config) {
  if (structural.rows() != semantic.rows())
    throw std::invalid_argument("combine: row-count mismatch");
  structural_option(config);  // validates the id

  Matrix str = structural;
  Matrix sem = semantic;
  normalize_rows(str);
  normalize_rows(sem);

  FeatureMatrix out;
  out.config = config;
  out.block_split = str.cols();
  out.rows = Matrix(str.rows(), str.cols() + sem.cols());
  for (std::size_t r = 0; r < str.rows(); ++r) {
    bool all_zero = true;
    for (std::size_t c = 0; c < str.cols(); ++c) {
      out.rows(r, c) = str(r, c);
      all_zero = all_zero && str(r, c) == 0.0;
    }
    for (std::size_t c = 0; c < sem.cols(); ++c) {
      out.rows(r, str.cols() + c) = sem(r, c);
      all_zero = all_zero && sem(r, c) == 0.0;
    }
    if (all_zero) ++out.zero_rows;
  }
  return out;
}

std::vector<TermBag> normalized_class_bags(const MonolithGraph& graph,
                                           const StopList& stop_list) {
  std::vector<TermBag> bags;
  bags.reserve(graph.size());
  for (const auto& node : graph.classes())
    bags.push_back(normalize_bag(node.terms, stop_list));
  return bags;
}

FeatureMatrix build_features(const MonolithGraph& graph, int config,
                             const StopList& stop_list) {
  Matrix structural;
  switch (structural_option(config)) {
    case StructuralEncoding::InOut: structural = structural_inout(graph); break;
    case StructuralEncoding::Frequencies: structural = structural_freq(graph); break;
    case StructuralEncoding::CoDependent: structural = structural_codep(graph); break;
  }

  const std::vector<TermBag> bags = normalized_class_bags(graph, stop_list);
  bool any_terms = false;
  for (const auto& bag : bags) any_terms = any_terms || !bag.empty();

  Matrix semantic;
  if (any_terms) {
    const Vocabulary vocab = build_vocabulary(bags);
    semantic = semantic_option(config) == SemanticEncoding::BagOfWords
                   ? bow_matrix(bags, vocab)
                   : tfidf_matrix(bags, vocab);
  } else {
    semantic = Matrix(graph.size(), 0);  // vocabulary-less corpus: no semantic block
  }
  return combine(structural, semantic, config);
}

void dump_features_csv(const FeatureMatrix& features, const MonolithGraph& graph,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "class_id";
  for (std::size_t c = 0; c < features.rows.cols(); ++c) {
    out << ',' << (c < features.block_split ? "str_" : "sem_") << c;
  }
  out << '\n';
  for (std::size_t r = 0; r < features.rows.rows(); ++r) {
    out << graph.class_at(r).id;
    for (std::size_t c = 0; c < features.rows.cols(); ++c)
      out << ',' << features.rows(r, c);
    out << '\n';
  }
}

} // namespace msd
