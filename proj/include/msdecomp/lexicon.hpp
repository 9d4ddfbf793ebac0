#ifndef MSDECOMP_LEXICON_HPP
#define MSDECOMP_LEXICON_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "msdecomp/matrix.hpp"

namespace msd {

// Multiset of terms. Raw bags (as extracted from source) hold tokens as they
// appear; normalized bags hold lowercase stemmed terms with stop words
// removed.
struct TermBag {
  std::map<std::string, std::int64_t> counts;

  bool empty() const { return counts.empty(); }
  std::int64_t total() const;
  void add(const std::string& term, std::int64_t n = 1);
  // Merges another bag into this one, summing counts.
  void merge(const TermBag& other);

  bool operator==(const TermBag&) const = default;
};

using StopList = std::set<std::string>;

// Splits an identifier on case boundaries, digits, underscores and any other
// non-alphabetic separator. A run of capitals keeps together until its last
// letter, which starts the next token ("TradeSLSBBean" -> trade, slsb, bean).
// Output is lowercase; digit runs are separators and never emitted.
std::vector<std::string> split_identifier(const std::string& raw);

// Classic Porter (1980) stemmer over a lowercase word.
std::string porter_stem(const std::string& word);

// Stop-word removal, minimum length 2, Porter stemming, count aggregation.
TermBag normalize(const std::vector<std::string>& tokens, const StopList& stop_list);

// Expands a raw bag (unsplit identifiers / comment words) through
// split_identifier + normalize. Each sub-token inherits the raw count.
TermBag normalize_bag(const TermBag& raw, const StopList& stop_list);

// The built-in English stop list (~175 words, lowercase).
const StopList& default_stop_list();

// Loads one lowercase word per line; '#' starts a comment. Returned words are
// merged with the default list by callers that want extension semantics.
StopList load_stop_list(const std::string& path);

struct Vocabulary {
  std::vector<std::string> terms;            // sorted lexicographically
  std::map<std::string, std::size_t> index;  // term -> column
  std::vector<std::size_t> doc_freq;         // per column
  std::size_t corpus_size = 0;

  std::size_t size() const { return terms.size(); }
};

// Terms sorted for determinism; doc_freq counts bags containing the term.
// Throws if every bag is empty (no semantic signal to build on).
Vocabulary build_vocabulary(const std::vector<TermBag>& bags);

// Raw term frequencies, one row per bag. Terms missing from the vocabulary
// are ignored (callers may count them via the optional paramater).
Matrix bow_matrix(const std::vector<TermBag>& bags, const Vocabulary& vocab,
                  std::size_t* unknown_terms = nullptr);

// tf(d,t) * ln(D / df(t)). A term present in every document weighs zero.
Matrix tfidf_matrix(const std::vector<TermBag>& bags, const Vocabulary& vocab,
                    std::size_t* unknown_terms = nullptr);

// Per-column ln(D / df(t)) for a vocabulary.
std::vector<double> idf_weights(const Vocabulary& vocab);

// TF-IDF vector of a single bag under a fixed vocabulary; terms outside the
// vocabulary are dropped.
std::vector<double> tfidf_vector(const TermBag& bag, const Vocabulary& vocab);

// Cosine similarity of two vectors; 0 when either is the zero vector.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

} // namespace msd

#endif
