#include "msdecomp/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace msd {

std::int64_t TermBag::total() const {
  std::int64_t sum = 0;
  for (const auto& [term, n] : counts) sum += n;
  return sum;
}

void TermBag::add(const std::string& term, std::int64_t n) {
  if (n <= 0) return;
  counts[term] += n;
}

void TermBag::merge(const TermBag& other) {
  for (const auto& [term, n] : other.counts) counts[term] += n;
}

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return is_upper(c) || is_lower(c); }

char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

std::vector<std::string> split_identifier(const std::string& raw) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(current);
    current.clear();
  };

  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = raw[i];
    if (!is_alpha(c)) {  // digits, underscores and punctuation all separate
      flush();
      continue;
    }
    if (is_upper(c)) {
      const bool prev_lower = i > 0 && is_lower(raw[i - 1]);
      const bool next_lower = i + 1 < n && is_lower(raw[i + 1]);
      // Break before an upper following a lower (getUser|Name) and before
      // the last capital of an acronym run (SLSB|Bean).
      if (prev_lower || (next_lower && !current.empty())) flush();
    }
    current.push_back(to_lower(c));
  }
  flush();
  return tokens;
}

TermBag normalize(const std::vector<std::string>& tokens, const StopList& stop_list) {
  TermBag bag;
  for (const auto& token : tokens) {
    std::string lowered;
    lowered.reserve(token.size());
    for (char c : token) lowered.push_back(to_lower(c));
    if (lowered.size() < 2 || all_digits(lowered)) continue;
    if (stop_list.count(lowered)) continue;
    bag.add(porter_stem(lowered));
  }
  return bag;
}

TermBag normalize_bag(const TermBag& raw, const StopList& stop_list) {
  TermBag bag;
  for (const auto& [token, count] : raw.counts) {
    for (const auto& piece : split_identifier(token)) {
      if (piece.size() < 2 || all_digits(piece)) continue;
      if (stop_list.count(piece)) continue;
      bag.add(porter_stem(piece), count);
    }
  }
  return bag;
}

const StopList& default_stop_list() {
  // 175 common English words.
  static const StopList list = {
      "a",        "about",    "above",    "after",    "again",     "against",
      "all",      "also",     "although", "always",   "am",        "among",
      "an",       "and",      "any",      "are",      "aren",      "around",
      "as",       "at",       "away",     "be",       "because",   "been",
      "before",   "being",    "below",    "between",  "both",      "but",
      "by",       "can",      "cannot",   "come",     "could",     "couldn",
      "did",      "didn",     "do",       "does",     "doesn",     "doing",
      "don",      "down",     "during",   "each",     "even",      "ever",
      "every",    "few",      "for",      "from",     "further",   "had",
      "hadn",     "has",      "hasn",     "have",     "haven",     "having",
      "he",       "her",      "here",     "hers",     "herself",   "him",
      "himself",  "his",      "how",      "however",  "i",         "if",
      "in",       "into",     "is",       "isn",      "it",        "its",
      "itself",   "just",     "let",      "like",     "made",      "make",
      "many",     "me",       "more",     "most",     "much",      "must",
      "mustn",    "my",       "myself",   "never",    "no",        "nor",
      "not",      "now",      "of",       "off",      "often",     "on",
      "once",     "only",     "onto",     "or",       "other",     "ought",
      "our",      "ours",     "ourselves","out",      "over",      "own",
      "per",      "rather",   "same",     "shall",    "shan",      "she",
      "should",   "shouldn",  "since",    "so",       "some",      "still",
      "such",     "than",     "that",     "the",      "their",     "theirs",
      "them",     "themselves","then",    "there",    "these",     "they",
      "this",     "those",    "through",  "to",       "too",       "under",
      "until",    "up",       "upon",     "us",       "very",      "was",
      "wasn",     "we",       "were",     "weren",    "what",      "when",
      "where",    "whether",  "which",    "while",    "who",       "whom",
      "why",      "will",     "with",     "within",   "without",   "won",
      "would",    "wouldn",   "you",      "your",     "yours",     "yourself",
      "yourselves",
  };
  return list;
}

StopList load_stop_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stop list: " + path);
  StopList list;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string word;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) word.push_back(to_lower(c));
    }
    if (!word.empty()) list.insert(word);
  }
  return list;
}

Vocabulary build_vocabulary(const std::vector<TermBag>& bags) {
  if (bags.empty()) throw std::invalid_argument("build_vocabulary: no bags");
  std::set<std::string> all_terms;
  bool any_nonempty = false;
  for (const auto& bag : bags) {
    any_nonempty = any_nonempty || !bag.empty();
    for (const auto& [term, n] : bag.counts) all_terms.insert(term);
  }
  if (!any_nonempty)
    throw std::invalid_argument("build_vocabulary: every bag is empty");

  Vocabulary vocab;
  vocab.terms.assign(all_terms.begin(), all_terms.end());
  for (std::size_t i = 0; i < vocab.terms.size(); ++i) vocab.index[vocab.terms[i]] = i;
  vocab.doc_freq.assign(vocab.terms.size(), 0);
  vocab.corpus_size = bags.size();
  for (const auto& bag : bags) {
    for (const auto& [term, n] : bag.counts) {
      if (n >= 1) ++vocab.doc_freq[vocab.index.at(term)];
    }
  }
  return vocab;
}

Matrix bow_matrix(const std::vector<TermBag>& bags, const Vocabulary& vocab,
                  std::size_t* unknown_terms) {
  Matrix m(bags.size(), vocab.size());
  for (std::size_t d = 0; d < bags.size(); ++d) {
    for (const auto& [term, count] : bags[d].counts) {
      auto it = vocab.index.find(term);
      if (it == vocab.index.end()) {
        if (unknown_terms) ++*unknown_terms;
        continue;
      }
      m(d, it->second) = static_cast<double>(count);
    }
  }
  return m;
}

std::vector<double> idf_weights(const Vocabulary& vocab) {
  std::vector<double> idf(vocab.size(), 0.0);
  const double d = static_cast<double>(vocab.corpus_size);
  for (std::size_t t = 0; t < vocab.size(); ++t) {
    idf[t] = std::log(d / static_cast<double>(vocab.doc_freq[t]));
  }
  return idf;
}

std::vector<double> tfidf_vector(const TermBag& bag, const Vocabulary& vocab) {
  std::vector<double> v(vocab.size(), 0.0);
  const double d = static_cast<double>(vocab.corpus_size);
  for (const auto& [term, count] : bag.counts) {
    auto it = vocab.index.find(term);
    if (it == vocab.index.end()) continue;
    const double idf = std::log(d / static_cast<double>(vocab.doc_freq[it->second]));
    v[it->second] = static_cast<double>(count) * idf;
  }
  return v;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cosine_similarity: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

Matrix tfidf_matrix(const std::vector<TermBag>& bags, const Vocabulary& vocab,
                    std::size_t* unknown_terms) {
  Matrix m = bow_matrix(bags, vocab, unknown_terms);
  const std::vector<double> idf = idf_weights(vocab);
  for (std::size_t d = 0; d < m.rows(); ++d) {
    for (std::size_t t = 0; t < m.cols(); ++t) {
      m(d, t) *= idf[t];
    }
  }
  return m;
}

} // namespace msd
