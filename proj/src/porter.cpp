// Porter stemmer, from the 1980 paper "An algorithm for suffix stripping".
// Operates on lowercase words; words of length <= 2 pass through unchanged,
// as in the reference implementation.

#include "msdecomp/lexicon.hpp"

#include <string>

namespace msd {
namespace {

bool is_vowel_at(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return true;
    case 'y':
      // y is a vowel when preceded by a consonant
      return i > 0 && !is_vowel_at(w, i - 1);
    default:
      return false;
  }
}

// Measure m of the stem: [C](VC)^m[V].
int measure(const std::string& w) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n && !is_vowel_at(w, i)) ++i;  // leading consonants
  while (i < n) {
    while (i < n && is_vowel_at(w, i)) ++i;
    if (i == n) break;
    while (i < n && !is_vowel_at(w, i)) ++i;
    ++m;
  }
  return m;
}

bool contains_vowel(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (is_vowel_at(w, i)) return true;
  return false;
}

bool ends_double_consonant(const std::string& w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && !is_vowel_at(w, n - 1);
}

// *o: stem ends cvc where the final c is not w, x or y.
bool ends_cvc(const std::string& w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (is_vowel_at(w, n - 3) || !is_vowel_at(w, n - 2) || is_vowel_at(w, n - 1))
    return false;
  const char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, const char* suffix) {
  const std::size_t sl = std::string::traits_type::length(suffix);
  return w.size() >= sl && w.compare(w.size() - sl, sl, suffix) == 0;
}

std::string stem_part(const std::string& w, std::size_t suffix_len) {
  return w.substr(0, w.size() - suffix_len);
}

struct Rule {
  const char* suffix;
  const char* replacement;
  int min_measure;  // condition (m > min_measure) on the stem
};

// Applies the longest matching rule whose measure condition holds. Returns
// true if a suffix matched (whether or not the condition passed), per the
// paper's "longest match wins, then test the condition" reading.
bool apply_rules(std::string& w, const Rule* rules, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Rule& r = rules[i];
    if (!ends_with(w, r.suffix)) continue;
    std::string stem = stem_part(w, std::string::traits_type::length(r.suffix));
    if (measure(stem) > r.min_measure) w = stem + r.replacement;
    return true;
  }
  return false;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.erase(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.erase(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // unchanged
  } else if (ends_with(w, "s")) {
    w.pop_back();
  }
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    std::string stem = stem_part(w, 3);
    if (measure(stem) > 0) w.erase(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed")) {
    std::string stem = stem_part(w, 2);
    if (contains_vowel(stem)) {
      w = stem;
      stripped = true;
    }
  } else if (ends_with(w, "ing")) {
    std::string stem = stem_part(w, 3);
    if (contains_vowel(stem)) {
      w = stem;
      stripped = true;
    }
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    const char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && contains_vowel(stem_part(w, 1))) w.back() = 'i';
}

const Rule kStep2[] = {
    {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
    {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
    {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
    {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
    {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
    {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
    {"iviti", "ive", 0},   {"biliti", "ble", 0},
};

const Rule kStep3[] = {
    {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
    {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0},
    {"ness", "", 0},
};

const Rule kStep4[] = {
    {"al", "", 1},    {"ance", "", 1},  {"ence", "", 1}, {"er", "", 1},
    {"ic", "", 1},    {"able", "", 1},  {"ible", "", 1}, {"ant", "", 1},
    {"ement", "", 1}, {"ment", "", 1},  {"ent", "", 1},  {"ou", "", 1},
    {"ism", "", 1},   {"ate", "", 1},   {"iti", "", 1},  {"ous", "", 1},
    {"ive", "", 1},   {"ize", "", 1},
};

// Longest-match dispatch across a rule table.
void apply_longest(std::string& w, const Rule* rules, std::size_t count) {
  const Rule* best = nullptr;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = std::string::traits_type::length(rules[i].suffix);
    if (len > best_len && ends_with(w, rules[i].suffix)) {
      best = &rules[i];
      best_len = len;
    }
  }
  if (!best) return;
  std::string stem = stem_part(w, best_len);
  if (measure(stem) > best->min_measure) w = stem + best->replacement;
}

void step4(std::string& w) {
  // "ion" requires the stem to end in s or t; handled apart from the table
  // so that the longest-match scan does not bypass the extra condition.
  std::size_t best_len = 0;
  const Rule* best = nullptr;
  for (const Rule& r : kStep4) {
    const std::size_t len = std::string::traits_type::length(r.suffix);
    if (len > best_len && ends_with(w, r.suffix)) {
      best = &r;
      best_len = len;
    }
  }
  if (ends_with(w, "ion") && 3 > best_len) {
    std::string stem = stem_part(w, 3);
    if (!stem.empty() && (stem.back() == 's' || stem.back() == 't') &&
        measure(stem) > 1) {
      w = stem;
    }
    return;
  }
  if (!best) return;
  std::string stem = stem_part(w, best_len);
  if (measure(stem) > best->min_measure) w = stem;
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::string stem = stem_part(w, 1);
  const int m = measure(stem);
  if (m > 1 || (m == 1 && !ends_cvc(stem))) w = stem;
}

void step5b(std::string& w) {
  if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l')
    w.pop_back();
}

} // namespace

std::string porter_stem(const std::string& word) {
  if (word.size() <= 2) return word;
  std::string w = word;
  step1a(w);
  step1b(w);
  step1c(w);
  apply_longest(w, kStep2, std::size(kStep2));
  apply_longest(w, kStep3, std::size(kStep3));
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

} // namespace msd
