#include "tupleqa/text/porter.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <utility>

namespace tupleqa::text {

namespace {

bool is_alpha_word(const std::string& w) {
  return std::all_of(w.begin(), w.end(),
                     [](unsigned char c) { return c >= 'a' && c <= 'z'; });
}

// A letter is a consonant unless it is a/e/i/o/u, or a 'y' preceded by a
// consonant.
bool is_consonant(std::string_view w, size_t i) {
  char c = w[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
  if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
  return true;
}

// Measure m of the [C](VC)^m[V] decomposition.
int measure(std::string_view w) {
  int m = 0;
  size_t i = 0;
  size_t n = w.size();
  while (i < n && is_consonant(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(w, i)) ++i;
    if (i == n) break;
    ++m;
    while (i < n && is_consonant(w, i)) ++i;
  }
  return m;
}

bool contains_vowel(std::string_view w) {
  for (size_t i = 0; i < w.size(); ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

bool ends_double_consonant(std::string_view w) {
  size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: stem ends cvc where the final consonant is not w, x or y.
bool ends_cvc(std::string_view w) {
  size_t n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) ||
      !is_consonant(w, n - 1))
    return false;
  char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suf) {
  return w.size() >= suf.size() &&
         w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Longest-match semantics within a step: only the rule with the longest
// matching suffix is considered; if its condition fails the step is a no-op.
template <size_t N>
bool apply_longest(std::string& w, const std::array<Rule, N>& rules,
                   int min_measure) {
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if (ends_with(w, r.suffix) &&
        (!best || r.suffix.size() > best->suffix.size()))
      best = &r;
  }
  if (!best) return false;
  std::string_view stem(w.data(), w.size() - best->suffix.size());
  if (measure(stem) <= min_measure) return false;
  w.resize(stem.size());
  w.append(best->replacement);
  return true;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses"))
    w.resize(w.size() - 2);
  else if (ends_with(w, "ies"))
    w.resize(w.size() - 2);
  else if (ends_with(w, "ss"))
    ;
  else if (ends_with(w, "s"))
    w.resize(w.size() - 1);
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(std::string_view(w.data(), w.size() - 3)) > 0)
      w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") &&
      contains_vowel(std::string_view(w.data(), w.size() - 2))) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") &&
             contains_vowel(std::string_view(w.data(), w.size() - 3))) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.resize(w.size() - 1);
  } else if (measure(w) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") &&
      contains_vowel(std::string_view(w.data(), w.size() - 1)))
    w.back() = 'i';
}

constexpr std::array<Rule, 20> kStep2 = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
    {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
    {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
    {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
    {"iviti", "ive"},   {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3 = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<Rule, 18> kStep4 = {{
    {"al", ""},    {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},
    {"able", ""},  {"ible", ""}, {"ant", ""},  {"ement", ""},
    {"ment", ""},  {"ent", ""},  {"ou", ""},   {"ism", ""},  {"ate", ""},
    {"iti", ""},   {"ous", ""},  {"ive", ""},  {"ize", ""},
}};

// "ion" in step 4 carries the extra *S-or-*T condition, handled separately.
void step4(std::string& w) {
  const Rule* best = nullptr;
  for (const Rule& r : kStep4) {
    if (ends_with(w, r.suffix) &&
        (!best || r.suffix.size() > best->suffix.size()))
      best = &r;
  }
  bool ion = ends_with(w, "ion") && (!best || best->suffix.size() < 3);
  if (ion) {
    std::string_view stem(w.data(), w.size() - 3);
    if (!stem.empty() && (stem.back() == 's' || stem.back() == 't') &&
        measure(stem) > 1)
      w.resize(stem.size());
    return;
  }
  if (!best) return;
  std::string_view stem(w.data(), w.size() - best->suffix.size());
  if (measure(stem) > 1) w.resize(stem.size());
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::string_view stem(w.data(), w.size() - 1);
  int m = measure(stem);
  if (m > 1 || (m == 1 && !ends_cvc(stem))) w.resize(stem.size());
}

void step5b(std::string& w) {
  if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l')
    w.resize(w.size() - 1);
}

}  // namespace

std::string porter_stem(const std::string& word) {
  if (word.size() <= 2 || !is_alpha_word(word)) return word;
  std::string w = word;
  step1a(w);
  step1b(w);
  step1c(w);
  apply_longest(w, kStep2, 0);
  apply_longest(w, kStep3, 0);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

}  // namespace tupleqa::text
