#include "tupleqa/text/tokenizer.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tupleqa/text/porter.hpp"

namespace tupleqa::text {

namespace {

bool is_word_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'' ||
         c >= 0x80;  // keep non-ASCII bytes intact
}

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : char(c);
  });
  return out;
}

// Strips enclosing apostrophes and a possessive 's.
std::string trim_word(std::string w) {
  while (!w.empty() && w.front() == '\'') w.erase(w.begin());
  while (!w.empty() && w.back() == '\'') w.pop_back();
  if (w.size() > 2 && w.compare(w.size() - 2, 2, "'s") == 0)
    w.resize(w.size() - 2);
  return w;
}

std::string strip_apostrophes(std::string w) {
  w.erase(std::remove(w.begin(), w.end(), '\''), w.end());
  return w;
}

}  // namespace

Tokenizer::Tokenizer(
    std::vector<std::string> stopwords,
    std::vector<std::pair<std::string, std::string>> stem_exceptions) {
  for (auto& s : stopwords) stopwords_.insert(lowercase(s));
  for (auto& [word, stem] : stem_exceptions)
    exceptions_[lowercase(word)] = lowercase(stem);
}

Tokenizer Tokenizer::from_files(const std::string& stopwords_path,
                                const std::string& exceptions_path) {
  std::vector<std::string> stops;
  if (!stopwords_path.empty()) {
    std::ifstream in(stopwords_path);
    if (!in) throw std::runtime_error("cannot open stopword list: " + stopwords_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] != '#') stops.push_back(line);
    }
  }
  std::vector<std::pair<std::string, std::string>> exceptions;
  if (!exceptions_path.empty()) {
    std::ifstream in(exceptions_path);
    if (!in) throw std::runtime_error("cannot open stemmer exceptions: " + exceptions_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string word, stem;
      if (ls >> word >> stem) exceptions.emplace_back(word, stem);
    }
  }
  return Tokenizer(std::move(stops), std::move(exceptions));
}

std::vector<std::string> Tokenizer::stopwords() const {
  std::vector<std::string> out(stopwords_.begin(), stopwords_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Tokenizer::raw_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : lowercase(text)) {
    if (is_word_char(c)) {
      cur.push_back(char(c));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string Tokenizer::stem(const std::string& lowercase_word) const {
  auto it = exceptions_.find(lowercase_word);
  if (it != exceptions_.end()) return it->second;
  return porter_stem(lowercase_word);
}

TokenList Tokenizer::tokenize(const std::string& text) const {
  TokenList out;
  auto raw = raw_tokens(text);
  for (size_t i = 0; i < raw.size(); ++i) {
    std::string w = trim_word(raw[i]);
    if (w.empty() || is_stopword(w)) continue;
    std::string s = stem(strip_apostrophes(w));
    if (s.empty() || is_stopword(s)) continue;
    out.stems.push_back(std::move(s));
    out.original_positions.push_back(int(i) + 1);
  }
  return out;
}

TokenSet Tokenizer::token_set(const std::string& text) const {
  TokenList toks = tokenize(text);
  return TokenSet(toks.stems.begin(), toks.stems.end());
}

std::vector<QTerm> Tokenizer::chunk_qterms(const std::string& question_text,
                                           bool unigram) const {
  auto raw = raw_tokens(question_text);
  struct Content {
    size_t raw_index;
    std::string surface;
    std::string stem;
  };
  std::vector<Content> content;
  for (size_t i = 0; i < raw.size(); ++i) {
    std::string w = trim_word(raw[i]);
    if (w.empty() || is_stopword(w)) continue;
    std::string s = stem(strip_apostrophes(w));
    if (s.empty() || is_stopword(s)) continue;
    content.push_back({i, raw[i], std::move(s)});
  }
  if (content.empty()) throw std::invalid_argument("empty question");

  std::vector<QTerm> qterms;
  size_t i = 0;
  while (i < content.size()) {
    size_t j = i + 1;
    if (!unigram) {
      // extend over tokens adjacent in the raw stream
      while (j < content.size() &&
             content[j].raw_index == content[j - 1].raw_index + 1)
        ++j;
    }
    QTerm qt;
    for (size_t k = i; k < j; ++k) {
      if (k > i) qt.text += ' ';
      qt.text += content[k].surface;
      qt.stems.stems.push_back(content[k].stem);
      qt.stems.original_positions.push_back(int(content[k].raw_index) + 1);
    }
    qt.position = int(qterms.size()) + 1;
    qterms.push_back(std::move(qt));
    i = j;
  }
  for (auto& qt : qterms) {
    qt.qterm_count = int(qterms.size());
    qt.question_length = int(content.size());
  }
  return qterms;
}

uint64_t Tokenizer::fingerprint() const {
  // FNV-1a over the sorted stopwords and exception pairs.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& s : stopwords()) mix(s);
  std::vector<std::string> ex;
  ex.reserve(exceptions_.size());
  for (const auto& [w, s] : exceptions_) ex.push_back(w + "\t" + s);
  std::sort(ex.begin(), ex.end());
  for (const auto& e : ex) mix(e);
  return h;
}

}  // namespace tupleqa::text
