#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tupleqa::text {

// Lowercase stemmed content tokens plus their 1-based positions in the
// source token stream. The two vectors are parallel.
struct TokenList {
  std::vector<std::string> stems;
  std::vector<int> original_positions;

  bool empty() const { return stems.empty(); }
  size_t size() const { return stems.size(); }
};

using TokenSet = std::set<std::string>;

// One chunked question term: a maximal span of content tokens.
struct QTerm {
  std::string text;       // surface form of the span
  TokenList stems;
  int position = 0;       // 1-based chunk index
  int qterm_count = 0;    // number of qterms in the question
  int question_length = 0;  // content-token count of the whole question
};

// Deterministic normalization: lowercasing, word splitting, stopword
// filtering and suffix-stripping. Stopwords are filtered both on the
// surface form and on the resulting stem, so no emitted stem is a stopword.
class Tokenizer {
 public:
  Tokenizer() = default;
  Tokenizer(std::vector<std::string> stopwords,
            std::vector<std::pair<std::string, std::string>> stem_exceptions);

  // Loads one-entry-per-line stopwords and "word<ws>stem" exception pairs.
  static Tokenizer from_files(const std::string& stopwords_path,
                              const std::string& exceptions_path);

  std::vector<std::string> stopwords() const;

  TokenList tokenize(const std::string& text) const;
  TokenSet token_set(const std::string& text) const;

  // Partitions the content tokens of the question into stopword-delimited
  // maximal spans (or single tokens when `unigram` is set).
  // Throws std::invalid_argument("empty question") when no content tokens.
  std::vector<QTerm> chunk_qterms(const std::string& question_text,
                                  bool unigram = false) const;

  // Lowercased surface word tokens, no filtering or stemming. Apostrophes
  // are kept so contraction suffixes stay visible.
  static std::vector<std::string> raw_tokens(const std::string& text);

  std::string stem(const std::string& lowercase_word) const;
  bool is_stopword(const std::string& lowercase_word) const {
    return stopwords_.count(lowercase_word) > 0;
  }

  // Hash over the configuration, used to detect stale persisted indexes.
  uint64_t fingerprint() const;

 private:
  std::unordered_set<std::string> stopwords_;
  std::unordered_map<std::string, std::string> exceptions_;
};

}  // namespace tupleqa::text
