#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tupleqa/text/tokenizer.hpp"

namespace tupleqa {

struct Choice {
  std::string text;
  text::TokenSet tokens;
};

// A multiple-choice question with its chunked qterms and tokenized choices.
struct Question {
  std::string id;
  std::string text;
  std::vector<text::QTerm> qterms;
  std::vector<Choice> choices;
  std::optional<int> answer_key;  // choice index

  text::TokenList question_tokens;
  text::TokenSet question_token_set;
  text::TokenSet qa_token_set;  // question plus every choice
};

// Tokenizes and chunks; throws std::invalid_argument for fewer than two
// choices or a question without content tokens.
Question make_question(std::string id, std::string question_text,
                       std::vector<std::string> choice_texts,
                       std::optional<int> answer_key,
                       const text::Tokenizer& tokenizer,
                       bool unigram_qterms = false);

// Maps an answer-key label ("D", "4", or the choice text) to its index.
std::optional<int> resolve_answer_key(const std::string& label,
                                      const std::vector<std::string>& choices);

}  // namespace tupleqa
