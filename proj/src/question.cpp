#include "tupleqa/question.hpp"

#include <algorithm>
#include <stdexcept>

namespace tupleqa {

Question make_question(std::string id, std::string question_text,
                       std::vector<std::string> choice_texts,
                       std::optional<int> answer_key,
                       const text::Tokenizer& tokenizer,
                       bool unigram_qterms) {
  if (choice_texts.size() < 2)
    throw std::invalid_argument("question needs at least two choices: " + id);
  if (answer_key && (*answer_key < 0 || *answer_key >= int(choice_texts.size())))
    throw std::invalid_argument("answer key out of range: " + id);

  Question q;
  q.id = std::move(id);
  q.text = std::move(question_text);
  q.answer_key = answer_key;
  q.qterms = tokenizer.chunk_qterms(q.text, unigram_qterms);
  q.question_tokens = tokenizer.tokenize(q.text);
  q.question_token_set = text::TokenSet(q.question_tokens.stems.begin(),
                                        q.question_tokens.stems.end());
  q.qa_token_set = q.question_token_set;
  for (auto& ct : choice_texts) {
    Choice c;
    c.tokens = tokenizer.token_set(ct);
    c.text = std::move(ct);
    q.qa_token_set.insert(c.tokens.begin(), c.tokens.end());
    q.choices.push_back(std::move(c));
  }
  return q;
}

std::optional<int> resolve_answer_key(const std::string& label,
                                      const std::vector<std::string>& choices) {
  if (label.empty()) return std::nullopt;
  if (label.size() == 1) {
    char c = label[0];
    if (c >= 'A' && c <= 'Z' && c - 'A' < int(choices.size())) return c - 'A';
    if (c >= 'a' && c <= 'z' && c - 'a' < int(choices.size())) return c - 'a';
    if (c >= '1' && c <= '9' && c - '1' < int(choices.size())) return c - '1';
  }
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return char(std::tolower(ch)); });
    return s;
  };
  std::string want = lower(label);
  for (size_t i = 0; i < choices.size(); ++i)
    if (lower(choices[i]) == want) return int(i);
  return std::nullopt;
}

}  // namespace tupleqa
