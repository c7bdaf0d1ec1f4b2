#include "ksllm/text/tokens.hpp"

#include <cctype>

#include "ksllm/errors.hpp"

namespace ksllm::text {

namespace {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<TokenSpan> token_spans(std::string_view text) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_space(text[i])) ++i;
    if (i >= n) break;
    std::size_t piece_begin = i;
    while (i < n && !is_space(text[i])) ++i;
    const std::size_t piece_end = i;

    std::size_t lead = piece_begin;
    while (lead < piece_end && is_punct(text[lead])) ++lead;
    if (lead == piece_end) {
      // piece is one punctuation run
      spans.push_back({piece_begin, piece_end});
      continue;
    }
    std::size_t trail = piece_end;
    while (trail > lead && is_punct(text[trail - 1])) --trail;

    if (lead > piece_begin) spans.push_back({piece_begin, lead});
    spans.push_back({lead, trail});
    if (trail < piece_end) spans.push_back({trail, piece_end});
  }
  return spans;
}

std::size_t count_tokens(std::string_view text) { return token_spans(text).size(); }

std::string truncate_tokens(std::string_view text, TokenBudget budget) {
  if (budget.max_tokens < 1) {
    throw InputError("truncate_tokens: max_tokens must be >= 1");
  }
  const auto spans = token_spans(text);
  if (spans.size() <= static_cast<std::size_t>(budget.max_tokens)) {
    return std::string(text);
  }
  const std::size_t cut = spans[static_cast<std::size_t>(budget.max_tokens) - 1].end;
  return std::string(text.substr(0, cut));
}

}  // namespace ksllm::text
