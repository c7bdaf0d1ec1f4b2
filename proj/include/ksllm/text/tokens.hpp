#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ksllm::text {

// Positive cap on the approximate token count of a document.
struct TokenBudget {
  int max_tokens = 300;
};

struct TokenSpan {
  std::size_t begin = 0;  // byte offsets into the source string
  std::size_t end = 0;
};

// Tokenization rule: split on whitespace, then split leading and trailing
// ASCII punctuation runs off each piece as separate tokens. A piece that is
// entirely punctuation counts as one token. Bytes >= 0x80 are treated as
// word characters.
std::vector<TokenSpan> token_spans(std::string_view text);

std::size_t count_tokens(std::string_view text);

// Longest character prefix of `text` holding at most `budget.max_tokens`
// tokens; cuts at a token boundary. Text already within budget is returned
// unchanged.
std::string truncate_tokens(std::string_view text, TokenBudget budget);

}  // namespace ksllm::text
