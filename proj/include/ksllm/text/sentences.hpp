#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ksllm::text {

// One sentence of an evidence document. `text` is the contiguous substring
// of the source document at [span_begin, span_end), trimmed of surrounding
// whitespace, and holds at least one non-whitespace character.
struct Sentence {
  int index = 0;  // 0-based position in document order
  std::string text;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
};

// Rule-based segmentation: a sentence ends at '.', '!' or '?' (plus any
// closing quotes/brackets) when followed by whitespace and an uppercase
// letter, digit or opening quote. Splits are suppressed after stop-list
// abbreviations (Dr., Mr., U.S., ...), after single-letter initials, and
// inside matched quotes or parentheses. Deterministic; empty input yields
// an empty list.
std::vector<Sentence> split_sentences(std::string_view document);

}  // namespace ksllm::text
