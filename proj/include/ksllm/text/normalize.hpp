#pragma once

#include <string>
#include <string_view>

namespace ksllm::text {

// Canonical form used for exact-match comparison: lowercase (ASCII),
// ASCII punctuation deleted, the articles "a", "an", "the" dropped as whole
// tokens, whitespace collapsed to single spaces and trimmed. Idempotent.
// Bytes >= 0x80 pass through untouched.
std::string normalize_answer(std::string_view text);

}  // namespace ksllm::text
