#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ksllm::triples {

// Structured knowledge unit (head entity, relation, tail entity). All three
// fields are non-empty after trimming and contain no unbalanced parentheses.
struct Triple {
  std::string head;
  std::string relation;
  std::string tail;

  bool operator==(const Triple&) const = default;
};

struct ParseResult {
  std::vector<Triple> triples;   // order of appearance, duplicates preserved
  int malformed = 0;             // groups with != 2 top-level commas or empty fields
};

// Extracts every maximal parenthesized group with exactly two top-level
// commas (commas inside nested parens do not count) from free-form model
// output. Total: never throws; text without well-formed groups yields an
// empty list.
ParseResult parse_triples(std::string_view llm_text);

enum class RenderStyle {
  query,   // single line: "(h, r, t), (h, r, t)"
  prompt,  // one "(h, r, t)" per line
};

std::string render_triples(const std::vector<Triple>& triples, RenderStyle style);

}  // namespace ksllm::triples
