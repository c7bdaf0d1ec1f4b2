#include "ksllm/triples/triples.hpp"

#include <cctype>

namespace ksllm::triples {

namespace {

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

}  // namespace

ParseResult parse_triples(std::string_view llm_text) {
  ParseResult result;
  const std::size_t n = llm_text.size();
  std::size_t i = 0;
  while (i < n) {
    if (llm_text[i] != '(') {
      ++i;
      continue;
    }
    // maximal group: scan to the matching closer of this top-level '('
    std::size_t depth = 1;
    std::size_t j = i + 1;
    std::vector<std::size_t> top_commas;
    while (j < n && depth > 0) {
      const char c = llm_text[j];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      } else if (c == ',' && depth == 1) {
        top_commas.push_back(j);
      }
      ++j;
    }
    if (depth != 0) break;  // unterminated group: not a group, stop scanning

    if (top_commas.size() == 2) {
      Triple t;
      t.head = trim(llm_text.substr(i + 1, top_commas[0] - i - 1));
      t.relation = trim(llm_text.substr(top_commas[0] + 1, top_commas[1] - top_commas[0] - 1));
      t.tail = trim(llm_text.substr(top_commas[1] + 1, (j - 1) - top_commas[1] - 1));
      if (!t.head.empty() && !t.relation.empty() && !t.tail.empty()) {
        result.triples.push_back(std::move(t));
      } else {
        ++result.malformed;
      }
    } else {
      ++result.malformed;
    }
    i = j;
  }
  return result;
}

std::string render_triples(const std::vector<Triple>& triples, RenderStyle style) {
  std::string out;
  const char* sep = style == RenderStyle::query ? ", " : "\n";
  for (const Triple& t : triples) {
    if (!out.empty()) out += sep;
    out += '(';
    out += t.head;
    out += ", ";
    out += t.relation;
    out += ", ";
    out += t.tail;
    out += ')';
  }
  return out;
}

}  // namespace ksllm::triples
