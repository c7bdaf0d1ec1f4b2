#include "ksllm/text/sentences.hpp"

#include <cctype>
#include <string_view>
#include <unordered_set>

namespace ksllm::text {

namespace {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Abbreviations whose trailing period does not end a sentence. Matched
// case-sensitively against the token (letters and internal dots) before the
// period, e.g. "U.S." yields the token "U.S".
const std::unordered_set<std::string>& abbreviation_stoplist() {
  static const std::unordered_set<std::string> kStoplist = {
      "Dr",  "Mr",   "Mrs",  "Ms",  "Prof", "Rev",  "Hon",  "St",   "No",   "Jr",
      "Sr",  "vs",   "etc",  "e.g", "i.e",  "U.S",  "U.K",  "Inc",  "Ltd",  "Co",
      "Corp", "Mt",  "Capt", "Col", "Gen",  "Lt",   "Sgt",  "Ave",  "Dept", "Fig",
      "al",  "Vol",  "pp",   "cf",  "Jan",  "Feb",  "Mar",  "Apr",  "Jun",  "Jul",
      "Aug", "Sep",  "Sept", "Oct", "Nov",  "Dec",
  };
  return kStoplist;
}

bool match_seq(std::string_view doc, std::size_t i, std::string_view seq) {
  return doc.substr(i, seq.size()) == seq;
}

// Multi-byte quote marks.
constexpr std::string_view kLeftDouble = "\xE2\x80\x9C";   // U+201C
constexpr std::string_view kRightDouble = "\xE2\x80\x9D";  // U+201D
constexpr std::string_view kLeftSingle = "\xE2\x80\x98";   // U+2018
constexpr std::string_view kRightSingle = "\xE2\x80\x99";  // U+2019
constexpr std::string_view kLeftGuillemet = "\xC2\xAB";    // U+00AB
constexpr std::string_view kRightGuillemet = "\xC2\xBB";   // U+00BB

struct QuoteState {
  int paren_depth = 0;
  int curly_quote_depth = 0;
  bool straight_double_open = false;

  bool inside() const {
    return paren_depth > 0 || curly_quote_depth > 0 || straight_double_open;
  }
};

// Advances over one character at doc[i], updating quote/paren state. Returns
// the number of bytes consumed.
std::size_t step_state(std::string_view doc, std::size_t i, QuoteState& state) {
  const char c = doc[i];
  if (c == '(' || c == '[') {
    ++state.paren_depth;
    return 1;
  }
  if (c == ')' || c == ']') {
    if (state.paren_depth > 0) --state.paren_depth;
    return 1;
  }
  if (c == '"') {
    state.straight_double_open = !state.straight_double_open;
    return 1;
  }
  if (match_seq(doc, i, kLeftDouble) || match_seq(doc, i, kLeftGuillemet)) {
    ++state.curly_quote_depth;
    return match_seq(doc, i, kLeftGuillemet) ? 2 : 3;
  }
  if (match_seq(doc, i, kRightDouble) || match_seq(doc, i, kRightGuillemet)) {
    if (state.curly_quote_depth > 0) --state.curly_quote_depth;
    return match_seq(doc, i, kRightGuillemet) ? 2 : 3;
  }
  return 1;
}

// Closing marks that may trail a terminal period before the sentence break.
// Returns bytes consumed (0 when doc[i] is not a closer).
std::size_t closer_length(std::string_view doc, std::size_t i) {
  const char c = doc[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (match_seq(doc, i, kRightDouble) || match_seq(doc, i, kRightSingle)) return 3;
  if (match_seq(doc, i, kRightGuillemet)) return 2;
  return 0;
}

bool is_sentence_starter(std::string_view doc, std::size_t i) {
  const unsigned char c = static_cast<unsigned char>(doc[i]);
  if (std::isupper(c) || std::isdigit(c)) return true;
  if (c == '"' || c == '\'') return true;
  return match_seq(doc, i, kLeftDouble) || match_seq(doc, i, kLeftSingle) ||
         match_seq(doc, i, kLeftGuillemet);
}

// Token of letters and internal dots immediately before position `i` (the
// terminal period). Empty when the preceding character is not a letter.
std::string token_before(std::string_view doc, std::size_t i) {
  std::size_t begin = i;
  while (begin > 0) {
    const char c = doc[begin - 1];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '.') {
      --begin;
    } else {
      break;
    }
  }
  // strip leading dots left over from a preceding sentence boundary
  while (begin < i && doc[begin] == '.') ++begin;
  return std::string(doc.substr(begin, i - begin));
}

bool is_abbreviation(std::string_view doc, std::size_t period_pos) {
  const std::string token = token_before(doc, period_pos);
  if (token.empty()) return false;
  if (token.size() == 1 && std::isupper(static_cast<unsigned char>(token[0]))) {
    return true;  // initials such as "J. K. Rowling"
  }
  return abbreviation_stoplist().count(token) > 0;
}

void emit_trimmed(std::string_view doc, std::size_t begin, std::size_t end,
                  std::vector<Sentence>& out) {
  while (begin < end && is_space(doc[begin])) ++begin;
  while (end > begin && is_space(doc[end - 1])) --end;
  if (begin >= end) return;
  Sentence s;
  s.index = static_cast<int>(out.size());
  s.text = std::string(doc.substr(begin, end - begin));
  s.span_begin = begin;
  s.span_end = end;
  out.push_back(std::move(s));
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view document) {
  std::vector<Sentence> sentences;
  const std::size_t n = document.size();
  QuoteState state;
  std::size_t sentence_begin = 0;
  std::size_t i = 0;

  while (i < n) {
    const char c = document[i];
    if (!is_terminal(c)) {
      i += step_state(document, i, state);
      continue;
    }

    if (c == '.' && is_abbreviation(document, i)) {
      ++i;
      continue;
    }

    // Candidate boundary: consume trailing closers, then require whitespace
    // and a sentence starter (or end of document).
    std::size_t end = i + 1;
    QuoteState after = state;
    while (end < n) {
      const std::size_t len = closer_length(document, end);
      if (len == 0) break;
      step_state(document, end, after);
      end += len;
    }

    if (after.inside()) {
      ++i;
      continue;
    }

    if (end >= n) {
      emit_trimmed(document, sentence_begin, end, sentences);
      sentence_begin = end;
      state = after;
      i = end;
      continue;
    }

    if (!is_space(document[end])) {
      ++i;
      continue;
    }
    std::size_t next = end;
    while (next < n && is_space(document[next])) ++next;
    if (next < n && !is_sentence_starter(document, next)) {
      ++i;
      continue;
    }

    emit_trimmed(document, sentence_begin, end, sentences);
    sentence_begin = end;
    state = after;
    i = end;
  }

  emit_trimmed(document, sentence_begin, n, sentences);
  return sentences;
}

}  // namespace ksllm::text
