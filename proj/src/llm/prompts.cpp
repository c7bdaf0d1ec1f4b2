#include "ksllm/llm/prompts.hpp"

#include <algorithm>

#include "ksllm/errors.hpp"

namespace ksllm::llm {

namespace {

constexpr std::string_view kAnswerInstruction = "Answer with a single entity only.";

void require(bool present, MethodId method, std::string_view part) {
  if (!present) {
    throw InputError("build_prompt: method " + std::string(method_name(method)) +
                     " requires " + std::string(part));
  }
}

std::string sentences_block(const std::vector<text::Sentence>& sentences) {
  std::vector<const text::Sentence*> ordered;
  ordered.reserve(sentences.size());
  for (const auto& s : sentences) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const text::Sentence* a, const text::Sentence* b) { return a->index < b->index; });
  std::string block;
  for (const auto* s : ordered) {
    if (!block.empty()) block.push_back('\n');
    block += s->text;
  }
  return block;
}

Prompt single_user(MethodId method, std::string content, GenParams params) {
  Prompt p;
  p.method = method;
  p.messages.push_back({"user", std::move(content)});
  p.params = params;
  return p;
}

}  // namespace

std::string_view method_name(MethodId method) {
  switch (method) {
    case MethodId::standard:
      return "standard";
    case MethodId::standard_doc:
      return "standard_doc";
    case MethodId::cot_doc:
      return "cot_doc";
    case MethodId::ks_q:
      return "ks_q";
    case MethodId::ks_t:
      return "ks_t";
    case MethodId::ks_s:
      return "ks_s";
    case MethodId::ks_llm:
      return "ks_llm";
  }
  return "unknown";
}

std::optional<MethodId> method_from_name(std::string_view name) {
  for (MethodId m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool method_needs_evidence(MethodId method) {
  switch (method) {
    case MethodId::standard:
    case MethodId::ks_t:
      return false;
    default:
      return true;
  }
}

bool method_needs_triples(MethodId method) {
  return method == MethodId::ks_t || method == MethodId::ks_s || method == MethodId::ks_llm;
}

std::string Prompt::text() const {
  std::string out;
  for (const auto& m : messages) {
    if (!out.empty()) out.push_back('\n');
    out += m.content;
  }
  return out;
}

Prompt build_prompt(MethodId method, const std::string& question,
                    const std::optional<std::string>& document,
                    const std::optional<std::vector<triples::Triple>>& triple_list,
                    const std::optional<std::vector<text::Sentence>>& sentences,
                    text::TokenBudget budget) {
  if (question.empty()) throw InputError("build_prompt: question is empty");

  std::string body;
  switch (method) {
    case MethodId::standard:
      break;
    case MethodId::standard_doc:
    case MethodId::cot_doc:
      require(document.has_value(), method, "document");
      body += "Evidence document:\n";
      body += text::truncate_tokens(*document, budget);
      body += "\n\n";
      break;
    case MethodId::ks_q:
    case MethodId::ks_s:
      require(sentences.has_value(), method, "sentences");
      body += "Evidence sentences:\n";
      body += sentences_block(*sentences);
      body += "\n\n";
      break;
    case MethodId::ks_t:
      require(triple_list.has_value(), method, "triples");
      body += "Knowledge triples:\n";
      body += triples::render_triples(*triple_list, triples::RenderStyle::prompt);
      body += "\n\n";
      break;
    case MethodId::ks_llm:
      require(triple_list.has_value(), method, "triples");
      require(sentences.has_value(), method, "sentences");
      body += "Knowledge triples:\n";
      body += triples::render_triples(*triple_list, triples::RenderStyle::prompt);
      body += "\n\nEvidence sentences:\n";
      body += sentences_block(*sentences);
      body += "\n\n";
      break;
  }

  body += "Question: " + question + "\n";
  if (method == MethodId::cot_doc) {
    body += "Let's think step by step, then state the final answer on the last line.\n";
  }
  body += kAnswerInstruction;

  return single_user(method, std::move(body), GenParams{0.0, 64});
}

Prompt build_triple_construction_prompt(const std::string& question) {
  if (question.empty()) throw InputError("triple construction: question is empty");
  std::string body =
      "Identify the subject entity of the question, then write 3 to 5 knowledge triples "
      "about that entity, one per line, each formatted as (head, relation, tail) with the "
      "subject entity as the head. Do not use commas inside the head, relation, or tail "
      "fields.\n\nQuestion: " +
      question;
  return single_user(MethodId::ks_llm, std::move(body), GenParams{0.0, 256});
}

Prompt build_evidence_generation_prompt(const std::string& question) {
  if (question.empty()) throw InputError("evidence generation: question is empty");
  std::string body =
      "Write a short background document of roughly 100 to 300 words containing facts "
      "relevant to the following question. Use complete sentences.\n\nQuestion: " +
      question;
  return single_user(MethodId::standard, std::move(body), GenParams{0.0, 512});
}

}  // namespace ksllm::llm
