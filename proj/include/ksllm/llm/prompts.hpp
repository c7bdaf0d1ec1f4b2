#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksllm/text/sentences.hpp"
#include "ksllm/text/tokens.hpp"
#include "ksllm/triples/triples.hpp"

namespace ksllm::llm {

// The seven evaluated methods: the no-evidence baseline, two whole-document
// baselines, three knowledge-selection ablations, and the full method.
enum class MethodId { standard, standard_doc, cot_doc, ks_q, ks_t, ks_s, ks_llm };

constexpr MethodId kAllMethods[] = {MethodId::standard, MethodId::standard_doc,
                                    MethodId::cot_doc,  MethodId::ks_q,
                                    MethodId::ks_t,     MethodId::ks_s,
                                    MethodId::ks_llm};

std::string_view method_name(MethodId method);
std::optional<MethodId> method_from_name(std::string_view name);

// true when the method consumes the evidence document (directly or through
// sentence selection)
bool method_needs_evidence(MethodId method);
bool method_needs_triples(MethodId method);

struct Message {
  std::string role;  // "system" or "user"
  std::string content;
};

struct GenParams {
  double temperature = 0.0;
  int max_output_tokens = 64;

  bool operator==(const GenParams&) const = default;
};

struct Prompt {
  MethodId method = MethodId::standard;
  std::vector<Message> messages;
  GenParams params;

  // all message contents joined by newlines; what mock matchers see
  std::string text() const;
};

// Renders the method's answer prompt. Document-bearing methods truncate the
// document to `budget` first; sentences are inserted in document order;
// output bytes are a pure function of the inputs. Throws InputError when a
// required ingredient is missing.
Prompt build_prompt(MethodId method, const std::string& question,
                    const std::optional<std::string>& document,
                    const std::optional<std::vector<triples::Triple>>& triple_list,
                    const std::optional<std::vector<text::Sentence>>& sentences,
                    text::TokenBudget budget);

// Prompt asking the model to emit subject-entity triples, one per line, no
// commas inside fields.
Prompt build_triple_construction_prompt(const std::string& question);

// Prompt asking the model to write a short background document for a
// question that ships without evidence.
Prompt build_evidence_generation_prompt(const std::string& question);

}  // namespace ksllm::llm
