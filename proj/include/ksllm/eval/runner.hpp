#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ksllm/data/records.hpp"
#include "ksllm/embed/embedder.hpp"
#include "ksllm/embed/embedding_cache.hpp"
#include "ksllm/eval/report.hpp"
#include "ksllm/llm/client.hpp"
#include "ksllm/llm/gateway.hpp"

namespace ksllm::eval {

// Shared backends for one or more runs. Caches are optional; sharing one
// Pipeline across runs shares triples and embeddings between them.
struct Pipeline {
  embed::Embedder& embedder;
  llm::LlmClient& client;
  embed::EmbeddingCache* emb_cache = nullptr;
  llm::ResponseCache* llm_cache = nullptr;
};

// 1 iff the normalized prediction equals the normalized form of any
// acceptable answer.
int exact_match(const std::string& prediction, const std::vector<std::string>& answers);

// Runs the configured method over all records. Record-level failures are
// counted and excluded from the EM denominator; the run continues.
RunReport run_method(const RunConfig& config, const std::vector<data::QARecord>& records,
                     Pipeline& pipeline);

// One ks_llm run per k, sharing caches so triples and sentence embeddings
// are computed once across the sweep.
std::vector<RunReport> sweep_k(const RunConfig& config, const std::vector<int>& ks,
                               const std::vector<data::QARecord>& records, Pipeline& pipeline);

// One standard_doc run per document budget.
std::vector<RunReport> sweep_length(const RunConfig& config,
                                    const std::vector<text::TokenBudget>& budgets,
                                    const std::vector<data::QARecord>& records,
                                    Pipeline& pipeline);

// Offline rescoring of a predictions jsonl (report output) against a dataset.
struct ScoreSummary {
  std::string method;  // empty for lines without a method field
  int n = 0;
  int n_failed = 0;
  double em = 0.0;  // fraction over non-failed lines
};

std::vector<ScoreSummary> score_predictions(const std::vector<data::QARecord>& dataset,
                                            const std::filesystem::path& predictions_path);

}  // namespace ksllm::eval
