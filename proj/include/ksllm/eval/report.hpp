#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ksllm/embed/embedder.hpp"
#include "ksllm/llm/client.hpp"
#include "ksllm/llm/prompts.hpp"
#include "ksllm/text/tokens.hpp"

namespace ksllm::eval {

// Everything one evaluation run needs; defaults match the reported setup
// (k = 2, max_tokens = 300).
struct RunConfig {
  llm::MethodId method = llm::MethodId::ks_llm;
  int k = 2;
  text::TokenBudget max_tokens{300};
  std::filesystem::path dataset_path;
  std::string dataset_id;  // defaults to dataset_path stem when empty
  embed::EmbedderConfig embedder;
  llm::LlmConfig llm;
  std::filesystem::path cache_dir = ".ksllm-cache";
  int concurrency = 1;
  std::filesystem::path output_path = "report.csv";
  std::string output_format = "csv";  // csv | markdown | jsonl
  bool strict_load = true;
  // Zeroes all reported timings so repeated runs emit identical bytes.
  bool deterministic_timing = false;
  // Experiment flag: embed each triple separately and average, instead of
  // embedding the joint rendering once.
  bool average_triple_embeddings = false;

  std::string effective_dataset_id() const {
    return dataset_id.empty() ? dataset_path.stem().string() : dataset_id;
  }
};

struct StageTimings {
  double total_ms = 0.0;
  double triples_ms = 0.0;
  double selection_ms = 0.0;
  double answer_ms = 0.0;
};

struct RecordResult {
  std::string id;
  std::string prediction;
  int em = 0;  // 1 iff normalized prediction matches an acceptable answer
  std::vector<int> selected_indices;
  std::vector<double> distances;
  int triple_count = 0;
  StageTimings timings;
  bool failed = false;
  std::vector<std::string> diagnostics;
};

struct RunStats {
  std::uint64_t llm_calls = 0;
  std::uint64_t embed_calls = 0;
  std::uint64_t llm_cache_hits = 0;
  std::uint64_t llm_cache_misses = 0;
  std::uint64_t emb_cache_hits = 0;
  std::uint64_t emb_cache_misses = 0;
  std::uint64_t cache_corrupt = 0;
};

struct RunReport {
  llm::MethodId method = llm::MethodId::ks_llm;
  std::string dataset_id;
  std::string model;
  int k = 2;
  int max_tokens = 300;
  int n = 0;
  int n_failed = 0;
  double em = 0.0;  // fraction over non-failed records
  double wall_time_ms = 0.0;
  std::vector<RecordResult> per_record;  // record input order
  RunStats stats;
};

enum class ReportFormat { csv, markdown, jsonl };

ReportFormat report_format_from_name(const std::string& name);  // throws InputError

// Serializes reports: csv/markdown emit one aggregate row per report sorted
// by (dataset, method, k, max_tokens); jsonl emits the full per-record
// detail. Byte-deterministic for fixed inputs.
std::string render_reports(const std::vector<RunReport>& reports, ReportFormat format);

void emit_report(const std::vector<RunReport>& reports, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace ksllm::eval
