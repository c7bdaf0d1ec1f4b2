#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ksllm/llm/client.hpp"
#include "ksllm/llm/prompts.hpp"
#include "ksllm/triples/triples.hpp"

namespace ksllm::llm {

struct ResponseCacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t corrupt = 0;
};

// Content-addressed completion store under <cache_dir>/llm/<2-hex>/<digest>.json.
// The digest covers model, generation params and message bytes, so a warmed
// cache replays a run without any client invocation.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path cache_dir);

  std::optional<std::string> lookup(const std::string& digest);
  void store(const std::string& digest, const std::string& model, const GenParams& params,
             const std::string& response);

  ResponseCacheStats stats() const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path entry_path(const std::string& digest) const;

  std::filesystem::path root_;
  mutable std::mutex stats_mutex_;
  ResponseCacheStats stats_;
};

// Digest identifying one completion request.
std::string prompt_digest(const Prompt& prompt, std::string_view model);

// Completion routed through the cache; the raw response text is cached.
std::string complete_with_cache(const Prompt& prompt, LlmClient& client, ResponseCache* cache);

// Trims whitespace and drops one leading "Answer:" / "The answer is" label.
std::string strip_answer_label(std::string_view raw);

// Cached completion post-processed for scoring.
std::string generate_answer(const Prompt& prompt, LlmClient& client, ResponseCache* cache);

struct TripleConstruction {
  std::vector<triples::Triple> triples;
  int malformed = 0;
  std::vector<std::string> diagnostics;  // e.g. note when nothing parsed
};

// Asks the client for subject-entity triples and parses them. An empty parse
// is a diagnostic, not an error.
TripleConstruction construct_triples(const std::string& question, LlmClient& client,
                                     ResponseCache* cache);

}  // namespace ksllm::llm
