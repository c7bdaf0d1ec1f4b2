#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ksllm/embed/embedder.hpp"

namespace ksllm::embed {

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t corrupt = 0;  // entries discarded and recomputed
};

// Persistent content-addressed embedding store. One JSON file per entry under
// <cache_dir>/emb/<2-hex-prefix>/<digest>.json with keys dim/values/embedder;
// the digest covers the embedder identity and the text. Writes go through a
// temp file + rename, so concurrent writers degrade to last-writer-wins and
// readers never see partial entries.
class EmbeddingCache {
 public:
  explicit EmbeddingCache(std::filesystem::path cache_dir);

  // embed() through the cache: cached texts cost no embedder invocation.
  std::vector<EmbeddingVector> cached_embed(Embedder& embedder,
                                            const std::vector<std::string>& texts);

  CacheStats stats() const;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path entry_path(const std::string& digest) const;
  std::optional<EmbeddingVector> read_entry(const std::string& digest,
                                            const std::string& identity);
  void write_entry(const std::string& digest, const std::string& identity,
                   const EmbeddingVector& vector);

  std::filesystem::path root_;
  mutable std::mutex stats_mutex_;
  CacheStats stats_;
};

}  // namespace ksllm::embed
